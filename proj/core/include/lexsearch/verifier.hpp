#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "lexsearch/graph.hpp"
#include "lexsearch/label.hpp"
#include "lexsearch/types.hpp"

namespace lexsearch {

struct Verdict {
  // Disconnected: the search runs out of labeled vertices before `step`
  // and the restart extension is off.
  enum class Status { Valid, WrongLength, NotPermutation, NotMaximal, Disconnected };

  Status status = Status::Valid;
  // Set for NotMaximal: the first failing step, the vertex the ordering
  // numbers there, and an unnumbered vertex whose label compares greater
  // (the lowest id among those with the greatest label).
  std::size_t step = 0;
  Vertex chosen = 0;
  Label chosen_label;
  Vertex witness = 0;
  Label witness_label;
  std::string message;

  bool valid() const noexcept { return status == Status::Valid; }
};

struct VerifyOptions {
  // Mirror of the engines' restart rule: when every unnumbered label is
  // empty, the smallest unnumbered id receives a fresh infinity label.
  bool allow_disconnected = false;
};

// Replays the label search with choices forced to `sigma` and reports whether
// every choice held a lexicographically maximal label. Malformed orderings
// yield an invalid verdict rather than an exception.
Verdict verify_ordering(const Graph& g, SearchKind kind, std::span<const Vertex> sigma,
                        const VerifyOptions& options = {});

}  // namespace lexsearch
