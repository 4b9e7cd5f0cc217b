#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lexsearch/counters.hpp"
#include "lexsearch/graph.hpp"
#include "lexsearch/label.hpp"
#include "lexsearch/types.hpp"

namespace lexsearch {

// Chooses among the candidates whose labels are all lexicographically
// maximal at a step.
class TieBreak {
 public:
  static TieBreak lowest_id() { return TieBreak(Policy::LowestId, {}); }
  static TieBreak highest_id() { return TieBreak(Policy::HighestId, {}); }
  // Prefer the candidate that appears earliest in `preferred`; candidates
  // missing from it rank after all listed ones, by lowest id.
  static TieBreak follow(std::span<const Vertex> preferred);

  // `maximal` is sorted by increasing id and non-empty.
  Vertex choose(std::span<const Vertex> maximal) const;

 private:
  enum class Policy { LowestId, HighestId, Follow };
  TieBreak(Policy policy, std::vector<std::size_t> rank)
      : policy_(policy), rank_(std::move(rank)) {}

  Policy policy_;
  std::vector<std::size_t> rank_;  // by vertex id, Follow only
};

struct TraceStep {
  std::size_t step = 0;
  Vertex vertex = 0;
  Label label;                     // label of `vertex` when it was chosen
  std::vector<Vertex> candidates;  // labeled unnumbered vertices, by id
};

using SearchTrace = std::vector<TraceStep>;

struct ReferenceOptions {
  TieBreak tie_break = TieBreak::lowest_id();
  bool allow_disconnected = false;
  bool record_trace = true;
};

struct ReferenceResult {
  Ordering order;
  SearchTrace trace;  // empty unless record_trace
  // Label of every vertex when it was numbered, indexed by id (slot 0 unused).
  std::vector<Label> final_labels;
  OpCounters counters;
};

// The generic O(nm) label search: at every step number an unnumbered vertex
// with a maximal label, then update the labels of its unnumbered neighbors.
// Throws DisconnectedGraphError when the graph is disconnected and the
// extension is off.
ReferenceResult reference_search(const Graph& g, SearchKind kind,
                                 const ReferenceOptions& options = {});

// Every ordering the label search can produce under some tie-breaking that
// starts with `prefix`, in lexicographic order of vertex ids, at most `limit`
// of them. Throws InvalidPrefixError at the first prefix entry that is not a
// maximal candidate.
std::vector<Ordering> enumerate_orderings(
    const Graph& g, SearchKind kind, std::span<const Vertex> prefix = {},
    std::size_t limit = std::numeric_limits<std::size_t>::max(),
    bool allow_disconnected = false);

// "step i: vertex v label [a,b,c]"
std::string format_trace_step(const TraceStep& step);

}  // namespace lexsearch
