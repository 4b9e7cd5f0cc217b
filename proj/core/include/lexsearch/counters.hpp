#pragma once

#include <cstdint>

#include "lexsearch/types.hpp"

namespace lexsearch {

// Elementary-operation counts used as a desk-scale stand-in for running time.
struct OpCounters {
  std::uint64_t node_moves = 0;     // list unlink/relink operations
  std::uint64_t comparisons = 0;    // key or label-entry comparisons
  std::uint64_t sort_elements = 0;  // elements handed to per-step sorts
  std::uint64_t set_creations = 0;  // partition or tree refinement only
  std::uint64_t set_removals = 0;   // partition or tree refinement only
  std::uint64_t label_updates = 0;  // reference engine only
  std::uint64_t tree_descents = 0;  // refinement-tree walks, LexUP only

  std::uint64_t total() const noexcept {
    return node_moves + comparisons + sort_elements + set_creations + set_removals +
           label_updates + tree_descents;
  }
};

struct EngineOptions {
  // Materialize labels and check the engine invariants after every step;
  // failures throw InvariantViolation.
  bool check_invariants = false;
  // When no labeled unnumbered vertex is left, restart from the smallest-id
  // unnumbered vertex with a fresh infinity label instead of throwing
  // DisconnectedGraphError.
  bool allow_disconnected = false;
};

struct EngineResult {
  Ordering order;
  OpCounters counters;
};

// True when LEXSEARCH_DEBUG_INVARIANTS=1 is set in the environment.
bool invariant_checks_requested_by_env();

}  // namespace lexsearch
