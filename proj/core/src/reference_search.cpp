#include "lexsearch/reference_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

namespace lexsearch {

bool invariant_checks_requested_by_env() {
  const char* value = std::getenv("LEXSEARCH_DEBUG_INVARIANTS");
  return value != nullptr && std::strcmp(value, "1") == 0;
}

TieBreak TieBreak::follow(std::span<const Vertex> preferred) {
  Vertex max_id = 0;
  for (const Vertex v : preferred) max_id = std::max(max_id, v);
  std::vector<std::size_t> rank(static_cast<std::size_t>(max_id) + 1,
                                std::numeric_limits<std::size_t>::max());
  for (std::size_t k = preferred.size(); k-- > 0;) rank[preferred[k]] = k;
  return TieBreak(Policy::Follow, std::move(rank));
}

Vertex TieBreak::choose(std::span<const Vertex> maximal) const {
  switch (policy_) {
    case Policy::LowestId: return maximal.front();
    case Policy::HighestId: return maximal.back();
    case Policy::Follow: break;
  }
  const auto rank_of = [&](Vertex v) {
    return v < rank_.size() ? rank_[v] : std::numeric_limits<std::size_t>::max();
  };
  // min_element keeps the lowest id among equally ranked (unlisted) vertices.
  return *std::min_element(maximal.begin(), maximal.end(),
                           [&](Vertex a, Vertex b) { return rank_of(a) < rank_of(b); });
}

namespace {

struct SearchState {
  std::vector<Label> labels;
  std::vector<char> numbered;

  explicit SearchState(const Graph& g)
      : labels(g.vertex_count() + 1), numbered(g.vertex_count() + 1, 0) {
    labels[g.source()] = Label::source();
  }

  // Unnumbered vertices with a maximal label, by increasing id. When every
  // unnumbered label is empty, either restarts at the smallest unnumbered id
  // or reports an empty set.
  std::vector<Vertex> maximal_candidates(bool allow_disconnected,
                                         std::uint64_t* comparisons = nullptr,
                                         std::vector<Vertex>* labeled = nullptr) {
    std::vector<Vertex> maximal;
    const Label* best = nullptr;
    const std::size_t n = labels.size() - 1;
    for (Vertex v = 1; v <= n; ++v) {
      if (numbered[v]) continue;
      if (labeled && !labels[v].empty()) labeled->push_back(v);
      if (best == nullptr) {
        best = &labels[v];
        maximal.push_back(v);
        continue;
      }
      if (comparisons) ++*comparisons;
      const auto c = lex_compare(labels[v], *best, comparisons);
      if (c > 0) {
        best = &labels[v];
        maximal.assign(1, v);
      } else if (c == 0) {
        maximal.push_back(v);
      }
    }
    if (best != nullptr && best->empty()) {
      // No labeled candidate: the graph is disconnected.
      if (!allow_disconnected) return {};
      const Vertex restart = maximal.front();
      labels[restart] = Label::source();
      if (labeled) labeled->assign(1, restart);
      return {restart};
    }
    return maximal;
  }

  void number(const Graph& g, Vertex v, SearchKind kind, std::size_t step,
              std::uint64_t* updates = nullptr) {
    numbered[v] = 1;
    for (const Vertex w : g.neighbors(v)) {
      if (numbered[w]) continue;
      apply_update(labels[w], kind, step, g.vertex_count());
      if (updates) ++*updates;
    }
  }
};

[[noreturn]] void throw_disconnected(std::size_t step) {
  throw DisconnectedGraphError("graph is disconnected: no labeled unnumbered vertex at step " +
                               std::to_string(step));
}

}  // namespace

ReferenceResult reference_search(const Graph& g, SearchKind kind,
                                 const ReferenceOptions& options) {
  const std::size_t n = g.vertex_count();
  SearchState state(g);
  ReferenceResult result;
  result.order.reserve(n);
  result.final_labels.resize(n + 1);
  if (options.record_trace) result.trace.reserve(n);

  for (std::size_t step = 1; step <= n; ++step) {
    std::vector<Vertex> labeled;
    const auto maximal = state.maximal_candidates(
        options.allow_disconnected, &result.counters.comparisons,
        options.record_trace ? &labeled : nullptr);
    if (maximal.empty()) throw_disconnected(step);

    const Vertex chosen = options.tie_break.choose(maximal);
    result.order.push_back(chosen);
    result.final_labels[chosen] = state.labels[chosen];
    if (options.record_trace) {
      result.trace.push_back({step, chosen, state.labels[chosen], std::move(labeled)});
    }
    state.number(g, chosen, kind, step, &result.counters.label_updates);
  }
  return result;
}

std::vector<Ordering> enumerate_orderings(const Graph& g, SearchKind kind,
                                          std::span<const Vertex> prefix, std::size_t limit,
                                          bool allow_disconnected) {
  const std::size_t n = g.vertex_count();
  if (prefix.size() > n) {
    throw InvalidPrefixError(n + 1, "prefix longer than the vertex count");
  }
  std::vector<char> in_prefix(n + 1, 0);
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    const Vertex v = prefix[k];
    if (v < 1 || v > n) throw InvalidPrefixError(k + 1, "vertex out of range");
    if (in_prefix[v]) throw InvalidPrefixError(k + 1, "vertex repeated");
    in_prefix[v] = 1;
  }

  std::vector<Ordering> out;
  if (limit == 0) return out;
  Ordering current;
  current.reserve(n);

  std::function<void(SearchState&, std::size_t)> extend = [&](SearchState& state,
                                                               std::size_t step) {
    if (step > n) {
      out.push_back(current);
      return;
    }
    const auto maximal = state.maximal_candidates(allow_disconnected);
    if (maximal.empty()) throw_disconnected(step);

    if (step <= prefix.size()) {
      const Vertex forced = prefix[step - 1];
      if (!std::binary_search(maximal.begin(), maximal.end(), forced)) {
        throw InvalidPrefixError(step, "vertex " + std::to_string(forced) +
                                           " does not hold a maximal label");
      }
      state.number(g, forced, kind, step);
      current.push_back(forced);
      extend(state, step + 1);
      current.pop_back();
      return;
    }
    for (const Vertex v : maximal) {
      if (out.size() >= limit) return;
      SearchState branch = state;
      branch.number(g, v, kind, step);
      current.push_back(v);
      extend(branch, step + 1);
      current.pop_back();
    }
  };

  SearchState root(g);
  extend(root, 1);
  return out;
}

std::string format_trace_step(const TraceStep& step) {
  return "step " + std::to_string(step.step) + ": vertex " + std::to_string(step.vertex) +
         " label [" + format_entries(step.label) + "]";
}

}  // namespace lexsearch
