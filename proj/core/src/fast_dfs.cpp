#include "lexsearch/fast_dfs.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "lexsearch/detail/link_table.hpp"
#include "lexsearch/label.hpp"

namespace lexsearch {

std::vector<Vertex> sort_neighbors(std::span<const Vertex> neighbors,
                                   std::span<const OrderKey> keys, SortDirection direction,
                                   SortStats* stats) {
  std::vector<Vertex> sorted(neighbors.begin(), neighbors.end());
  std::uint64_t comparisons = 0;
  std::stable_sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
    ++comparisons;
    const OrderKey& ka = keys[a];
    const OrderKey& kb = keys[b];
    if (ka != kb) return direction == SortDirection::Ascending ? ka < kb : ka > kb;
    return !ka.is_finite() && a < b;
  });
  if (stats) {
    stats->comparisons += comparisons;
    stats->elements += sorted.size();
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      const OrderKey& key = keys[sorted[k]];
      if (key.is_finite() && key == keys[sorted[k - 1]]) ++stats->duplicate_finite_keys;
    }
  }
  return sorted;
}

namespace {

using detail::kNil;
using detail::LinkTable;

// Shared engine for LexDFS (front insertion, counting up) and LexDOWN (rear
// insertion, counting down).
class OrderListSearch {
 public:
  OrderListSearch(const Graph& g, SearchKind kind, const EngineOptions& options)
      : g_(g),
        kind_(kind),
        to_front_(kind == SearchKind::LexDFS),
        options_(options),
        n_(g.vertex_count()),
        order_(n_ + 1),
        numbered_(n_ + 1, 0),
        links_(n_ + 1) {
    if (options_.check_invariants) labels_.resize(n_ + 1);
    enlist_fresh(g_.source());
  }

  EngineResult run() {
    EngineResult result;
    result.order.reserve(n_);
    for (std::size_t step = 1; step <= n_; ++step) {
      if (unnumbered_.empty()) restart(step);
      const Vertex v = unnumbered_.first;
      links_.erase(unnumbered_, v);
      numbered_[v] = 1;
      numbered_degree_sum_ += g_.degree(v);
      result.order.push_back(v);
      relabel_neighbors(v, step);
      if (options_.check_invariants) check_invariants(step);
    }
    result.counters = counters_;
    return result;
  }

 private:
  // Source, or restart vertex under the disconnected extension.
  void enlist_fresh(Vertex v) {
    order_[v] = OrderKey(0);
    links_.push_back(unnumbered_, v);
    if (options_.check_invariants) labels_[v] = Label::source();
  }

  void restart(std::size_t step) {
    if (!options_.allow_disconnected) {
      throw DisconnectedGraphError(
          "graph is disconnected: no labeled unnumbered vertex at step " + std::to_string(step));
    }
    while (numbered_[restart_cursor_]) ++restart_cursor_;
    enlist_fresh(restart_cursor_);
  }

  void relabel_neighbors(Vertex v, std::size_t step) {
    scratch_.clear();
    for (const Vertex w : g_.neighbors(v)) {
      if (!numbered_[w]) scratch_.push_back(w);
    }
    SortStats stats;
    const auto sorted = sort_neighbors(
        scratch_, order_, to_front_ ? SortDirection::Ascending : SortDirection::Descending,
        &stats);
    counters_.comparisons += stats.comparisons;
    counters_.sort_elements += stats.elements;
    if (options_.check_invariants && stats.duplicate_finite_keys != 0) {
      fail(step, "two listed vertices share an order value");
    }

    for (const Vertex w : sorted) {
      if (order_[w].is_finite()) {
        links_.erase(unnumbered_, w);
        ++counters_.node_moves;
      }
      if (to_front_) {
        links_.push_front(unnumbered_, w);
        ++max_;
      } else {
        links_.push_back(unnumbered_, w);
        --max_;
      }
      ++counters_.node_moves;
      order_[w] = OrderKey(max_);
      if (options_.check_invariants) apply_update(labels_[w], kind_, step, n_);
    }
  }

  [[noreturn]] void fail(std::size_t step, const std::string& what) const {
    throw InvariantViolation(std::string(to_string(kind_)) + " step " + std::to_string(step) +
                             ": " + what);
  }

  void check_invariants(std::size_t step) const {
    std::size_t labeled_unnumbered = 0;
    for (Vertex v = 1; v <= n_; ++v) {
      if (numbered_[v]) {
        if (links_.linked(v)) fail(step, "numbered vertex still listed");
        continue;
      }
      if (!labels_[v].empty()) ++labeled_unnumbered;
      if (order_[v].is_finite() == labels_[v].empty()) {
        fail(step, "order sentinel disagrees with label emptiness for vertex " +
                       std::to_string(v));
      }
      if (links_.linked(v) == labels_[v].empty()) {
        fail(step, "list membership disagrees with label for vertex " + std::to_string(v));
      }
    }
    if (labeled_unnumbered != unnumbered_.size) fail(step, "list size mismatch");

    Vertex prev = kNil;
    for (Vertex v = unnumbered_.first; v != kNil; v = links_.next(v)) {
      if (!order_[v].is_finite()) fail(step, "listed vertex without order");
      if (to_front_ ? order_[v].value() > max_ : order_[v].value() < max_) {
        fail(step, "max does not bound vertex " + std::to_string(v));
      }
      if (prev != kNil) {
        if (!(order_[prev] > order_[v])) {
          fail(step, "orders not strictly decreasing at vertex " + std::to_string(v));
        }
        if (lex_compare(labels_[prev], labels_[v]) < 0) {
          std::ostringstream msg;
          msg << "labels out of order: " << prev << labels_[prev] << " before " << v
              << labels_[v];
          fail(step, msg.str());
        }
      }
      prev = v;
    }
    const std::uint64_t magnitude = static_cast<std::uint64_t>(max_ < 0 ? -max_ : max_);
    if (magnitude > numbered_degree_sum_) fail(step, "|max| exceeds numbered degree sum");
  }

  const Graph& g_;
  SearchKind kind_;
  bool to_front_;
  EngineOptions options_;
  std::size_t n_;

  std::vector<OrderKey> order_;
  std::vector<char> numbered_;
  LinkTable links_;
  LinkTable::Chain unnumbered_;
  std::int64_t max_ = 0;
  std::uint64_t numbered_degree_sum_ = 0;
  Vertex restart_cursor_ = 1;
  std::vector<Label> labels_;  // only with check_invariants
  std::vector<Vertex> scratch_;
  OpCounters counters_;
};

}  // namespace

EngineResult fast_lexdfs(const Graph& g, const EngineOptions& options) {
  return OrderListSearch(g, SearchKind::LexDFS, options).run();
}

EngineResult fast_lexdown(const Graph& g, const EngineOptions& options) {
  return OrderListSearch(g, SearchKind::LexDOWN, options).run();
}

}  // namespace lexsearch
