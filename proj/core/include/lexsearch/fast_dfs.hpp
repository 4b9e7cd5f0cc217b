#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "lexsearch/counters.hpp"
#include "lexsearch/graph.hpp"
#include "lexsearch/types.hpp"

namespace lexsearch {

// Per-vertex priority in the LexDFS/LexDOWN engine. Never-labeled vertices
// hold the minus-infinity sentinel, which sorts below every integer.
class OrderKey {
 public:
  constexpr OrderKey() noexcept = default;  // minus infinity
  constexpr explicit OrderKey(std::int64_t value) noexcept : value_(value), finite_(true) {}

  static constexpr OrderKey minus_infinity() noexcept { return OrderKey(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr std::int64_t value() const noexcept { return value_; }

  constexpr std::strong_ordering operator<=>(const OrderKey& other) const noexcept {
    if (!finite_ || !other.finite_) return finite_ <=> other.finite_;
    return value_ <=> other.value_;
  }
  constexpr bool operator==(const OrderKey&) const noexcept = default;

 private:
  std::int64_t value_ = 0;
  bool finite_ = false;
};

enum class SortDirection { Ascending, Descending };

struct SortStats {
  std::uint64_t comparisons = 0;
  std::uint64_t elements = 0;
  // Pairs of distinct vertices found holding the same finite key. Live runs
  // never produce these.
  std::uint64_t duplicate_finite_keys = 0;
};

// Stable sort of `neighbors` by `keys[v]` (indexed by vertex id). Vertices
// tied at minus infinity come out by ascending id in either direction.
std::vector<Vertex> sort_neighbors(std::span<const Vertex> neighbors,
                                   std::span<const OrderKey> keys, SortDirection direction,
                                   SortStats* stats = nullptr);

// LexDFS ordering in O(n + m log m): the unnumbered labeled vertices sit in a
// list kept in decreasing label order; each step moves the sorted unnumbered
// neighbors of the numbered vertex to the front.
EngineResult fast_lexdfs(const Graph& g, const EngineOptions& options = {});

// LexDOWN variant: updated neighbors go to the rear of the list, processed in
// descending key order, and priorities count down.
EngineResult fast_lexdown(const Graph& g, const EngineOptions& options = {});

}  // namespace lexsearch
