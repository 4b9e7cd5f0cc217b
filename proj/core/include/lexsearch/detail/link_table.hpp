#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace lexsearch::detail {

inline constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

// Doubly linked chains threaded through dense integer ids. An id is linked
// into at most one chain at a time, so the id itself is the node handle.
// Several chains may share one table (e.g. one chain per partition set).
class LinkTable {
 public:
  struct Chain {
    std::uint32_t first = kNil;
    std::uint32_t last = kNil;
    std::size_t size = 0;

    bool empty() const noexcept { return size == 0; }
  };

  LinkTable() = default;
  explicit LinkTable(std::size_t capacity) { grow(capacity); }

  void grow(std::size_t capacity) {
    if (capacity <= next_.size()) return;
    next_.resize(capacity, kNil);
    prev_.resize(capacity, kNil);
    linked_.resize(capacity, 0);
  }

  std::size_t capacity() const noexcept { return next_.size(); }
  bool linked(std::uint32_t id) const noexcept { return linked_[id] != 0; }
  std::uint32_t next(std::uint32_t id) const noexcept { return next_[id]; }
  std::uint32_t prev(std::uint32_t id) const noexcept { return prev_[id]; }

  void push_front(Chain& chain, std::uint32_t id) noexcept {
    assert(!linked(id));
    prev_[id] = kNil;
    next_[id] = chain.first;
    if (chain.first != kNil) prev_[chain.first] = id; else chain.last = id;
    chain.first = id;
    link(chain, id);
  }

  void push_back(Chain& chain, std::uint32_t id) noexcept {
    assert(!linked(id));
    next_[id] = kNil;
    prev_[id] = chain.last;
    if (chain.last != kNil) next_[chain.last] = id; else chain.first = id;
    chain.last = id;
    link(chain, id);
  }

  // Links `id` immediately before `before`, which must be in `chain`.
  void insert_before(Chain& chain, std::uint32_t before, std::uint32_t id) noexcept {
    assert(!linked(id) && linked(before));
    const std::uint32_t p = prev_[before];
    prev_[id] = p;
    next_[id] = before;
    prev_[before] = id;
    if (p != kNil) next_[p] = id; else chain.first = id;
    link(chain, id);
  }

  void erase(Chain& chain, std::uint32_t id) noexcept {
    assert(linked(id));
    const std::uint32_t p = prev_[id];
    const std::uint32_t n = next_[id];
    if (p != kNil) next_[p] = n; else chain.first = n;
    if (n != kNil) prev_[n] = p; else chain.last = p;
    next_[id] = prev_[id] = kNil;
    linked_[id] = 0;
    --chain.size;
  }

  template <typename Fn>
  void for_each(const Chain& chain, Fn&& fn) const {
    for (std::uint32_t id = chain.first; id != kNil; id = next_[id]) fn(id);
  }

 private:
  void link(Chain& chain, std::uint32_t id) noexcept {
    linked_[id] = 1;
    ++chain.size;
  }

  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::vector<std::uint8_t> linked_;
};

}  // namespace lexsearch::detail
