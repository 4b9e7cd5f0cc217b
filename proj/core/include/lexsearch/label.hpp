#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "lexsearch/types.hpp"

namespace lexsearch {

// One entry of a label: a non-negative step value, or the infinity sentinel
// that only the initial label of a source carries. Infinity is a separate
// state, so no integer can collide with it.
class LabelEntry {
 public:
  constexpr LabelEntry(std::int64_t value) noexcept : value_(value) {}  // NOLINT

  static constexpr LabelEntry infinity() noexcept { return LabelEntry(Tag{}); }

  constexpr bool is_infinity() const noexcept { return infinite_; }
  constexpr std::int64_t value() const noexcept { return value_; }

  constexpr std::strong_ordering operator<=>(const LabelEntry& other) const noexcept {
    if (infinite_ || other.infinite_) return infinite_ <=> other.infinite_;
    return value_ <=> other.value_;
  }
  constexpr bool operator==(const LabelEntry& other) const noexcept = default;

 private:
  struct Tag {};
  constexpr explicit LabelEntry(Tag) noexcept : value_(0), infinite_(true) {}

  std::int64_t value_;
  bool infinite_ = false;
};

// A word over integers plus the infinity sentinel, stored front-to-back in
// comparison order. Both ends accept insertion in constant time.
class Label {
 public:
  Label() = default;
  Label(std::initializer_list<LabelEntry> entries) : entries_(entries) {}

  static Label source() { return Label{LabelEntry::infinity()}; }

  void append(LabelEntry e) { entries_.push_back(e); }
  void prepend(LabelEntry e) { entries_.push_front(e); }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::deque<LabelEntry>& entries() const noexcept { return entries_; }

  // Number of integer entries; the infinity sentinel is not counted.
  std::size_t integer_count() const noexcept;

  bool operator==(const Label& other) const = default;

 private:
  std::deque<LabelEntry> entries_;
};

// Prefix-is-smaller lexicographic order. When `entry_comparisons` is given,
// it is incremented once per pair of entries examined.
std::strong_ordering lex_compare(const Label& a, const Label& b,
                                 std::uint64_t* entry_comparisons = nullptr);

inline std::strong_ordering operator<=>(const Label& a, const Label& b) {
  return lex_compare(a, b);
}

enum class SearchKind { LexBFS, LexUP, LexDFS, LexDOWN };

enum class Placement { Append, Prepend };

inline constexpr SearchKind kAllSearchKinds[] = {SearchKind::LexBFS, SearchKind::LexUP,
                                                 SearchKind::LexDFS, SearchKind::LexDOWN};

// LexBFS and LexUP append, LexDFS and LexDOWN prepend.
constexpr Placement placement(SearchKind kind) noexcept {
  return kind == SearchKind::LexBFS || kind == SearchKind::LexUP ? Placement::Append
                                                                  : Placement::Prepend;
}

// Value inserted at step i (1-based) of an n-vertex search: n - i for LexBFS
// and LexDOWN, i for LexUP and LexDFS.
constexpr std::int64_t step_value(SearchKind kind, std::size_t step, std::size_t n) noexcept {
  const auto i = static_cast<std::int64_t>(step);
  const auto count = static_cast<std::int64_t>(n);
  return kind == SearchKind::LexBFS || kind == SearchKind::LexDOWN ? count - i : i;
}

// Adds exactly one integer to `label` according to `kind`.
void apply_update(Label& label, SearchKind kind, std::size_t step, std::size_t n);

inline Label update(Label label, SearchKind kind, std::size_t step, std::size_t n) {
  apply_update(label, kind, step, n);
  return label;
}

std::string_view to_string(SearchKind kind) noexcept;
std::optional<SearchKind> parse_search_kind(std::string_view name) noexcept;

// "inf" for the sentinel; entries joined by commas, no brackets.
std::string format_entries(const Label& label);
std::ostream& operator<<(std::ostream& os, const Label& label);

}  // namespace lexsearch
