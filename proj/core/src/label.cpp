#include "lexsearch/label.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>

namespace lexsearch {

std::size_t Label::integer_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const LabelEntry& e) { return !e.is_infinity(); }));
}

std::strong_ordering lex_compare(const Label& a, const Label& b,
                                 std::uint64_t* entry_comparisons) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  const std::size_t common = std::min(x.size(), y.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (entry_comparisons) ++*entry_comparisons;
    if (const auto c = x[k] <=> y[k]; c != 0) return c;
  }
  return x.size() <=> y.size();
}

void apply_update(Label& label, SearchKind kind, std::size_t step, std::size_t n) {
  const LabelEntry value(step_value(kind, step, n));
  if (placement(kind) == Placement::Append) {
    label.append(value);
  } else {
    label.prepend(value);
  }
}

std::string_view to_string(SearchKind kind) noexcept {
  switch (kind) {
    case SearchKind::LexBFS: return "lexbfs";
    case SearchKind::LexUP: return "lexup";
    case SearchKind::LexDFS: return "lexdfs";
    case SearchKind::LexDOWN: return "lexdown";
  }
  return "unknown";
}

std::optional<SearchKind> parse_search_kind(std::string_view name) noexcept {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const SearchKind kind : kAllSearchKinds) {
    if (lowered == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::string format_entries(const Label& label) {
  std::string out;
  for (const LabelEntry& e : label.entries()) {
    if (!out.empty()) out += ',';
    out += e.is_infinity() ? std::string("inf") : std::to_string(e.value());
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Label& label) {
  return os << '[' << format_entries(label) << ']';
}

}  // namespace lexsearch
