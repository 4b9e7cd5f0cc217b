#include "lexsearch/search.hpp"

namespace lexsearch {

std::string_view to_string(Engine engine) noexcept {
  return engine == Engine::Fast ? "fast" : "reference";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  if (name == "fast") return Engine::Fast;
  if (name == "reference") return Engine::Reference;
  return std::nullopt;
}

EngineResult run_search(const Graph& g, SearchKind kind, Engine engine,
                        const EngineOptions& options) {
  if (engine == Engine::Reference) {
    ReferenceOptions ref;
    ref.allow_disconnected = options.allow_disconnected;
    ref.record_trace = false;
    auto result = reference_search(g, kind, ref);
    return {std::move(result.order), result.counters};
  }
  switch (kind) {
    case SearchKind::LexBFS: return fast_lexbfs(g, options);
    case SearchKind::LexUP: return fast_lexup(g, options);
    case SearchKind::LexDFS: return fast_lexdfs(g, options);
    case SearchKind::LexDOWN: return fast_lexdown(g, options);
  }
  return {};
}

}  // namespace lexsearch
