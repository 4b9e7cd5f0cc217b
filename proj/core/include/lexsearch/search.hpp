#pragma once

#include <optional>
#include <string_view>

#include "lexsearch/counters.hpp"
#include "lexsearch/fast_bfs.hpp"
#include "lexsearch/fast_dfs.hpp"
#include "lexsearch/graph.hpp"
#include "lexsearch/label.hpp"
#include "lexsearch/reference_search.hpp"
#include "lexsearch/verifier.hpp"

namespace lexsearch {

enum class Engine { Fast, Reference };

std::string_view to_string(Engine engine) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

// Dispatches to the fast engine for `kind` or to the reference search with
// lowest-id tie-breaking.
EngineResult run_search(const Graph& g, SearchKind kind, Engine engine,
                        const EngineOptions& options = {});

}  // namespace lexsearch
