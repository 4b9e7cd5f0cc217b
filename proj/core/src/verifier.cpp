#include "lexsearch/verifier.hpp"

#include <sstream>
#include <vector>

namespace lexsearch {

// Shares nothing with the search engines beyond the label rules.
Verdict verify_ordering(const Graph& g, SearchKind kind, std::span<const Vertex> sigma,
                        const VerifyOptions& options) {
  const std::size_t n = g.vertex_count();
  Verdict verdict;
  if (sigma.size() != n) {
    verdict.status = Verdict::Status::WrongLength;
    verdict.message = "not a permutation: expected " + std::to_string(n) + " entries, got " +
                      std::to_string(sigma.size());
    return verdict;
  }
  std::vector<char> seen(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex v = sigma[k];
    if (v < 1 || v > n || seen[v]) {
      verdict.status = Verdict::Status::NotPermutation;
      verdict.message = "not a permutation: entry " + std::to_string(k + 1) + " (" +
                        std::to_string(v) + ") " + (v < 1 || v > n ? "out of range" : "repeated");
      return verdict;
    }
    seen[v] = 1;
  }

  std::vector<Label> labels(n + 1);
  std::vector<char> numbered(n + 1, 0);
  labels[g.source()] = Label::source();

  for (std::size_t step = 1; step <= n; ++step) {
    const Vertex chosen = sigma[step - 1];

    if (options.allow_disconnected) {
      Vertex first_unnumbered = 0;
      bool any_labeled = false;
      for (Vertex v = 1; v <= n && !any_labeled; ++v) {
        if (numbered[v]) continue;
        if (first_unnumbered == 0) first_unnumbered = v;
        any_labeled = !labels[v].empty();
      }
      if (!any_labeled) labels[first_unnumbered] = Label::source();
    }

    Vertex witness = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (numbered[v] || v == chosen) continue;
      const Label& best = witness == 0 ? labels[chosen] : labels[witness];
      if (lex_compare(labels[v], best) > 0) witness = v;
    }
    if (witness != 0) {
      verdict.status = Verdict::Status::NotMaximal;
      verdict.step = step;
      verdict.chosen = chosen;
      verdict.chosen_label = labels[chosen];
      verdict.witness = witness;
      verdict.witness_label = labels[witness];
      std::ostringstream msg;
      msg << "step " << step << ": vertex " << chosen << " has label " << labels[chosen]
          << " but vertex " << witness << " has greater label " << labels[witness];
      verdict.message = msg.str();
      return verdict;
    }

    if (labels[chosen].empty()) {
      // Every unnumbered label is empty: the search stops here.
      verdict.status = Verdict::Status::Disconnected;
      verdict.step = step;
      verdict.chosen = chosen;
      verdict.message = "step " + std::to_string(step) +
                        ": no labeled unnumbered vertex (graph is disconnected)";
      return verdict;
    }

    numbered[chosen] = 1;
    for (const Vertex w : g.neighbors(chosen)) {
      if (!numbered[w]) apply_update(labels[w], kind, step, n);
    }
  }
  return verdict;
}

}  // namespace lexsearch
