// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lexsearch/search.hpp"
#include "test_support.hpp"

namespace {

using namespace lexsearch;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ' ' << name << ": " << detail << '\n'
            << std::flush;
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(precision);
  s << v;
  return s.str();
}

std::string join(const Ordering& order) {
  std::string out;
  for (const Vertex v : order) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

struct GoldenRun {
  SearchKind kind;
  const char* name;
  const Ordering* order;
  std::vector<const char*> cells;  // labels at steps 2..n as digit strings
};

std::vector<GoldenRun> golden_runs() {
  return {
      {SearchKind::LexBFS, "lexbfs", &testing::kGridLexBFS,
       {"8", "8", "76", "7", "6", "54", "53", "21"}},
      {SearchKind::LexUP, "lexup", &testing::kGridLexUP,
       {"1", "2", "3", "4", "5", "6", "246", "187"}},
      {SearchKind::LexDFS, "lexdfs", &testing::kGridLexDFS,
       {"1", "2", "31", "4", "53", "6", "73", "82"}},
      {SearchKind::LexDOWN, "lexdown", &testing::kGridLexDOWN,
       {"8", "8", "7", "67", "6", "45", "2", "134"}},
  };
}

void golden_orderings() {
  const auto start = Clock::now();
  const Graph g = testing::grid_fixture();
  std::string detail;
  bool pass = true;
  for (const auto& run : golden_runs()) {
    const Verdict v = verify_ordering(g, run.kind, *run.order);
    detail += std::string(run.name) + (v.valid() ? " valid" : " INVALID (" + v.message + ")") + "; ";
    pass = pass && v.valid();
  }
  const double secs = seconds_since(start);
  pass = pass && secs < 1.0;
  report(1, "golden-orderings", pass, detail + "time " + fmt(secs, 4) + "s");
}

void golden_labels() {
  const Graph g = testing::grid_fixture();
  std::string detail;
  bool pass = true;
  for (const auto& run : golden_runs()) {
    ReferenceOptions opts;
    opts.tie_break = TieBreak::follow(*run.order);
    const auto r = reference_search(g, run.kind, opts);
    std::vector<std::string> mismatches;
    if (r.order != *run.order) mismatches.push_back("order " + join(r.order));
    for (std::size_t k = 0; k < run.cells.size(); ++k) {
      const std::size_t step = k + 2;
      const Label expected = testing::label_from_digits(run.cells[k]);
      const TraceStep& got = r.trace[step - 1];
      if (got.label != expected || got.vertex != (*run.order)[step - 1]) {
        std::ostringstream s;
        s << "step " << step << " expected vertex " << (*run.order)[step - 1] << ' '
          << expected << " got vertex " << got.vertex << ' ' << got.label;
        mismatches.push_back(s.str());
      }
    }
    detail += std::string(run.name) + ' ';
    if (mismatches.empty()) {
      detail += "match; ";
    } else {
      pass = false;
      detail += "MISMATCH [";
      for (std::size_t k = 0; k < mismatches.size(); ++k) {
        detail += (k ? ", " : "") + mismatches[k];
      }
      detail += "]; ";
    }
  }
  report(2, "golden-labels", pass, detail);
}

Graph random_small(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  return testing::random_connected(rng, size(rng), density(rng));
}

void oracle_small() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240501);
  const std::size_t graphs = 500;
  const int permutations = 1000;
  std::size_t output_misses = 0, verdict_mismatches = 0, checked = 0;
  for (std::size_t k = 0; k < graphs; ++k) {
    const Graph g = random_small(rng);
    const std::size_t n = g.vertex_count();
    for (const SearchKind kind : kAllSearchKinds) {
      const auto listed = enumerate_orderings(g, kind);
      const std::set<Ordering> members(listed.begin(), listed.end());
      if (!members.count(run_search(g, kind, Engine::Fast).order)) ++output_misses;
      Ordering p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i + 1);
      for (int t = 0; t < permutations; ++t) {
        std::shuffle(p.begin(), p.end(), rng);
        if (verify_ordering(g, kind, p).valid() != (members.count(p) == 1)) ++verdict_mismatches;
        ++checked;
      }
    }
  }
  report(3, "oracle-small", output_misses == 0 && verdict_mismatches == 0,
         std::to_string(graphs) + " graphs (n<=7) x 4 kinds; fast outputs outside enumeration: " +
             std::to_string(output_misses) + "; verifier/membership disagreements: " +
             std::to_string(verdict_mismatches) + " of " + std::to_string(checked) +
             " permutations; time " + fmt(seconds_since(start)) + "s");
}

std::vector<Graph> medium_corpus() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(8, 300);
  std::vector<Graph> out;
  for (std::size_t k = 0; k < 200; ++k) {
    const std::size_t n = size(rng);
    const double nn = static_cast<double>(n);
    const double densities[] = {0.0, 1.0 / nn, 3.0 / nn, 8.0 / nn, 0.1, 0.3};
    out.push_back(testing::random_connected(rng, n, std::min(1.0, densities[k % 6])));
  }
  return out;
}

void oracle_medium(const std::vector<Graph>& corpus) {
  const auto start = Clock::now();
  EngineOptions checked;
  checked.check_invariants = true;
  std::size_t rejected = 0, assertions = 0;
  for (const Graph& g : corpus) {
    for (const SearchKind kind : kAllSearchKinds) {
      try {
        const auto r = run_search(g, kind, Engine::Fast, checked);
        if (!verify_ordering(g, kind, r.order).valid()) ++rejected;
      } catch (const InvariantViolation& e) {
        ++assertions;
        std::cout << "  invariant violation (" << to_string(kind) << "): " << e.what() << '\n';
      }
    }
  }
  report(4, "oracle-medium", rejected == 0 && assertions == 0,
         std::to_string(corpus.size()) + " graphs (n in [8,300]) x 4 kinds; verifier rejections: " +
             std::to_string(rejected) + "; invariant violations: " + std::to_string(assertions) +
             "; time " + fmt(seconds_since(start)) + "s");
}

double normalizer(SearchKind kind, Engine engine, std::size_t n_, std::size_t m_) {
  const double n = static_cast<double>(n_);
  const double m = static_cast<double>(m_);
  if (engine == Engine::Reference) return n * m;
  if (kind == SearchKind::LexBFS || kind == SearchKind::LexUP) return n + m;
  return n + m * std::log2(m);
}

void complexity() {
  const auto start = Clock::now();
  const std::vector<std::size_t> sizes{1000, 2000, 4000, 8000, 16000, 32000};
  std::vector<Graph> graphs;
  for (const std::size_t n : sizes) {
    // G(n,p) with about 3n edges plus a spanning tree: m close to 4n.
    const double p = 6.0 / static_cast<double>(n - 1);
    graphs.push_back(generate(family::RandomConnected{n, p, 1000 + n}));
  }
  bool pass = true;
  std::string detail;
  for (const Engine engine : {Engine::Fast, Engine::Reference}) {
    for (const SearchKind kind : kAllSearchKinds) {
      double lo = INFINITY, hi = 0.0;
      std::string ratios;
      for (const Graph& g : graphs) {
        if (engine == Engine::Reference && g.vertex_count() > 4000) continue;
        const auto r = run_search(g, kind, engine);
        const double ratio = static_cast<double>(r.counters.total()) /
                             normalizer(kind, engine, g.vertex_count(), g.edge_count());
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        ratios += (ratios.empty() ? "" : ",") + fmt(ratio, 3);
      }
      const double spread = hi / lo;
      pass = pass && spread <= 3.0;
      detail += std::string(to_string(kind)) + '/' + std::string(to_string(engine)) + " spread " +
                fmt(spread) + " (" + ratios + "); ";
    }
  }
  const double secs = seconds_since(start);
  pass = pass && secs < 120.0;
  std::string shape;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    shape += (k ? "," : "") + std::to_string(graphs[k].vertex_count()) + "/" +
             std::to_string(graphs[k].edge_count());
  }
  report(5, "complexity", pass, "n/m " + shape + "; " + detail + "time " + fmt(secs) + "s");
}

void label_mass(const std::vector<Graph>& medium) {
  std::size_t runs = 0, violations = 0;
  std::vector<Graph> corpus = testing::corpus(100, 1, 60, 5150);
  corpus.insert(corpus.end(), medium.begin(), medium.end());
  for (const Graph& g : corpus) {
    for (const SearchKind kind : kAllSearchKinds) {
      ReferenceOptions opts;
      opts.record_trace = false;
      const auto r = reference_search(g, kind, opts);
      std::size_t mass = 0;
      for (Vertex v = 1; v <= g.vertex_count(); ++v) mass += r.final_labels[v].integer_count();
      if (mass > 2 * g.edge_count()) ++violations;
      ++runs;
    }
  }
  report(6, "label-mass", violations == 0,
         std::to_string(runs) + " runs; violations of sum <= 2m: " + std::to_string(violations));
}

void negative_control(const std::vector<Graph>& corpus) {
  std::size_t rejected = 0, unseeded_rejected = 0;
  std::string first;
  for (const Graph& g : corpus) {
    const auto r = flat_lexup(g, {}, PartitionSeeding::AllVertices);
    const Verdict v = verify_ordering(g, SearchKind::LexUP, r.order);
    if (!v.valid()) {
      if (rejected == 0) first = " (first: n=" + std::to_string(g.vertex_count()) + ", " + v.message + ")";
      ++rejected;
    }
    // Context: the flat list without seeding is itself not a correct LexUP.
    const auto u = flat_lexup(g, {}, PartitionSeeding::LabeledOnly);
    if (!verify_ordering(g, SearchKind::LexUP, u.order).valid()) ++unseeded_rejected;
  }
  report(7, "negative-control", rejected > 0,
         "LexUP with every vertex seeded into the partition rejected on " +
             std::to_string(rejected) + " of " + std::to_string(corpus.size()) + " graphs" + first +
             "; flat list without seeding rejected on " + std::to_string(unseeded_rejected));
}

void uniqueness() {
  const Graph g = testing::grid_fixture();
  const Ordering prefix{1, 2};
  const auto down = enumerate_orderings(g, SearchKind::LexDOWN, prefix);
  const auto bfs = enumerate_orderings(g, SearchKind::LexBFS, prefix);
  std::string detail = "lexdown extensions of [1,2]: " + std::to_string(down.size());
  if (down.size() == 1) detail += " (" + join(down.front()) + ")";
  detail += "; lexbfs extensions: " + std::to_string(bfs.size());
  report(8, "uniqueness", down.size() == 1, detail);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  golden_orderings();
  golden_labels();
  oracle_small();
  const auto medium = medium_corpus();
  oracle_medium(medium);
  complexity();
  label_mass(medium);
  negative_control(medium);
  uniqueness();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << fmt(seconds_since(start)) << "s\n";
  return failures == 0 ? 0 : 1;
}
