#include "lexsearch/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

namespace lexsearch {

namespace {

std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::int64_t parse_integer(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "malformed integer '" + std::string(token) + "'");
  }
  return value;
}

Vertex parse_vertex(std::string_view token, std::size_t line) {
  const std::int64_t value = parse_integer(token, line);
  if (value < 1) throw ParseError(line, "vertex id must be >= 1, got " + std::to_string(value));
  if (value > std::numeric_limits<std::int32_t>::max()) {
    throw ParseError(line, "vertex id too large: " + std::string(token));
  }
  return static_cast<Vertex>(value);
}

bool is_comment(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string_view::npos) return true;
  return line[first] == '#' || line[first] == 'c';
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, line_no);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, Vertex source) {
  if (n == 0) throw InvalidGraphError("graph must have at least one vertex");
  if (source < 1 || source > n) {
    throw InvalidGraphError("source " + std::to_string(source) + " outside 1.." +
                            std::to_string(n));
  }
  Graph g;
  g.source_ = source;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::size_t> degree(n + 2, 0);
  for (const auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InvalidGraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} outside 1.." + std::to_string(n));
    }
    if (u == v) throw InvalidGraphError("self-loop on vertex " + std::to_string(u));
    if (!seen.insert(edge_key(u, v)).second) continue;
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 2, 0);
  for (std::size_t v = 1; v <= n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n + 1]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end());
  // Re-walk the input so each list keeps first-seen order, orientation included.
  seen.clear();
  for (const auto& [u, v] : edges) {
    if (!seen.insert(edge_key(u, v)).second) continue;
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  return g;
}

Graph Graph::with_source(Vertex source) const {
  if (source < 1 || source > vertex_count()) {
    throw InvalidGraphError("source " + std::to_string(source) + " outside 1.." +
                            std::to_string(vertex_count()));
  }
  Graph copy = *this;
  copy.source_ = source;
  return copy;
}

bool Graph::is_well_formed() const {
  const std::size_t n = vertex_count();
  if (n == 0 || source_ < 1 || source_ > n) return false;
  std::set<std::pair<Vertex, Vertex>> arcs;
  std::size_t degree_sum = 0;
  for (Vertex v = 1; v <= n; ++v) {
    for (const Vertex w : neighbors(v)) {
      if (w < 1 || w > n || w == v) return false;
      if (!arcs.emplace(v, w).second) return false;
      ++degree_sum;
    }
  }
  for (const auto& [v, w] : arcs) {
    if (!arcs.contains({w, v})) return false;
  }
  return degree_sum == 2 * edges_.size();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Graph::Edge> edges;
  std::size_t header_n = 0;
  bool have_header = false;
  Vertex source = 1;
  std::size_t source_line = 0;
  std::size_t max_id = 0;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (is_comment(line)) return;
    const auto tokens = split_tokens(line);
    if (tokens.front() == "n") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      const std::int64_t count = parse_integer(tokens[1], line_no);
      if (count < 1) throw ParseError(line_no, "vertex count must be >= 1");
      header_n = static_cast<std::size_t>(count);
      have_header = true;
      return;
    }
    if (tokens.front() == "s") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 's <vertex>'");
      source = parse_vertex(tokens[1], line_no);
      source_line = line_no;
      return;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const Vertex u = parse_vertex(tokens[0], line_no);
    const Vertex v = parse_vertex(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    max_id = std::max<std::size_t>({max_id, u, v});
    edges.emplace_back(u, v);
  });

  if (have_header && header_n < max_id) {
    throw ParseError(0, "header declares n=" + std::to_string(header_n) + " but vertex " +
                            std::to_string(max_id) + " appears");
  }
  const std::size_t n = have_header ? header_n : max_id;
  if (n == 0) throw ParseError(0, "graph has no vertices");
  if (source > n) {
    throw ParseError(source_line, "source " + std::to_string(source) + " outside 1.." +
                                      std::to_string(n));
  }
  return Graph::from_edges(n, edges, source);
}

Graph parse_edge_list(std::istream& in) { return parse_edge_list(read_all(in)); }

Graph parse_dimacs(std::string_view text) {
  std::vector<Graph::Edge> edges;
  bool have_problem = false;
  std::size_t n = 0;
  std::size_t declared_m = 0;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (is_comment(line)) return;
    const auto tokens = split_tokens(line);
    if (tokens.front() == "p") {
      if (have_problem) throw ParseError(line_no, "duplicate p-line");
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      const std::int64_t count = parse_integer(tokens[2], line_no);
      const std::int64_t m = parse_integer(tokens[3], line_no);
      if (count < 1) throw ParseError(line_no, "vertex count must be >= 1");
      if (m < 0) throw ParseError(line_no, "edge count must be >= 0");
      n = static_cast<std::size_t>(count);
      declared_m = static_cast<std::size_t>(m);
      have_problem = true;
      return;
    }
    if (tokens.front() == "e") {
      if (!have_problem) throw ParseError(line_no, "edge line before p-line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const Vertex u = parse_vertex(tokens[1], line_no);
      const Vertex v = parse_vertex(tokens[2], line_no);
      if (u > n || v > n) {
        throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(u, v);
      return;
    }
    throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
  });

  if (!have_problem) throw ParseError(0, "missing p-line");
  Graph g = Graph::from_edges(n, edges, 1);
  if (g.edge_count() != declared_m) {
    throw ParseError(0, "declared m=" + std::to_string(declared_m) + ", distinct edges=" +
                            std::to_string(g.edge_count()));
  }
  return g;
}

Graph parse_dimacs(std::istream& in) { return parse_dimacs(read_all(in)); }

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

namespace {

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw InvalidGraphError(std::string(what) + " must be positive");
}

Graph build(const family::Grid& spec) {
  require_positive(spec.rows, "grid rows");
  require_positive(spec.cols, "grid cols");
  const auto id = [&](std::size_t r, std::size_t c) {
    return static_cast<Vertex>(r * spec.cols + c + 1);
  };
  std::vector<Graph::Edge> edges;
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.cols; ++c) {
      if (c + 1 < spec.cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < spec.rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::from_edges(spec.rows * spec.cols, edges);
}

Graph build(const family::Path& spec) {
  require_positive(spec.n, "path length");
  std::vector<Graph::Edge> edges;
  for (Vertex v = 1; v < spec.n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(spec.n, edges);
}

Graph build(const family::Cycle& spec) {
  if (spec.n < 3) throw InvalidGraphError("cycle needs at least 3 vertices");
  std::vector<Graph::Edge> edges;
  for (Vertex v = 1; v < spec.n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(static_cast<Vertex>(spec.n), 1);
  return Graph::from_edges(spec.n, edges);
}

Graph build(const family::Clique& spec) {
  require_positive(spec.n, "clique size");
  std::vector<Graph::Edge> edges;
  for (Vertex u = 1; u <= spec.n; ++u) {
    for (Vertex v = u + 1; v <= spec.n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(spec.n, edges);
}

Graph build(const family::RandomConnected& spec) {
  require_positive(spec.n, "vertex count");
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    throw InvalidGraphError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<Graph::Edge> edges;
  const std::size_t n = spec.n;

  // Geometric skipping over the n(n-1)/2 candidate pairs, in (v, w < v) order.
  const double p = spec.edge_probability;
  if (p >= 1.0) {
    for (Vertex v = 2; v <= n; ++v)
      for (Vertex w = 1; w < v; ++w) edges.emplace_back(w, v);
  } else if (p > 0.0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;  // 0-based
    std::int64_t w = -1;
    const auto count = static_cast<std::int64_t>(n);
    while (v < count) {
      const double r = unit(rng);
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < count) {
        w -= v;
        ++v;
      }
      if (v < count) edges.emplace_back(static_cast<Vertex>(w + 1), static_cast<Vertex>(v + 1));
    }
  }

  // Random spanning tree over a shuffled vertex order.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t k = 1; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    edges.emplace_back(order[pick(rng)], order[k]);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph generate(const GraphFamilySpec& spec) {
  return std::visit([](const auto& s) { return build(s); }, spec);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n' << "s " << g.source() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

}  // namespace lexsearch
