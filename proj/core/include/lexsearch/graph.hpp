#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lexsearch/types.hpp"

namespace lexsearch {

// Undirected simple graph on vertices 1..n with a designated source.
// Adjacency lists keep the order in which edges were first seen. Immutable
// once built.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  // Builds the graph from an edge list. Duplicate edges (in either
  // orientation) collapse to one; self-loops and out-of-range endpoints throw
  // InvalidGraphError, as do n == 0 and a source outside 1..n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, Vertex source = 1);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 2; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  Vertex source() const noexcept { return source_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  // Distinct edges as (min, max) pairs, in first-seen order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Graph with_source(Vertex source) const;

  // Symmetry, no self-loops, no duplicates, degree sum == 2m.
  bool is_well_formed() const;

 private:
  Graph() = default;

  std::vector<std::size_t> offsets_;  // size n + 2, offsets_[0] unused
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
  Vertex source_ = 1;
};

// "u v" lines, optional "n <count>" and "s <vertex>" headers; lines starting
// with '#' or 'c' are comments.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// "p edge n m" followed by "e u v" lines; 'c' lines are comments. The
// declared edge count must equal the number of distinct edges.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);

bool is_connected(const Graph& g);

namespace family {
struct Grid { std::size_t rows; std::size_t cols; };
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Clique { std::size_t n; };
// G(n, p) plus a random spanning tree, so the result is always connected.
struct RandomConnected { std::size_t n; double edge_probability; std::uint64_t seed; };
}  // namespace family

using GraphFamilySpec =
    std::variant<family::Grid, family::Path, family::Cycle, family::Clique, family::RandomConnected>;

// Deterministic for a given spec. Source is vertex 1. Grid vertices are
// numbered row-major.
Graph generate(const GraphFamilySpec& spec);

// Writes the graph in edge-list format, including the n and s headers.
void write_edge_list(std::ostream& out, const Graph& g);
// DIMACS has no source line; the source is not written.
void write_dimacs(std::ostream& out, const Graph& g);

}  // namespace lexsearch
