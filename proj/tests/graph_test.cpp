#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "lexsearch/graph.hpp"
#include "test_support.hpp"

namespace lexsearch {
namespace {

std::set<Graph::Edge> edge_set(const Graph& g) {
  return {g.edges().begin(), g.edges().end()};
}

TEST(ParseEdgeList, PathGraph) {
  const Graph g = parse_edge_list("1 2\n2 3");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.source(), 1u);
  EXPECT_TRUE(g.is_well_formed());
}

TEST(ParseEdgeList, DuplicateEdgesCollapse) {
  const Graph g = parse_edge_list("1 2\n1 2\n2 1\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_EQ(g.degree(2), 1u);
}

TEST(ParseEdgeList, GridFixture) {
  const Graph g = testing::grid_fixture();
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_TRUE(g.is_well_formed());
}

TEST(ParseEdgeList, HeadersAndComments) {
  const Graph g = parse_edge_list(
      "# a comment\n"
      "c another comment\n"
      "n 5\n"
      "s 3\n"
      "\n"
      "1 2\r\n"
      "   2 3\n");
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.source(), 3u);
  EXPECT_EQ(g.degree(5), 0u);
}

TEST(ParseEdgeList, HeaderOnlySingleVertex) {
  const Graph g = parse_edge_list("n 1\n");
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseEdgeList, AdjacencyKeepsInputOrder) {
  const Graph g = parse_edge_list("3 1\n1 5\n1 2\n4 1\n");
  const auto nb = g.neighbors(1);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{3, 5, 2, 4}));
}

TEST(ParseEdgeList, SelfLoopRejectedWithLineNumber) {
  try {
    parse_edge_list("1 2\n3 3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseEdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("1 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("1 2 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("1 2.5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n1 3\n"), ParseError);  // header smaller than max id
  EXPECT_THROW(parse_edge_list("s 4\n1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n"), ParseError);
}

TEST(ParseDimacs, Examples) {
  const Graph edge = parse_dimacs("p edge 2 1\ne 1 2");
  EXPECT_EQ(edge.vertex_count(), 2u);
  EXPECT_EQ(edge.edge_count(), 1u);

  const Graph triangle = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(triangle.edge_count(), 3u);
  for (Vertex v = 1; v <= 3; ++v) EXPECT_EQ(triangle.degree(v), 2u);
}

TEST(ParseDimacs, Errors) {
  EXPECT_THROW(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);  // m after dedup is 1
  EXPECT_THROW(parse_dimacs("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("c nothing\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 2 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p col 2 1\ne 1 2\n"), ParseError);
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(parse_edge_list("1 2\n")));
  EXPECT_FALSE(is_connected(parse_edge_list("n 3\n1 2\n")));
  EXPECT_TRUE(is_connected(testing::grid_fixture()));
  EXPECT_TRUE(is_connected(parse_edge_list("n 1\n")));
}

TEST(Generate, GridMatchesFixtureUpToRelabeling) {
  const Graph grid = generate(family::Grid{3, 3});
  EXPECT_EQ(grid.edge_count(), 12u);
  // Row-major id (row r, column c) -> fixture id at the same grid position.
  const std::map<Vertex, Vertex> to_fixture{{1, 1}, {2, 2}, {3, 5}, {4, 3}, {5, 4},
                                            {6, 7}, {7, 6}, {8, 8}, {9, 9}};
  std::set<Graph::Edge> mapped;
  for (const auto& [u, v] : grid.edges()) {
    const Vertex a = to_fixture.at(u);
    const Vertex b = to_fixture.at(v);
    mapped.emplace(std::min(a, b), std::max(a, b));
  }
  EXPECT_EQ(mapped, edge_set(testing::grid_fixture()));
}

TEST(Generate, GridEdgeCountFormula) {
  for (std::size_t r = 1; r <= 6; ++r) {
    for (std::size_t c = 1; c <= 6; ++c) {
      const Graph g = generate(family::Grid{r, c});
      EXPECT_EQ(g.vertex_count(), r * c);
      EXPECT_EQ(g.edge_count(), r * (c - 1) + c * (r - 1));
    }
  }
}

TEST(Generate, SmallFamilies) {
  const Graph p1 = generate(family::Path{1});
  EXPECT_EQ(p1.vertex_count(), 1u);
  EXPECT_EQ(p1.edge_count(), 0u);
  EXPECT_EQ(generate(family::Path{7}).edge_count(), 6u);
  EXPECT_EQ(generate(family::Cycle{7}).edge_count(), 7u);
  EXPECT_EQ(generate(family::Clique{6}).edge_count(), 15u);
}

TEST(Generate, RandomConnectedIsConnected) {
  const Graph g = generate(family::RandomConnected{50, 0.1, 7});
  EXPECT_EQ(g.vertex_count(), 50u);
  EXPECT_TRUE(is_connected(g));
  EXPECT_TRUE(g.is_well_formed());
  EXPECT_TRUE(is_connected(generate(family::RandomConnected{200, 0.0, 3})));
  EXPECT_EQ(generate(family::RandomConnected{8, 1.0, 3}).edge_count(), 28u);
}

TEST(Generate, Reproducible) {
  const family::RandomConnected spec{300, 0.03, 11};
  EXPECT_EQ(edge_set(generate(spec)), edge_set(generate(spec)));
  EXPECT_NE(edge_set(generate(spec)), edge_set(generate(family::RandomConnected{300, 0.03, 12})));
}

TEST(Generate, EdgeDensityTracksProbability) {
  const std::size_t n = 2000;
  const double p = 6.0 / (n - 1);
  const Graph g = generate(family::RandomConnected{n, p, 5});
  // ~3n from G(n,p) plus n-1 tree edges.
  EXPECT_GT(g.edge_count(), 3 * n);
  EXPECT_LT(g.edge_count(), 5 * n);
}

TEST(Generate, RejectsInvalidSpecs) {
  EXPECT_THROW(generate(family::Path{0}), InvalidGraphError);
  EXPECT_THROW(generate(family::Grid{0, 3}), InvalidGraphError);
  EXPECT_THROW(generate(family::Clique{0}), InvalidGraphError);
  EXPECT_THROW(generate(family::Cycle{2}), InvalidGraphError);
  EXPECT_THROW(generate(family::RandomConnected{0, 0.5, 1}), InvalidGraphError);
  EXPECT_THROW(generate(family::RandomConnected{5, 1.5, 1}), InvalidGraphError);
  EXPECT_THROW(generate(family::RandomConnected{5, -0.1, 1}), InvalidGraphError);
}

TEST(Graph, FromEdgesRejectsBadInput) {
  const std::vector<Graph::Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(2, loop), InvalidGraphError);
  const std::vector<Graph::Edge> out_of_range{{1, 3}};
  EXPECT_THROW(Graph::from_edges(2, out_of_range), InvalidGraphError);
  EXPECT_THROW(Graph::from_edges(0, {}), InvalidGraphError);
  EXPECT_THROW(Graph::from_edges(2, {}, 3), InvalidGraphError);
  EXPECT_THROW(testing::grid_fixture().with_source(10), InvalidGraphError);
}

TEST(Graph, CorpusInvariants) {
  for (const Graph& g : testing::corpus(40, 1, 120, 99)) {
    EXPECT_TRUE(g.is_well_formed());
    std::size_t degree_sum = 0;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) degree_sum += g.degree(v);
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(Graph, EdgeListRoundTrip) {
  const Graph g = generate(family::RandomConnected{40, 0.2, 4}).with_source(7);
  std::stringstream text;
  write_edge_list(text, g);
  const Graph back = parse_edge_list(text);
  EXPECT_EQ(edge_set(back), edge_set(g));
  EXPECT_EQ(back.source(), 7u);

  std::stringstream dimacs;
  write_dimacs(dimacs, g);
  EXPECT_EQ(edge_set(parse_dimacs(dimacs)), edge_set(g));
}

}  // namespace
}  // namespace lexsearch
