#include "dispobs/graph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dispobs;

namespace {

ColoredGraph mixed_reduction_input() {
  return ColoredGraph::from_edges({{0, 1}, {3, 2}, {3, 4}, {2, 4}, {5, 6}, {7, 8}, {9, 10}, {10, 11}, {11, 9}},
                                  {{1, 3}, {2, 0}, {6, 7}, {8, 5}});
}

// Red classes are cliques: a-b and b-c red implies a-c red.
bool transitive(const ColoredGraph& g, Color c) {
  for (const auto& [a, b] : g.edges(c))
    for (const auto& [x, y] : g.edges(c)) {
      Mode shared, u, w;
      if (a == x) { shared = a; u = b; w = y; }
      else if (a == y) { shared = a; u = b; w = x; }
      else if (b == x) { shared = b; u = a; w = y; }
      else if (b == y) { shared = b; u = a; w = x; }
      else continue;
      (void)shared;
      if (u != w && !g.has_edge(c, u, w)) return false;
    }
  return true;
}

bool simple(const ColoredGraph& g) {
  for (const auto& e : g.red_edges)
    if (g.blue_edges.count(e)) return false;
  return true;
}

}  // namespace

TEST(Graph, CubicSevenThirteen) {
  ColoredGraph g = build_graph(kdv_symbol(), Slope(7), Slope(13));
  EXPECT_EQ(g.red_edges, pi_set(kdv_symbol(), Slope(7)).finite_pairs);
  EXPECT_TRUE(g.blue_edges.count({1, 3}));
  EXPECT_TRUE(simple(g));
  EXPECT_TRUE(transitive(g, Color::Red));
  EXPECT_TRUE(transitive(g, Color::Blue));
  auto cycle = has_two_colored_cycle(g);
  ASSERT_TRUE(cycle);
  EXPECT_TRUE(validate_cycle(g.symbol, *cycle));
  EXPECT_EQ(cycle->vertices, (std::vector<Mode>{-3, 1, 3, -1}));
  ComponentSummary cs = component_summary(g);
  EXPECT_FALSE(cs.infinite);
  EXPECT_EQ(cs.g_value, 8u);
  EXPECT_EQ(cs.sizes, oracle::component_sizes_bfs(g));
}

TEST(Graph, SingleColorGraphHasNoCycle) {
  ColoredGraph g = build_graph(kdv_symbol(), Slope(7), Slope(5));
  EXPECT_TRUE(g.blue_edges.empty());
  EXPECT_FALSE(has_two_colored_cycle(g));
  EXPECT_TRUE(reduce_graph(g).vertices.empty());
  EXPECT_THROW(build_graph(kdv_symbol(), Slope(7), Slope(7)), InvalidArgument);
}

TEST(Graph, SchrodingerLadder) {
  ColoredGraph g = build_graph(schrodinger_symbol(), Slope(0), Slope(1));
  EXPECT_EQ(g.red_families, (std::vector<Mode>{0}));
  EXPECT_EQ(g.blue_families, (std::vector<Mode>{1}));
  EXPECT_FALSE(has_two_colored_cycle(g));
  EXPECT_TRUE(component_summary(g).infinite);
  PathWitness w = find_alternative_path(g, 3);
  EXPECT_EQ(w.vertices, (std::vector<Mode>{1, -1, 2, -2, 3, -3}));
  ColoredGraph m = materialize(g, 6);
  EXPECT_FALSE(oracle::has_bicolored_cycle_dfs(materialize(g, 4)));
  EXPECT_TRUE(m.has_edge(Color::Blue, 2, -1));
  EXPECT_TRUE(m.has_edge(Color::Red, 1, -1));
}

TEST(Graph, LadderLabelsForIntegerSlopes) {
  for (Mode v1 = -3; v1 <= 3; ++v1)
    for (Mode v2 = -3; v2 <= 3; ++v2) {
      if (v1 == v2) continue;
      ColoredGraph g = build_graph(schrodinger_symbol(), Slope(v1), Slope(v2));
      PathWitness w = find_alternative_path(g, 3);
      std::vector<Mode> labels{v1 - v2, v2, 0, v1, v2 - v1, 2 * v1 - v2};
      if (std::set<Mode>(labels.begin(), labels.end()).size() == 6) {
        EXPECT_EQ(w.vertices, labels) << v1 << "," << v2;
      }
      EXPECT_TRUE(validate_path(g.symbol, w));
    }
}

TEST(Graph, EmptyGraph) {
  ColoredGraph g = build_graph(kdv_symbol(), Slope(5), Slope(2));
  EXPECT_TRUE(g.vertices.empty());
  EXPECT_EQ(component_summary(g).g_value, 0u);
  EXPECT_THROW(find_alternative_path(g, 1), InvalidArgument);
}

TEST(Graph, ReductionOfMixedGraph) {
  ColoredGraph r = reduce_graph(mixed_reduction_input());
  EXPECT_EQ(r.vertices, (std::set<Mode>{0, 1, 2, 3, 5, 6, 7, 8}));
  EXPECT_EQ(r.red_edges, (std::set<ModePair>{{0, 1}, {2, 3}, {5, 6}, {7, 8}}));
  EXPECT_EQ(r.blue_edges, (std::set<ModePair>{{1, 3}, {0, 2}, {6, 7}, {5, 8}}));
}

TEST(Graph, ReductionFixpoints) {
  // alternating tree peels away
  ColoredGraph tree = ColoredGraph::from_edges({{0, 1}, {2, 3}, {2, 5}}, {{1, 2}, {3, 4}});
  EXPECT_TRUE(reduce_graph(tree).vertices.empty());
  ColoredGraph square = ColoredGraph::from_edges({{0, 1}, {2, 3}}, {{1, 2}, {3, 0}});
  ColoredGraph r = reduce_graph(square);
  EXPECT_EQ(r.vertices, square.vertices);
  EXPECT_EQ(r.edge_count(), 4u);
  EXPECT_THROW(ColoredGraph::from_edges({{0, 1}}, {{1, 0}}), InvalidArgument);
}

TEST(Graph, LadderReductionKeepsTwoWayLadders) {
  // v1 = 0, v2 = 3: the orbit k, -k, k + 3, ... hits a fixed point exactly
  // when 3 | 2k, so k = 0 mod 3 folds back and everything else is two-way.
  ColoredGraph g = build_graph(schrodinger_symbol(), Slope(0), Slope(3), 10);
  ColoredGraph r = reduce_graph(g);
  for (Mode k : r.vertices) EXPECT_NE(k % 3, 0) << k;
  EXPECT_TRUE(r.vertices.count(1));
  EXPECT_TRUE(r.vertices.count(-8));
  EXPECT_FALSE(r.vertices.count(0));
  EXPECT_FALSE(r.vertices.count(3));
  // with d = 2 every orbit folds at a fixed point
  EXPECT_TRUE(reduce_graph(build_graph(schrodinger_symbol(), Slope(0), Slope(2), 10)).vertices.empty());
  // interior vertices keep both colors
  for (Mode k : r.vertices) {
    if (std::llabs(k) > 7) continue;
    bool red = false, blue = false;
    for (const auto& [a, b] : r.red_edges) red |= a == k || b == k;
    for (const auto& [a, b] : r.blue_edges) blue |= a == k || b == k;
    EXPECT_TRUE(red && blue) << k;
  }
}

TEST(Graph, CycleDetectorAgreesWithBruteForce) {
  std::mt19937 rng(99);
  int with_cycle = 0, checked = 0;
  std::vector<long> gamma;
  for (long v = 1; v <= 60; ++v)
    if (!pi_set(kdv_symbol(), Slope(v)).empty()) gamma.push_back(v);
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      if (i == j) continue;
      ColoredGraph g = build_graph(kdv_symbol(), Slope(gamma[i]), Slope(gamma[j]));
      if (g.vertices.size() > 20) continue;
      ++checked;
      bool fast = has_two_colored_cycle(g).has_value();
      with_cycle += fast;
      EXPECT_EQ(fast, oracle::has_bicolored_cycle_dfs(g)) << gamma[i] << "," << gamma[j];
      EXPECT_TRUE(simple(g));
      EXPECT_TRUE(transitive(g, Color::Red) && transitive(g, Color::Blue));
      EXPECT_EQ(component_summary(g).sizes, oracle::component_sizes_bfs(g));
    }
  EXPECT_GT(checked, 100);
  EXPECT_GT(with_cycle, 0);
}

TEST(Graph, ReducedGraphHasBothColors) {
  for (long a : {7, 13, 19, 21, 39, 49})
    for (long b : {3, 7, 13, 19, 21, 39, 49, 91}) {
      if (a == b) continue;
      ColoredGraph r = reduce_graph(build_graph(kdv_symbol(), Slope(a), Slope(b)));
      for (Mode k : r.vertices) {
        EXPECT_FALSE(r.neighbors(Color::Red, k).empty());
        EXPECT_FALSE(r.neighbors(Color::Blue, k).empty());
      }
      EXPECT_EQ(r.vertices.empty(), !has_two_colored_cycle(build_graph(kdv_symbol(), Slope(a), Slope(b))));
    }
}

TEST(Graph, DotExport) {
  std::string dot = to_dot(build_graph(schrodinger_symbol(), Slope(0), Slope(1), 3));
  EXPECT_NE(dot.find("color=red"), std::string::npos);
  EXPECT_NE(dot.find("color=blue"), std::string::npos);
  EXPECT_NE(dot.find("family s=0"), std::string::npos);
  EXPECT_NE(dot.find("family s=1"), std::string::npos);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  std::string cubic = to_dot(build_graph(kdv_symbol(), Slope(7), Slope(13)));
  EXPECT_NE(cubic.find("\"1\" -- \"3\" [color=blue]"), std::string::npos);
}

TEST(Graph, OneColorFamilyWithFiniteOtherColor) {
  // p = k^4 - 2k^3 at v = -1 has the family s = 1 (red).
  PolynomialSymbol p({0, 0, 0, -2, 1});
  for (long b = -30; b <= 30; ++b) {
    if (b == -1) continue;
    ColoredGraph g = build_graph(p, Slope(-1), Slope(b), 12);
    EXPECT_FALSE(g.both_families());
    ColoredGraph m = materialize(g, 4);
    if (m.vertices.size() <= 20) {
      EXPECT_EQ(has_two_colored_cycle(g).has_value(), oracle::has_bicolored_cycle_dfs(m));
    }
    ComponentSummary cs = component_summary(g);
    EXPECT_GE(cs.g_value, 2u);
    EXPECT_FALSE(cs.infinite);
  }
}
