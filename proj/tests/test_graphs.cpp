#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "km2/graphs.hpp"

using namespace km2;

static LGraph cycle(int n) {
  LGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i), "curve", -2);
  for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n, 1);
  return g;
}

static LGraph complete(int n) {
  LGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("k" + std::to_string(i), "curve", -2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_edge(i, j, 1);
  return g;
}

TEST_CASE("K4 vs C4 are not isomorphic") {
  CHECK_FALSE(graph_isomorphism(complete(4), cycle(4)).has_value());
  CHECK(graph_isomorphism(cycle(4), cycle(4)).has_value());
}

TEST_CASE("cycle automorphisms are dihedral") {
  CHECK(graph_aut_order(cycle(5)) == 10);
  CHECK(graph_aut_order(cycle(8)) == 16);
  CHECK(graph_aut_order(complete(4)) == 24);
}

TEST_CASE("weights and kinds are respected") {
  LGraph a = cycle(4), b = cycle(4);
  a.set_edge(0, 1, 2);
  CHECK_FALSE(graph_isomorphism(a, b).has_value());
  b.set_edge(2, 3, 2);
  auto iso = graph_isomorphism(a, b);
  REQUIRE(iso.has_value());
  // mapped edge weights agree
  const auto& m = *iso;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a.w[i][j] == b.w[m[i]][m[j]]);

  LGraph c = cycle(4);
  c.kind[0] = "face";
  CHECK_FALSE(graph_isomorphism(c, cycle(4)).has_value());

  LGraph d = cycle(4);
  d.vnorm[1] = BRat(-3, 4);
  CHECK_FALSE(graph_isomorphism(d, cycle(4)).has_value());
}

TEST_CASE("rational and negative weights round-trip through dot") {
  LGraph g;
  g.add_vertex("a", "curve", -2);
  g.add_vertex("b", "face", BRat(-3, 4));
  g.add_vertex("c", "face", -1);
  g.set_edge(0, 1, 1);
  g.set_edge(1, 2, BRat(-1));
  g.set_edge(0, 2, 2);
  std::string dot = graph_to_dot(g, "t");
  CHECK(dot.find("style=dotted") != std::string::npos);
  CHECK(dot.find("-1") != std::string::npos);
  CHECK(dot.find("black:black") != std::string::npos);
}
