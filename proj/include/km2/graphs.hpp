// Small labeled multigraphs for dual graphs of (-2)-curves and chamber
// faces: exact rational edge weights, isomorphism and automorphism counting
// by backtracking with neighborhood invariants, and DOT emission in the
// paper's drawing convention (filled curve vertices, outlined face classes,
// double edges for weight 2, dotted annotated edges otherwise).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "km2/intmat.hpp"

namespace km2 {

struct LGraph {
  std::vector<std::string> names;
  std::vector<std::string> kind;   // "curve" or "face"; must match under iso
  std::vector<BRat> vnorm;         // self-pairing; must match under iso
  std::vector<std::vector<BRat>> w;  // symmetric, 0 = non-edge

  int n() const { return (int)names.size(); }
  int add_vertex(const std::string& name, const std::string& k, const BRat& norm);
  void set_edge(int a, int b, const BRat& weight);
  BRat edge(int a, int b) const { return w[a][b]; }
  int index_of(const std::string& name) const;  // -1 if absent
  int degree(int v) const;                      // count of nonzero weights
};

std::optional<std::vector<int>> graph_isomorphism(const LGraph& a, const LGraph& b);
uint64_t graph_aut_order(const LGraph& g);
std::string graph_to_dot(const LGraph& g, const std::string& title);

}  // namespace km2
