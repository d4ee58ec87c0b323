#include "km2/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace km2 {

int LGraph::add_vertex(const std::string& name, const std::string& k, const BRat& norm) {
  names.push_back(name);
  kind.push_back(k);
  vnorm.push_back(norm);
  for (auto& row : w) row.push_back(0);
  w.push_back(std::vector<BRat>(names.size(), 0));
  return (int)names.size() - 1;
}

void LGraph::set_edge(int a, int b, const BRat& weight) {
  if (a == b) throw std::invalid_argument("set_edge: loop");
  w[a][b] = weight;
  w[b][a] = weight;
}

int LGraph::index_of(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (names[i] == name) return i;
  return -1;
}

int LGraph::degree(int v) const {
  int d = 0;
  for (int j = 0; j < n(); ++j)
    if (w[v][j] != 0) ++d;
  return d;
}

namespace {

// invariant used to prune: (kind, norm, sorted multiset of incident weights)
std::vector<std::string> vertex_keys(const LGraph& g) {
  std::vector<std::string> keys(g.n());
  for (int v = 0; v < g.n(); ++v) {
    std::vector<std::string> inc;
    for (int j = 0; j < g.n(); ++j)
      if (g.w[v][j] != 0) {
        std::ostringstream os;
        os << g.w[v][j];
        inc.push_back(os.str());
      }
    std::sort(inc.begin(), inc.end());
    std::ostringstream os;
    os << g.kind[v] << "|" << g.vnorm[v] << "|";
    for (auto& s : inc) os << s << ",";
    keys[v] = os.str();
  }
  return keys;
}

// backtracking mapper; if count_all, returns the number of complete maps
uint64_t match(const LGraph& a, const LGraph& b, std::vector<int>* out,
               bool count_all) {
  if (a.n() != b.n()) return 0;
  int n = a.n();
  auto ka = vertex_keys(a), kb = vertex_keys(b);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return 0;
  }
  // order the source vertices: rarest key first, then by connectivity
  std::vector<int> order;
  {
    std::map<std::string, int> freq;
    for (auto& k : ka) freq[k]++;
    std::vector<int> rest(n);
    for (int i = 0; i < n; ++i) rest[i] = i;
    std::sort(rest.begin(), rest.end(), [&](int x, int y) {
      if (freq[ka[x]] != freq[ka[y]]) return freq[ka[x]] < freq[ka[y]];
      return x < y;
    });
    std::vector<bool> placed(n, false);
    // greedy: keep vertices adjacent to already-ordered ones early
    while ((int)order.size() < n) {
      int pick = -1;
      for (int v : rest) {
        if (placed[v]) continue;
        bool touches = order.empty();
        for (int u : order)
          if (a.w[v][u] != 0) touches = true;
        if (touches) {
          pick = v;
          break;
        }
      }
      if (pick < 0)
        for (int v : rest)
          if (!placed[v]) {
            pick = v;
            break;
          }
      placed[pick] = true;
      order.push_back(pick);
    }
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  uint64_t found = 0;
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == n) {
      ++found;
      if (out && found == 1) *out = map;
      return !count_all;
    }
    int v = order[idx];
    for (int c = 0; c < n; ++c) {
      if (used[c] || ka[v] != kb[c]) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j)
        if (a.w[v][order[j]] != b.w[c][map[order[j]]]) ok = false;
      if (!ok) continue;
      used[c] = true;
      map[v] = c;
      if (rec(idx + 1)) return true;
      used[c] = false;
      map[v] = -1;
    }
    return false;
  };
  rec(0);
  return found;
}

}  // namespace

std::optional<std::vector<int>> graph_isomorphism(const LGraph& a, const LGraph& b) {
  std::vector<int> map;
  if (match(a, b, &map, false)) return map;
  return std::nullopt;
}

uint64_t graph_aut_order(const LGraph& g) { return match(g, g, nullptr, true); }

std::string graph_to_dot(const LGraph& g, const std::string& title) {
  std::ostringstream os;
  os << "graph \"" << title << "\" {\n";
  os << "  node [fontsize=10];\n";
  for (int v = 0; v < g.n(); ++v) {
    os << "  \"" << g.names[v] << "\" [shape=circle";
    if (g.kind[v] == "curve")
      os << ", style=filled, fillcolor=black, fontcolor=white";
    os << ", tooltip=\"norm " << g.vnorm[v] << "\"];\n";
  }
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      BRat wt = g.w[i][j];
      if (wt == 0) continue;
      if (wt == 1) {
        os << "  \"" << g.names[i] << "\" -- \"" << g.names[j] << "\" [weight=1];\n";
      } else if (wt == 2) {
        // double edge, drawn as two parallel strokes
        os << "  \"" << g.names[i] << "\" -- \"" << g.names[j]
           << "\" [weight=2, color=\"black:black\"];\n";
      } else {
        os << "  \"" << g.names[i] << "\" -- \"" << g.names[j]
           << "\" [style=dotted, label=\"" << wt << "\"];\n";
      }
    }
  os << "}\n";
  return os.str();
}

}  // namespace km2
