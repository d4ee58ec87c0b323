#include "km2/lorentz.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace km2 {

bool lvec_less(const LVec& a, const LVec& b) {
  if (a.m != b.m) return a.m < b.m;
  if (a.n != b.n) return a.n < b.n;
  return std::lexicographical_compare(a.lam.begin(), a.lam.end(), b.lam.begin(),
                                      b.lam.end());
}

int64_t lpair(const LVec& a, const LVec& b) {
  return a.m * b.n + a.n * b.m + inner(a.lam, b.lam);
}

LVec leech_root(const LeechVec& lam) {
  if (!leech_contains(lam)) throw std::invalid_argument("leech_root: not a member");
  int64_t nrm = inner(lam, lam);
  if (nrm % 2 != 0) throw std::invalid_argument("leech_root: odd norm");
  LVec r{-1 - nrm / 2, 1, lam};
  if (lpair(r, r) != -2) throw std::logic_error("leech_root: norm is not -2");
  return r;
}

LVec lvec_add(const LVec& a, const LVec& b) {
  LVec r{a.m + b.m, a.n + b.n, {}};
  for (int i = 0; i < 24; ++i) r.lam[i] = a.lam[i] + b.lam[i];
  return r;
}

LVec lvec_sub(const LVec& a, const LVec& b) {
  LVec r{a.m - b.m, a.n - b.n, {}};
  for (int i = 0; i < 24; ++i) r.lam[i] = a.lam[i] - b.lam[i];
  return r;
}

LVec lvec_scale(int64_t c, const LVec& a) {
  LVec r{c * a.m, c * a.n, {}};
  for (int i = 0; i < 24; ++i) r.lam[i] = (int32_t)(c * a.lam[i]);
  return r;
}

QClass qclass(const LVec& v) {
  QClass q;
  q.m = v.m;
  q.n = v.n;
  for (int i = 0; i < 24; ++i) q.lam[i] = v.lam[i];
  return q;
}

BRat qpair(const QClass& a, const QClass& b) {
  BRat s = a.m * b.n + a.n * b.m;
  BRat dot = 0;
  for (int i = 0; i < 24; ++i) dot += a.lam[i] * b.lam[i];
  return s - dot / 8;
}

int64_t qpair_int(const QClass& a, const QClass& b) {
  BRat p = qpair(a, b);
  if (denominator(p) != 1)
    throw std::domain_error("qpair_int: pairing is not an integer");
  return numerator(p).convert_to<int64_t>();
}

QClass qadd(const QClass& a, const QClass& b) {
  QClass r;
  r.m = a.m + b.m;
  r.n = a.n + b.n;
  for (int i = 0; i < 24; ++i) r.lam[i] = a.lam[i] + b.lam[i];
  return r;
}

QClass qsub(const QClass& a, const QClass& b) {
  QClass r;
  r.m = a.m - b.m;
  r.n = a.n - b.n;
  for (int i = 0; i < 24; ++i) r.lam[i] = a.lam[i] - b.lam[i];
  return r;
}

QClass qscale(const BRat& c, const QClass& a) {
  QClass r;
  r.m = c * a.m;
  r.n = c * a.n;
  for (int i = 0; i < 24; ++i) r.lam[i] = c * a.lam[i];
  return r;
}

bool qis_zero(const QClass& a) {
  if (a.m != 0 || a.n != 0) return false;
  for (int i = 0; i < 24; ++i)
    if (a.lam[i] != 0) return false;
  return true;
}

long integrality_multiplier(const QClass& v) {
  BInt den = 1;
  auto fold = [&](const BRat& x) { den = lcm(den, denominator(x)); };
  fold(v.m);
  fold(v.n);
  for (int i = 0; i < 24; ++i) fold(v.lam[i]);
  long d = den.convert_to<long>();
  for (long k = 1; k <= 4096; ++k) {
    long mmul = d * k;
    LeechVec lam;
    bool ok = true;
    for (int i = 0; i < 24; ++i) {
      BRat c = v.lam[i] * mmul;
      if (denominator(c) != 1) ok = false;
      else lam[i] = (int32_t)numerator(c).convert_to<long long>();
    }
    if (ok && leech_contains(lam)) return mmul;
  }
  throw std::runtime_error("integrality_multiplier: no multiplier below cap");
}

std::string AdeType::str() const {
  if (parts.empty()) return "0";
  // group equal parts with multiplicities: 2D5+2A7 style, A before D before E
  std::string out;
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += parts[i].first + std::to_string(parts[i].second);
    i = j;
  }
  return out;
}

int AdeType::rank() const {
  int r = 0;
  for (auto& p : parts) r += p.second;
  return r;
}

BInt AdeType::cartan_det() const {
  BInt d = 1;
  for (auto& p : parts) {
    if (p.first == 'A') d *= p.second + 1;
    else if (p.first == 'D') d *= 4;
    else if (p.second == 6) d *= 3;
    else if (p.second == 7) d *= 2;
    // E8 contributes 1
  }
  return d;
}

bool AdeType::operator<(const AdeType& o) const { return parts < o.parts; }

AdeType AdeType::parse(const std::string& s) {
  AdeType t;
  if (s == "0" || s.empty()) return t;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    size_t i = 0;
    int count = 0;
    while (i < tok.size() && isdigit(tok[i])) count = count * 10 + (tok[i++] - '0');
    if (count == 0) count = 1;
    if (i >= tok.size()) throw std::invalid_argument("AdeType: bad token " + tok);
    char letter = tok[i++];
    int idx = std::stoi(tok.substr(i));
    for (int c = 0; c < count; ++c) t.parts.push_back({letter, idx});
  }
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

IMat gram(const std::vector<LVec>& v) {
  IMat g((int)v.size(), (int)v.size());
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) g.at((int)i, (int)j) = lpair(v[i], v[j]);
  return g;
}

AdeType ade_type(const std::vector<LVec>& roots) {
  int n = (int)roots.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    if (lpair(roots[i], roots[i]) != -2)
      throw AdeError("ade_type: a basis vector has norm != -2");
    for (int j = i + 1; j < n; ++j) {
      int64_t p = lpair(roots[i], roots[j]);
      if (p == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      } else if (p != 0) {
        throw AdeError("ade_type: off-diagonal pairing " + std::to_string(p) +
                       " between roots " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  AdeType t;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) verts.push_back(i);
    int edges = 0;
    std::vector<int> branch;
    for (int v : verts) {
      edges += (int)adj[v].size();
      if (adj[v].size() > 3)
        throw AdeError("ade_type: vertex of valence " + std::to_string(adj[v].size()));
      if (adj[v].size() == 3) branch.push_back(v);
    }
    edges /= 2;
    if (edges != (int)verts.size() - 1)
      throw AdeError("ade_type: component with a cycle");
    if (branch.size() > 1) throw AdeError("ade_type: two branch vertices");
    if (branch.empty()) {
      t.parts.push_back({'A', (int)verts.size()});
      continue;
    }
    // arm lengths from the branch vertex
    std::vector<int> arms;
    for (int s : adj[branch[0]]) {
      int len = 1, prev = branch[0], cur = s;
      while (true) {
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    int sz = (int)verts.size();
    if (arms[0] == 1 && arms[1] == 1)
      t.parts.push_back({'D', sz});
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      t.parts.push_back({'E', sz});
    else
      throw AdeError("ade_type: branch arms (" + std::to_string(arms[0]) + "," +
                     std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                     ") are not ADE");
    if (t.parts.back().first == 'E' && (sz < 6 || sz > 8))
      throw AdeError("ade_type: E-type of rank " + std::to_string(sz));
  }
  std::sort(t.parts.begin(), t.parts.end());
  // cross-check the determinant product rule
  BInt d = det(gram(roots));
  BInt want = t.cartan_det();
  if (t.rank() % 2 == 1) want = -want;
  if (d != want)
    throw AdeError("ade_type: determinant " + d.str() + " != expected " + want.str());
  return t;
}

FiberShape FiberShape::parse(const std::string& s) {
  // "A~15" / "D~7" / "E~8"
  if (s.size() < 3 || s[1] != '~') throw std::invalid_argument("FiberShape: " + s);
  FiberShape f;
  f.letter = s[0];
  f.index = std::stoi(s.substr(2));
  if (f.letter == 'A' && f.index >= 1) return f;
  if (f.letter == 'D' && f.index >= 4) return f;
  if (f.letter == 'E' && f.index >= 6 && f.index <= 8) return f;
  throw std::invalid_argument("FiberShape: " + s);
}

std::string FiberShape::str() const {
  return std::string(1, letter) + "~" + std::to_string(index);
}

namespace {

struct Template {
  int n;
  std::vector<std::vector<int>> w;  // pairing between distinct components
  std::vector<int> mult;
};

Template extended_template(const FiberShape& f) {
  Template t;
  t.n = f.component_count();
  t.w.assign(t.n, std::vector<int>(t.n, 0));
  t.mult.assign(t.n, 1);
  auto link = [&](int a, int b, int v = 1) {
    t.w[a][b] = t.w[b][a] = v;
  };
  if (f.letter == 'A') {
    if (f.index == 1) {
      link(0, 1, 2);
    } else {
      for (int i = 0; i < t.n; ++i) link(i, (i + 1) % t.n);
    }
    return t;
  }
  if (f.letter == 'D') {
    // tips 0,1 - chain 2..n-3+1 - tips n-1, n-2 ; chain has mult 2
    int chain = f.index - 3;
    for (int i = 0; i < chain; ++i) t.mult[2 + i] = 2;
    link(0, 2);
    link(1, 2);
    for (int i = 0; i + 1 < chain; ++i) link(2 + i, 3 + i);
    link(2 + chain - 1, 2 + chain);
    link(2 + chain - 1, 2 + chain + 1);
    return t;
  }
  // E types: explicit chains with one branch
  if (f.index == 6) {
    // center 0 (mult 3); arms 1-2, 3-4, 5-6 with mults 2,1
    t.mult = {3, 2, 1, 2, 1, 2, 1};
    link(0, 1);
    link(1, 2);
    link(0, 3);
    link(3, 4);
    link(0, 5);
    link(5, 6);
    return t;
  }
  if (f.index == 7) {
    // chain 0..6 with mults 1,2,3,4,3,2,1 and vertex 7 (mult 2) at the 4
    t.mult = {1, 2, 3, 4, 3, 2, 1, 2};
    for (int i = 0; i < 6; ++i) link(i, i + 1);
    link(3, 7);
    return t;
  }
  // E~8: chain 0..7 with mults 1,2,3,4,5,6,4,2 and vertex 8 (mult 3) at the 6
  t.mult = {1, 2, 3, 4, 5, 6, 4, 2, 3};
  for (int i = 0; i < 7; ++i) link(i, i + 1);
  link(5, 8);
  return t;
}

// multiplicity- and weight-preserving isomorphism search
bool match_template(const Template& t, const std::vector<std::vector<int>>& w,
                    const std::vector<int>& mult) {
  int n = t.n;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || mult[c] != t.mult[v]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (t.w[v][u] != w[c][map[u]]) ok = false;
      if (!ok) continue;
      used[c] = true;
      map[v] = c;
      if (rec(v + 1)) return true;
      used[c] = false;
      map[v] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

void validate_extended_fiber(const FiberShape& shape,
                             const std::vector<QClass>& comps,
                             const std::vector<int>& mults) {
  int n = (int)comps.size();
  if (n != shape.component_count() || (int)mults.size() != n)
    throw std::invalid_argument("validate_extended_fiber: component count mismatch for " +
                                shape.str());
  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (qpair_int(comps[i], comps[i]) != -2)
      throw std::invalid_argument("validate_extended_fiber: component norm != -2");
    for (int j = i + 1; j < n; ++j)
      w[i][j] = w[j][i] = (int)qpair_int(comps[i], comps[j]);
  }
  Template t = extended_template(shape);
  if (!match_template(t, w, mults))
    throw std::invalid_argument("validate_extended_fiber: diagram does not match " +
                                shape.str());
  QClass F{};
  F.m = F.n = 0;
  for (int i = 0; i < n; ++i) F = qadd(F, qscale(mults[i], comps[i]));
  if (qpair(F, F) != 0)
    throw std::invalid_argument("validate_extended_fiber: F.F != 0");
  for (int i = 0; i < n; ++i)
    if (qpair(F, comps[i]) != 0)
      throw std::invalid_argument("validate_extended_fiber: F not orthogonal to a component");
}

Projection project(const LVec& r, const std::vector<LVec>& basis) {
  int k = (int)basis.size();
  IMat G = gram(basis);
  std::vector<BRat> p(k);
  for (int i = 0; i < k; ++i) p[i] = BRat(lpair(r, basis[i]));
  std::vector<BRat> c;
  try {
    c = solve(G, p);
  } catch (const std::domain_error&) {
    throw std::logic_error("project: singular Gram system for a root basis");
  }
  Projection out;
  out.coeffs = c;
  out.delta = qclass(r);
  for (int i = 0; i < k; ++i)
    out.delta = qsub(out.delta, qscale(c[i], qclass(basis[i])));
  for (int i = 0; i < k; ++i)
    if (qpair(out.delta, qclass(basis[i])) != 0)
      throw std::logic_error("project: residual pairing is nonzero");
  out.norm = qpair(out.delta, out.delta);
  BRat check = BRat(lpair(r, r));
  for (int i = 0; i < k; ++i) check -= c[i] * p[i];
  if (check != out.norm) throw std::logic_error("project: norm bookkeeping failed");
  out.multiplier = qis_zero(out.delta) ? 1 : integrality_multiplier(out.delta);
  return out;
}

const std::vector<LVec>& ii_basis() {
  static std::vector<LVec> basis = [] {
    std::vector<LVec> b;
    b.push_back({1, 0, {}});
    b.push_back({0, 1, {}});
    for (const auto& lam : leech_basis()) b.push_back({0, 0, lam});
    return b;
  }();
  return basis;
}

IMat ii_gram() {
  const auto& b = ii_basis();
  IMat g(26, 26);
  for (int i = 0; i < 26; ++i)
    for (int j = 0; j < 26; ++j) g.at(i, j) = lpair(b[i], b[j]);
  return g;
}

std::vector<BInt> ii_coords(const LVec& v) {
  // m, n are direct; solve the 24x24 Leech-basis system for lambda
  const auto& lb = leech_basis();
  IMat A(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) A.at(i, j) = lb[j][i];  // columns are basis rows
  std::vector<BRat> rhs(24);
  for (int i = 0; i < 24; ++i) rhs[i] = BRat(v.lam[i]);
  auto x = solve(A, rhs);
  std::vector<BInt> out(26);
  out[0] = v.m;
  out[1] = v.n;
  for (int i = 0; i < 24; ++i) {
    if (denominator(x[i]) != 1)
      throw std::domain_error("ii_coords: vector is not in the lattice");
    out[2 + i] = numerator(x[i]);
  }
  return out;
}

IMat perp_basis(const std::vector<LVec>& R) {
  const auto& b = ii_basis();
  IMat A(26, (int)R.size());
  for (int i = 0; i < 26; ++i)
    for (size_t j = 0; j < R.size(); ++j) A.at(i, (int)j) = lpair(b[i], R[j]);
  return left_kernel(A);
}

IMat gram_in_ii(const IMat& coords) {
  IMat G = ii_gram();
  IMat out(coords.rows, coords.rows);
  for (int i = 0; i < coords.rows; ++i)
    for (int j = 0; j < coords.rows; ++j) {
      BInt s = 0;
      for (int a = 0; a < 26; ++a) {
        if (coords.at(i, a) == 0) continue;
        for (int c = 0; c < 26; ++c)
          if (coords.at(j, c) != 0) s += coords.at(i, a) * coords.at(j, c) * G.at(a, c);
      }
      out.at(i, j) = s;
    }
  return out;
}

const std::vector<AdeType>& niemeier_root_types() {
  static std::vector<AdeType> types = [] {
    std::vector<std::string> names = {
        "24A1", "12A2", "8A3",  "6A4",  "4A6",      "3A8",      "2A12",
        "A24",  "6D4",  "4D6",  "3D8",  "2D12",     "D24",      "4E6",
        "3E8",  "4A5+D4", "2A7+2D5", "2A9+D6", "A15+D9", "A11+D7+E6",
        "A17+E7", "D10+2E7", "D16+E8", "0"};
    std::vector<AdeType> out;
    for (const auto& n : names) {
      AdeType t = AdeType::parse(n);
      if (n != "0" && t.rank() != 24)
        throw std::logic_error("niemeier_root_types: rank != 24 for " + n);
      out.push_back(t);
    }
    return out;
  }();
  return types;
}

bool is_niemeier_type(const AdeType& t) {
  const auto& all = niemeier_root_types();
  return std::find(all.begin(), all.end(), t) != all.end();
}

}  // namespace km2
