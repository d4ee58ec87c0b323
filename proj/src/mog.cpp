#include "km2/mog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "km2/gf.hpp"

namespace km2 {

namespace {

// duad symbols: 0..4 are the digits, 5 is the oval point "oo" (infinity)
constexpr int kInfSym = 5;
// rank for canonical ordering: infinity first, then digits
inline int sym_rank(int s) { return s == kInfSym ? 0 : s + 1; }

std::string syn_key(std::array<std::array<int, 2>, 3> duads) {
  for (auto& d : duads)
    if (sym_rank(d[0]) > sym_rank(d[1])) std::swap(d[0], d[1]);
  std::sort(duads.begin(), duads.end(),
            [](const auto& a, const auto& b) {
              if (sym_rank(a[0]) != sym_rank(b[0])) return sym_rank(a[0]) < sym_rank(b[0]);
              return sym_rank(a[1]) < sym_rank(b[1]);
            });
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += ".";
    s += duad_symbol(duads[i][0]) + duad_symbol(duads[i][1]);
  }
  return s;
}

int parse_sym(char c) {
  if (c == 'i') return kInfSym;
  if (c >= '0' && c <= '4') return c - '0';
  throw std::invalid_argument(std::string("bad duad symbol: ") + c);
}

}  // namespace

std::string duad_symbol(int s) {
  if (s == kInfSym) return "i";
  return std::string(1, char('0' + s));
}

const Mog& Mog::get() {
  static Mog instance;
  return instance;
}

Mog::Mog() {
  inf_cell_ = {1, 7, 13, 19, 0};  // slopes 0,1,w,wb then infinite slope
  build_code();
  build_plane();
  build_chart_b();
  self_check();
}

void Mog::build_code() {
  // Hexacode words (a,b,c,phi(1),phi(w),phi(wb)) with phi(x)=a x^2+b x+c.
  std::vector<std::array<uint8_t, 6>> hexa;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        std::array<uint8_t, 6> w;
        w[0] = (uint8_t)a;
        w[1] = (uint8_t)b;
        w[2] = (uint8_t)c;
        for (int t = 1; t < 4; ++t) {
          uint8_t v = gf4::add(gf4::add(gf4::mul(a, gf4::mul(t, t)), gf4::mul(b, t)), c);
          w[2 + t] = v;
        }
        hexa.push_back(w);
      }

  // per-column: the 16 possible bit-columns, keyed by (parity, score)
  // rows are scored 0,1,w,wb top to bottom
  std::array<std::array<std::vector<uint8_t>, 4>, 2> col_by;
  for (uint8_t e = 0; e < 16; ++e) {
    int parity = __builtin_popcount(e) & 1;
    uint8_t score = 0;
    static constexpr uint8_t row_label[4] = {0, 1, 2, 3};
    for (int r = 0; r < 4; ++r)
      if ((e >> r) & 1) score = gf4::add(score, row_label[r]);
    col_by[parity][score].push_back(e);
  }

  codewords_.clear();
  octads_.clear();
  for (const auto& h : hexa) {
    for (int parity = 0; parity < 2; ++parity) {
      // two column choices per position; constrain top-row parity
      for (int sel = 0; sel < 64; ++sel) {
        Mask m = 0;
        int top = 0;
        for (int c = 0; c < 6; ++c) {
          const auto& cands = col_by[parity][h[c]];
          uint8_t e = cands[(sel >> c) & 1];
          top ^= e & 1;
          for (int r = 0; r < 4; ++r)
            if ((e >> r) & 1) m |= 1u << (6 * r + c);
        }
        if (top != parity) continue;
        codewords_.push_back(m);
        if (popcount24(m) == 8) octads_.push_back(m);
      }
    }
  }
  std::sort(codewords_.begin(), codewords_.end());
  codewords_.erase(std::unique(codewords_.begin(), codewords_.end()), codewords_.end());
  std::sort(octads_.begin(), octads_.end());
  octads_.erase(std::unique(octads_.begin(), octads_.end()), octads_.end());

  // 12 independent generators; the code is self-dual so they double as
  // parity checks
  std::vector<uint32_t> basis;
  for (Mask w : codewords_) {
    uint32_t v = w;
    for (uint32_t b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
    if (basis.size() == 12) break;
  }
  if (basis.size() != 12)
    throw std::runtime_error("mog: golay generator rank != 12");
  for (size_t i = 0; i < 12; ++i) pcheck_[i] = basis[i];
  for (uint32_t a : basis)
    for (uint32_t b : basis)
      if (__builtin_popcount(a & b) & 1)
        throw std::runtime_error("mog: golay code is not self-orthogonal");
}

bool Mog::is_codeword(Mask m) const {
  m &= 0xFFFFFF;
  for (uint32_t h : pcheck_)
    if (__builtin_popcount(m & h) & 1) return false;
  return true;
}

bool Mog::is_octad(Mask m) const { return popcount24(m) == 8 && is_codeword(m); }

Mask Mog::octad_through(Mask five) const {
  if (popcount24(five) != 5)
    throw std::invalid_argument("octad_through: expected a 5-set");
  for (Mask o : octads_)
    if ((o & five) == five) return o;
  throw std::logic_error("octad_through: Steiner property violated");
}

Mask Mog::vertical_line(int a) const {
  Mask m = 1u << inf_cell_[4];
  for (int y = 0; y < 4; ++y) m |= 1u << affine_cell(a, y);
  return m;
}

Mask Mog::sloped_line(int s, int c) const {
  Mask m = 1u << inf_cell_[s];
  for (int x = 0; x < 4; ++x) m |= 1u << affine_cell(x, gf4::add(gf4::mul(s, x), c));
  return m;
}

void Mog::build_plane() {
  linf_ = 0;
  for (int s = 0; s < 5; ++s) linf_ |= 1u << inf_cell_[s];
  lines_.clear();
  lines_.push_back(linf_);
  for (int a = 0; a < 4; ++a) lines_.push_back(vertical_line(a));
  for (int s = 0; s < 4; ++s)
    for (int c = 0; c < 4; ++c) lines_.push_back(sloped_line(s, c));

  for (Mask l : lines_)
    if (!is_octad(l | kRomanMask))
      throw std::runtime_error("mog: a plane line plus Romans is not an octad");

  // ovals and symmetric line products, straight off the octad classes
  ovals_.clear();
  line_pairs_.clear();
  std::unordered_map<Mask, std::pair<int, int>> pair_of;
  for (size_t i = 0; i < lines_.size(); ++i)
    for (size_t j = i + 1; j < lines_.size(); ++j)
      pair_of[lines_[i] ^ lines_[j]] = {(int)i, (int)j};
  for (Mask o : octads_) {
    int r = popcount24(o & kRomanMask);
    if (r == 2) ovals_.push_back(o & ~kRomanMask);
    if (r == 0) {
      auto it = pair_of.find(o);
      if (it == pair_of.end())
        throw std::runtime_error("mog: 0+8 octad is not a symmetric line product");
      line_pairs_.push_back({o, it->second});
    }
  }
  std::sort(ovals_.begin(), ovals_.end());
}

int Mog::line_index(Mask line) const {
  for (size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i] == line) return (int)i;
  return -1;
}

bool Mog::is_oval(Mask six) const {
  if (popcount24(six) != 6) return false;
  if (six & kRomanMask) return false;
  for (Mask l : lines_)
    if (popcount24(l & six) > 2) return false;
  return true;
}

Mask Mog::oval_octad(Mask oval) const {
  // five points of the oval already determine the octad
  Mask five = oval & (oval - 1);  // drop lowest bit
  Mask o = octad_through(five);
  if ((o & oval) != oval || popcount24(o & kRomanMask) != 2)
    throw std::invalid_argument("oval_octad: not an oval");
  return o;
}

Mask Mog::oval_romans(Mask oval) const { return oval_octad(oval) & kRomanMask; }

OctadClass Mog::classify_octad(Mask octad) const {
  if (!is_octad(octad)) throw std::invalid_argument("classify_octad: not an octad");
  OctadClass oc;
  oc.romans = popcount24(octad & kRomanMask);
  Mask rest = octad & ~kRomanMask;
  switch (oc.romans) {
    case 3: {
      oc.tag = "3+5";
      oc.payload = rest;
      if (line_index(rest) < 0)
        throw std::logic_error("classify_octad: 3+5 payload is not a line");
      break;
    }
    case 2: {
      oc.tag = "2+6";
      oc.payload = rest;
      if (!is_oval(rest))
        throw std::logic_error("classify_octad: 2+6 payload is not an oval");
      break;
    }
    case 1: {
      oc.tag = "1+7";
      oc.payload = rest;
      // Fano subplane over F2: every line meets it in 1 or 3 points
      for (Mask l : lines_) {
        int t = popcount24(l & rest);
        if (t != 1 && t != 3)
          throw std::logic_error("classify_octad: 1+7 payload is not an F2-subplane");
      }
      break;
    }
    case 0: {
      oc.tag = "0+8";
      oc.payload = rest;
      bool found = false;
      for (const auto& lp : line_pairs_)
        if (lp.first == octad) {
          oc.line_a = lp.second.first;
          oc.line_b = lp.second.second;
          found = true;
        }
      if (!found)
        throw std::logic_error("classify_octad: 0+8 payload is not a line product");
      break;
    }
  }
  return oc;
}

void Mog::build_chart_b() {
  q0_cell_ = {19, 16, 23, 17, 22, 13};  // 0,1,2,3,4,oo
  q0_ = 0;
  for (int s = 0; s < 6; ++s) q0_ |= 1u << q0_cell_[s];

  struct Entry {
    int cell;
    const char* label;
  };
  // Fig.-4 syntheme labels, row-major over the box
  static const Entry table[] = {
      {0, "i0.14.23"},  {1, "i0.13.24"},  {2, "i4.03.12"},  {3, "i2.01.34"},
      {4, "i3.02.14"},  {5, "i1.04.23"},  {7, "i0.12.34"},  {8, "i1.02.34"},
      {9, "i3.04.12"},  {10, "i2.03.14"}, {11, "i4.01.23"}, {14, "i2.04.13"},
      {15, "i4.02.13"}, {20, "i3.01.24"}, {21, "i1.03.24"},
  };
  for (const auto& e : table) {
    Syn s;
    std::string lab = e.label;
    for (int d = 0; d < 3; ++d) {
      s.duads[d][0] = parse_sym(lab[3 * d]);
      s.duads[d][1] = parse_sym(lab[3 * d + 1]);
    }
    syntheme_[e.cell] = s;
  }

  // the 6 axes are the lines missing Q0
  axes_.clear();
  for (Mask l : lines_)
    if ((l & q0_) == 0) axes_.push_back(l);
  if (axes_.size() != 6) throw std::runtime_error("mog: expected 6 axes of Q0");
}

Mask Mog::duad_line(int a, int b) const {
  if (a == b) throw std::invalid_argument("duad_line: need two distinct symbols");
  Mask m = (1u << q0_cell_[a]) | (1u << q0_cell_[b]);
  for (int c = 0; c < 24; ++c) {
    if (!syntheme_[c]) continue;
    for (const auto& d : syntheme_[c]->duads)
      if ((d[0] == a && d[1] == b) || (d[0] == b && d[1] == a)) m |= 1u << c;
  }
  if (line_index(m) < 0) throw std::logic_error("duad_line: not a plane line");
  return m;
}

std::array<Mask, 2> Mog::ovals_through_triple(Mask triple) const {
  if (popcount24(triple) != 3 || (triple & ~q0_))
    throw std::invalid_argument("ovals_through_triple: need a 3-subset of Q0");
  std::vector<Mask> hits;
  for (Mask q : ovals_)
    if ((q & q0_) == triple) hits.push_back(q);
  if (hits.size() != 2)
    throw std::logic_error("ovals_through_triple: expected exactly two ovals");
  Mask r0 = oval_romans(hits[0]);
  Mask want_first = (1u << kCellI) | (1u << kCellIII);
  std::array<Mask, 2> out;
  if (r0 == want_first) {
    out = {hits[0], hits[1]};
  } else {
    out = {hits[1], hits[0]};
  }
  if (oval_romans(out[0]) != want_first ||
      oval_romans(out[1]) != ((1u << kCellI) | (1u << kCellII)))
    throw std::logic_error("ovals_through_triple: Roman pairs are not {I,III},{I,II}");
  return out;
}

std::string Mog::total_label(Mask axis) const {
  // collect canonical keys of the five synthemes on the axis
  std::vector<std::string> keys;
  for (int c = 0; c < 24; ++c)
    if ((axis >> c) & 1) {
      if (!syntheme_[c]) throw std::invalid_argument("total_label: not an axis");
      keys.push_back(syn_key(syntheme_[c]->duads));
    }
  std::sort(keys.begin(), keys.end());
  // search a|bcdef over symbol ranks, smallest first
  static const int order[6] = {kInfSym, 0, 1, 2, 3, 4};
  for (int ai = 0; ai < 6; ++ai) {
    int a = order[ai];
    std::vector<int> rest;
    for (int i = 0; i < 6; ++i)
      if (order[i] != a) rest.push_back(order[i]);
    std::sort(rest.begin(), rest.end(),
              [](int x, int y) { return sym_rank(x) < sym_rank(y); });
    do {
      int b = rest[0], c = rest[1], d = rest[2], e = rest[3], f = rest[4];
      std::array<std::array<std::array<int, 2>, 3>, 5> syns = {{
          {{{a, d}, {c, e}, {b, f}}},
          {{{a, e}, {b, c}, {d, f}}},
          {{{a, f}, {b, e}, {c, d}}},
          {{{a, b}, {c, f}, {d, e}}},
          {{{a, c}, {b, d}, {e, f}}},
      }};
      std::vector<std::string> got;
      for (const auto& s : syns) got.push_back(syn_key(s));
      std::sort(got.begin(), got.end());
      if (got == keys) {
        std::string lab = duad_symbol(a) + "|";
        for (int s : rest) lab += duad_symbol(s);
        return lab;
      }
    } while (std::next_permutation(rest.begin(), rest.end(), [](int x, int y) {
      return sym_rank(x) < sym_rank(y);
    }));
  }
  throw std::logic_error("total_label: axis does not match any total");
}

Mask Mog::expand_total(const std::string& label) const {
  if (label.size() != 7 || label[1] != '|')
    throw std::invalid_argument("expand_total: want a|bcdef");
  int a = parse_sym(label[0]);
  int b = parse_sym(label[2]), c = parse_sym(label[3]), d = parse_sym(label[4]),
      e = parse_sym(label[5]), f = parse_sym(label[6]);
  std::array<std::array<std::array<int, 2>, 3>, 5> syns = {{
      {{{a, d}, {c, e}, {b, f}}},
      {{{a, e}, {b, c}, {d, f}}},
      {{{a, f}, {b, e}, {c, d}}},
      {{{a, b}, {c, f}, {d, e}}},
      {{{a, c}, {b, d}, {e, f}}},
  }};
  Mask m = 0;
  for (const auto& s : syns) {
    std::string key = syn_key(s);
    bool found = false;
    for (int cell = 0; cell < 24; ++cell)
      if (syntheme_[cell] && syn_key(syntheme_[cell]->duads) == key) {
        m |= 1u << cell;
        found = true;
      }
    if (!found) throw std::invalid_argument("expand_total: unknown syntheme " + key);
  }
  return m;
}

std::string Mog::cell_label_a(int cell) const {
  if (cell == kCellI) return "I";
  if (cell == kCellII) return "II";
  if (cell == kCellIII) return "III";
  static const char* inf_names[5] = {"inf_0", "inf_1", "inf_w", "inf_wb", "inf_inf"};
  for (int s = 0; s < 5; ++s)
    if (inf_cell_[s] == cell) return inf_names[s];
  return "(" + gf4::name(affine_x(cell)) + "," + gf4::name(affine_y(cell)) + ")";
}

std::string Mog::cell_label_b(int cell) const {
  if (cell == kCellI) return "I";
  if (cell == kCellII) return "II";
  if (cell == kCellIII) return "III";
  for (int s = 0; s < 6; ++s)
    if (q0_cell_[s] == cell) return s == kInfSym ? "oo" : duad_symbol(s);
  if (syntheme_[cell]) return syn_key(syntheme_[cell]->duads);
  throw std::logic_error("cell_label_b: unlabeled cell");
}

int Mog::cell_by_label(const std::string& label) const {
  for (int c = 0; c < 24; ++c) {
    if (cell_label_a(c) == label) return c;
    if (cell_label_b(c) == label) return c;
  }
  throw std::invalid_argument("unknown cell label: " + label);
}

static int parse_gf4(const std::string& s) {
  if (s == "0") return 0;
  if (s == "1") return 1;
  if (s == "w") return 2;
  if (s == "wb") return 3;
  throw std::invalid_argument("bad GF(4) element: " + s);
}

Mask Mog::line_by_label(const std::string& label) const {
  if (label == "Loo") return linf_;
  if (label.rfind("x=", 0) == 0) return vertical_line(parse_gf4(label.substr(2)));
  if (label.rfind("y=", 0) == 0) {
    std::string body = label.substr(2);
    // forms: c | x | x+c | wx | wx+c | wbx | wbx+c
    int s = 0;
    size_t xpos = body.find('x');
    std::string cpart;
    if (xpos == std::string::npos) {
      s = 0;
      cpart = body;
    } else {
      std::string spart = body.substr(0, xpos);
      s = spart.empty() ? 1 : parse_gf4(spart);
      cpart = body.substr(xpos + 1);
      if (!cpart.empty()) {
        if (cpart[0] != '+') throw std::invalid_argument("bad line label: " + label);
        cpart = cpart.substr(1);
      }
    }
    int c = cpart.empty() ? 0 : parse_gf4(cpart);
    return sloped_line(s, c);
  }
  if (label.size() == 2) return duad_line(parse_sym(label[0]), parse_sym(label[1]));
  if (label.size() == 7 && label[1] == '|') {
    Mask m = expand_total(label);
    if (line_index(m) < 0) throw std::invalid_argument("total is not a line: " + label);
    return m;
  }
  throw std::invalid_argument("unknown line label: " + label);
}

std::string Mog::line_label_a(Mask line) const {
  if (line == linf_) return "Loo";
  for (int a = 0; a < 4; ++a)
    if (line == vertical_line(a)) return "x=" + gf4::name(a);
  for (int s = 0; s < 4; ++s)
    for (int c = 0; c < 4; ++c)
      if (line == sloped_line(s, c)) {
        std::string lab = "y=";
        if (s == 0) return lab + gf4::name(c);
        if (s != 1) lab += gf4::name(s);
        lab += "x";
        if (c != 0) lab += "+" + gf4::name(c);
        return lab;
      }
  throw std::invalid_argument("line_label_a: not a line");
}

std::string Mog::line_label_b(Mask line) const {
  Mask hit = line & q0_;
  if (hit == 0) return total_label(line);
  // duad label from the two oval points
  std::string lab;
  for (int s : {kInfSym, 0, 1, 2, 3, 4})
    if ((hit >> q0_cell_[s]) & 1) lab += duad_symbol(s);
  if (lab.size() != 2) throw std::invalid_argument("line_label_b: not a line");
  return lab;
}

std::vector<std::string> Mog::mask_labels_b(Mask m) const {
  std::vector<std::string> out;
  for (int c = 0; c < 24; ++c)
    if ((m >> c) & 1) out.push_back(cell_label_b(c));
  return out;
}

void Mog::self_check() const {
  if (codewords_.size() != 4096)
    throw std::runtime_error("mog: expected 4096 codewords, got " +
                             std::to_string(codewords_.size()));
  if (octads_.size() != 759)
    throw std::runtime_error("mog: expected 759 octads, got " +
                             std::to_string(octads_.size()));
  // linearity: 4096 distinct words of F2-rank 12 form the whole span
  std::vector<uint32_t> basis;
  for (Mask w : codewords_) {
    uint32_t v = w;
    for (uint32_t b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  if (basis.size() != 12) throw std::runtime_error("mog: code rank != 12");
  // Steiner property: the 759*56 five-subsets are pairwise distinct
  std::unordered_set<uint32_t> fives;
  fives.reserve(50000);
  for (Mask o : octads_) {
    int cells[8], n = 0;
    for (int c = 0; c < 24; ++c)
      if ((o >> c) & 1) cells[n++] = c;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int k = j + 1; k < 8; ++k) {
          Mask five = o & ~((1u << cells[i]) | (1u << cells[j]) | (1u << cells[k]));
          if (!fives.insert(five).second)
            throw std::runtime_error("mog: a 5-set lies in two octads");
        }
  }
  if (fives.size() != 42504)
    throw std::runtime_error("mog: Steiner 5-set count is off");
  if (ovals_.size() != 168) throw std::runtime_error("mog: expected 168 ovals");
  if (line_pairs_.size() != 210)
    throw std::runtime_error("mog: expected 210 line products");
  // chart B consistency
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) duad_line(a, b);
  Mask q0_romans = oval_romans(q0_);
  if (q0_romans != ((1u << kCellII) | (1u << kCellIII)))
    throw std::runtime_error("mog: [Q0] octad does not carry Romans II,III");
  for (Mask axis : axes_) total_label(axis);
}

}  // namespace km2
