// The 4x6 MOG box: Steiner system S(5,8,24) built from the hexacode, the
// PG(2,4) structure on the 21 non-Roman cells (lines, ovals, Fano subplanes),
// and the second labeling of the same cells by a fixed oval Q0 plus
// Sylvester synthemes, duads and totals.
//
// Cells are indexed 0..23 row-major (row*6+col).  All subsets are 24-bit
// masks.  Two coordinate charts name the 21 plane cells:
//   chart A: 5 infinity points inf_s (s in P^1(F4)) + 16 affine points (x,y)
//   chart B: the oval Q0 = {oo,0,1,2,3,4} + 15 synthemes such as i0.14.23
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace km2 {

using Mask = uint32_t;  // bits 0..23

inline int popcount24(Mask m) { return __builtin_popcount(m & 0xFFFFFF); }

struct OctadClass {
  // tag: 3, 2, 1 or 0 = number of Romans in the octad
  int romans;
  std::string tag;       // "3+5", "2+6", "1+7", "0+8"
  Mask payload;          // line / oval / subplane / symmetric line product
  int line_a = -1, line_b = -1;  // for 0+8: indices of the two lines
};

class Mog {
 public:
  static const Mog& get();  // built and self-checked once

  static constexpr int kCellI = 6, kCellII = 12, kCellIII = 18;
  static constexpr Mask kRomanMask = (1u << 6) | (1u << 12) | (1u << 18);

  // ---- chart A --------------------------------------------------------
  // slope: 0..3 = GF(4) element, 4 = infinite slope
  int inf_cell(int slope) const { return inf_cell_[slope]; }
  int affine_cell(int x, int y) const { return 6 * y + 2 + x; }
  bool is_affine(int cell) const { return cell % 6 >= 2; }
  int affine_x(int cell) const { return cell % 6 - 2; }
  int affine_y(int cell) const { return cell / 6; }

  Mask line_at_infinity() const { return linf_; }
  Mask vertical_line(int a) const;            // x = a, through inf_inf
  Mask sloped_line(int s, int c) const;       // y = s*x + c, through inf_s
  const std::vector<Mask>& lines() const { return lines_; }
  int line_index(Mask line) const;            // -1 if not a line

  // ---- Steiner system -------------------------------------------------
  const std::vector<Mask>& octads() const { return octads_; }
  const std::vector<Mask>& codewords() const { return codewords_; }
  bool is_codeword(Mask m) const;
  bool is_octad(Mask m) const;
  Mask octad_through(Mask five) const;  // unique octad containing a 5-set

  OctadClass classify_octad(Mask octad) const;

  // ---- ovals ------------------------------------------------------------
  const std::vector<Mask>& ovals() const { return ovals_; }  // 168, sorted
  bool is_oval(Mask six) const;
  Mask oval_octad(Mask oval) const;   // oval plus its two Romans
  Mask oval_romans(Mask oval) const;  // the two Romans of that octad

  // ---- chart B ----------------------------------------------------------
  Mask q0() const { return q0_; }
  int q0_cell(int sym) const { return q0_cell_[sym]; }  // sym: 0..4 digits, 5 = oo
  // exactly two ovals meet Q0 in a given 3-subset; first carries Romans
  // {I,III}, second {I,II}
  std::array<Mask, 2> ovals_through_triple(Mask triple) const;

  Mask duad_line(int a, int b) const;            // 15 lines meeting Q0
  const std::vector<Mask>& axis_lines() const { return axes_; }  // 6 totals
  std::string total_label(Mask axis) const;
  // expand a total label "a|bcdef" into its five syntheme cells
  Mask expand_total(const std::string& label) const;
  bool incidence(Mask line, int cell) const { return (line >> cell) & 1u; }

  // ---- labels ------------------------------------------------------------
  std::string cell_label_a(int cell) const;  // chart A
  std::string cell_label_b(int cell) const;  // chart B (Fig.-4 style, ASCII)
  int cell_by_label(const std::string& label) const;   // accepts both charts
  Mask line_by_label(const std::string& label) const;  // both charts
  std::string line_label_a(Mask line) const;
  std::string line_label_b(Mask line) const;  // duad or total label

  std::vector<std::string> mask_labels_b(Mask m) const;

 private:
  Mog();
  void build_code();
  void build_plane();
  void build_chart_b();
  void self_check() const;

  std::array<int, 5> inf_cell_;
  Mask linf_;
  std::vector<Mask> lines_;
  std::vector<Mask> octads_;
  std::vector<Mask> codewords_;
  std::array<uint32_t, 12> pcheck_;  // generator rows; code is self-dual
  std::vector<Mask> ovals_;
  std::vector<std::pair<Mask, std::pair<int, int>>> line_pairs_;  // 0+8 payloads

  Mask q0_;
  std::array<int, 6> q0_cell_;
  // per-cell chart-B syntheme: three duads, each duad two symbols 0..5
  struct Syn {
    std::array<std::array<int, 2>, 3> duads;
  };
  std::array<std::optional<Syn>, 24> syntheme_;
  std::vector<Mask> axes_;
};

std::string duad_symbol(int s);  // "0".."4", "i"

}  // namespace km2
