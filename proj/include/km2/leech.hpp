// The Leech lattice in exact nu-basis coordinates: 24 integers with inner
// product -(sum x_i y_i)/8.  Provides the named-vector dictionary used to
// spell out Leech roots ([P], [P^], [L], [Q]), the mod-2/mod-4 Golay
// congruence membership test, and the materialized shell of the 196,560
// norm-(-4) vectors (plus a lazy enumerator for the norm-(-6) shell).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "km2/intmat.hpp"
#include "km2/mog.hpp"

namespace km2 {

using LeechVec = std::array<int32_t, 24>;
using ShellVec = std::array<int8_t, 24>;

inline int64_t dot24(const LeechVec& a, const LeechVec& b) {
  int64_t s = 0;
  for (int i = 0; i < 24; ++i) s += (int64_t)a[i] * b[i];
  return s;
}

// Inner products are -(dot)/8; for lattice members this is an integer.
int64_t inner(const LeechVec& a, const LeechVec& b);   // throws if not /8
BRat inner_q(const LeechVec& a, const LeechVec& b);    // exact rational

LeechVec lv_zero();
LeechVec lv_point(int cell);              // -3 at the cell, 1 elsewhere
LeechVec lv_point_hat(int cell);          // 5 at the cell, 1 elsewhere
LeechVec lv_octad(Mask octad);            // 2 on the octad
LeechVec lv_line(Mask line);              // 2 on line + Romans
LeechVec lv_oval(Mask oval);              // 2 on oval + its two Romans
LeechVec lv_omega_minus_4(int cell);      // nu_Omega - 4 nu_cell

bool leech_contains(const LeechVec& v);

// Deterministic Z-basis of the lattice, assembled from the generators by
// integer elimination.  Gram (with respect to the -(x.y)/8 form) has
// determinant 1.
const std::vector<LeechVec>& leech_basis();
IMat leech_basis_gram();

enum class ShellFamily { Octad, Point, Pair };
ShellFamily shell_family(const ShellVec& v);

class MinimalShell {
 public:
  static const MinimalShell& get();
  const std::vector<ShellVec>& vectors() const { return vecs_; }
  size_t size() const { return vecs_.size(); }
  std::array<size_t, 3> family_counts() const;
  LeechVec lift(size_t i) const;

  bool save_cache(const std::string& path) const;
  static bool cache_matches(const std::string& path);

 private:
  MinimalShell();
  std::vector<ShellVec> vecs_;
};

// Visit every norm-(-6) vector once; stop early if the visitor returns false.
void enumerate_norm6(const std::function<bool(const LeechVec&)>& visit);

}  // namespace km2
