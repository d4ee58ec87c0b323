// Exact integer and rational linear algebra on small dense matrices:
// Bareiss determinants, Hermite/Smith reduction, integer kernels, rational
// solves and the exact signature of a symmetric form.  Everything runs on
// arbitrary-precision scalars; matrices here never exceed ~30x30.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace km2 {

using BInt = boost::multiprecision::cpp_int;
using BRat = boost::multiprecision::cpp_rational;

struct IMat {
  int rows = 0, cols = 0;
  std::vector<BInt> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  BInt& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const BInt& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

struct QMat {
  int rows = 0, cols = 0;
  std::vector<BRat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  BRat& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const BRat& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

BInt det(IMat m);           // square
int rank_of(IMat m);
std::vector<BInt> smith_divisors(IMat m);  // d1 | d2 | ..., zeros dropped

// Row-style Hermite form: returns H (echelon) and unimodular U with U*A = H.
void hermite(const IMat& A, IMat& H, IMat& U);
// Basis (as rows) of { x : x * A = 0 } over the integers, saturated.
IMat left_kernel(const IMat& A);

// Solve A x = b exactly; A square nonsingular.
std::vector<BRat> solve(const QMat& A, const std::vector<BRat>& b);
// Solve with an integer system.
std::vector<BRat> solve(const IMat& A, const std::vector<BRat>& b);

// Signature (n_plus, n_minus) of a symmetric matrix; the radical dimension is
// rows - n_plus - n_minus.
std::pair<int, int> signature(const IMat& sym);

}  // namespace km2
