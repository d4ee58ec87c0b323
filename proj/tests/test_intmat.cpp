#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "km2/intmat.hpp"

using namespace km2;

static IMat from(std::initializer_list<std::initializer_list<int>> rows) {
  IMat m((int)rows.size(), (int)rows.begin()->size());
  int r = 0;
  for (auto& row : rows) {
    int c = 0;
    for (int v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

TEST_CASE("determinants") {
  CHECK(det(from({{2, -1}, {-1, 2}})) == 3);
  CHECK(det(from({{0, 1}, {1, 0}})) == -1);
  // Cartan D4
  CHECK(det(from({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}})) == 4);
  CHECK(det(from({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("smith divisors") {
  auto d = smith_divisors(from({{2, 0}, {0, 4}}));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);
  d = smith_divisors(from({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 2);
  CHECK(d[2] == 156);
  // divisibility chain on a random integer matrix
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    IMat m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m.at(i, j) = (int)(rng() % 19) - 9;
    auto dv = smith_divisors(m);
    for (size_t i = 1; i < dv.size(); ++i) CHECK(dv[i] % dv[i - 1] == 0);
    // product of divisors = |det| when nonsingular
    BInt dd = det(m);
    if (dd != 0) {
      BInt prod = 1;
      for (auto& x : dv) prod *= x;
      CHECK(prod == abs(dd));
    }
  }
}

TEST_CASE("left kernel is a saturated integer kernel") {
  IMat A = from({{1, 2}, {2, 4}, {3, 6}});
  IMat K = left_kernel(A);
  CHECK(K.rows == 2);
  for (int r = 0; r < K.rows; ++r)
    for (int c = 0; c < A.cols; ++c) {
      BInt s = 0;
      for (int i = 0; i < 3; ++i) s += K.at(r, i) * A.at(i, c);
      CHECK(s == 0);
    }
  // saturation: the kernel basis extends to a unimodular matrix row set;
  // its Smith divisors are all 1
  auto dv = smith_divisors(K);
  for (auto& d : dv) CHECK(d == 1);
}

TEST_CASE("rational solve") {
  QMat A(2, 2);
  A.at(0, 0) = 2;
  A.at(0, 1) = 1;
  A.at(1, 0) = 1;
  A.at(1, 1) = 3;
  auto x = solve(A, {BRat(1), BRat(0)});
  CHECK(x[0] == BRat(3, 5));
  CHECK(x[1] == BRat(-1, 5));
  QMat S(2, 2);
  S.at(0, 0) = 1;
  S.at(0, 1) = 2;
  S.at(1, 0) = 2;
  S.at(1, 1) = 4;
  CHECK_THROWS_AS(solve(S, {BRat(1), BRat(1)}), std::domain_error);
}

TEST_CASE("signature") {
  auto sig = signature(from({{2, 0}, {0, -2}}));
  CHECK(sig == std::pair<int, int>{1, 1});
  // hyperbolic plane: all-zero diagonal
  sig = signature(from({{0, 1}, {1, 0}}));
  CHECK(sig == std::pair<int, int>{1, 1});
  sig = signature(from({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}));
  CHECK(sig == std::pair<int, int>{0, 3});
  // degenerate form keeps a radical
  sig = signature(from({{1, 1}, {1, 1}}));
  CHECK(sig.first + sig.second == 1);
}
