#include "km2/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace km2 {

BInt det(IMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: square matrix required");
  int n = m.rows;
  BInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = v / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

void hermite(const IMat& A, IMat& H, IMat& U) {
  int n = A.rows, mcols = A.cols;
  H = A;
  U = IMat(n, n);
  for (int i = 0; i < n; ++i) U.at(i, i) = 1;

  auto swap_rows = [&](int r1, int r2) {
    for (int c = 0; c < mcols; ++c) std::swap(H.at(r1, c), H.at(r2, c));
    for (int c = 0; c < n; ++c) std::swap(U.at(r1, c), U.at(r2, c));
  };
  auto addmul = [&](int dst, int src, const BInt& f) {
    for (int c = 0; c < mcols; ++c) H.at(dst, c) += f * H.at(src, c);
    for (int c = 0; c < n; ++c) U.at(dst, c) += f * U.at(src, c);
  };
  auto negate = [&](int r) {
    for (int c = 0; c < mcols; ++c) H.at(r, c) = -H.at(r, c);
    for (int c = 0; c < n; ++c) U.at(r, c) = -U.at(r, c);
  };

  int row = 0;
  for (int col = 0; col < mcols && row < n; ++col) {
    // euclidean reduction in this column below `row`
    while (true) {
      int best = -1;
      for (int r = row; r < n; ++r)
        if (H.at(r, col) != 0 &&
            (best < 0 || abs(H.at(r, col)) < abs(H.at(best, col))))
          best = r;
      if (best < 0) break;
      swap_rows(row, best);
      if (H.at(row, col) < 0) negate(row);
      bool clean = true;
      for (int r = row + 1; r < n; ++r) {
        if (H.at(r, col) == 0) continue;
        BInt q = H.at(r, col) / H.at(row, col);
        // floor division toward making the remainder small
        addmul(r, row, -q);
        if (H.at(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(row, col) != 0) {
      // reduce entries above the pivot
      for (int r = 0; r < row; ++r) {
        BInt q = H.at(r, col) / H.at(row, col);
        if (H.at(r, col) - q * H.at(row, col) < 0) q -= 1;
        if (q != 0) addmul(r, row, -q);
      }
      ++row;
    }
  }
}

int rank_of(IMat m) {
  IMat H, U;
  hermite(m, H, U);
  int r = 0;
  for (int i = 0; i < H.rows; ++i) {
    bool nz = false;
    for (int c = 0; c < H.cols; ++c)
      if (H.at(i, c) != 0) nz = true;
    if (nz) ++r;
  }
  return r;
}

IMat left_kernel(const IMat& A) {
  IMat H, U;
  hermite(A, H, U);
  std::vector<int> zero_rows;
  for (int i = 0; i < H.rows; ++i) {
    bool nz = false;
    for (int c = 0; c < H.cols; ++c)
      if (H.at(i, c) != 0) nz = true;
    if (!nz) zero_rows.push_back(i);
  }
  IMat K((int)zero_rows.size(), A.rows);
  for (size_t i = 0; i < zero_rows.size(); ++i)
    for (int c = 0; c < A.rows; ++c) K.at((int)i, c) = U.at(zero_rows[i], c);
  return K;
}

std::vector<BInt> smith_divisors(IMat m) {
  int n = std::min(m.rows, m.cols);
  std::vector<BInt> div;
  int top = 0;
  while (top < n) {
    // locate smallest nonzero entry in the remaining block
    int pr = -1, pc = -1;
    for (int r = top; r < m.rows; ++r)
      for (int c = top; c < m.cols; ++c)
        if (m.at(r, c) != 0 &&
            (pr < 0 || abs(m.at(r, c)) < abs(m.at(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(top, c), m.at(pr, c));
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, top), m.at(r, pc));
    bool again = false;
    for (int r = top + 1; r < m.rows; ++r) {
      if (m.at(r, top) == 0) continue;
      BInt q = m.at(r, top) / m.at(top, top);
      for (int c = top; c < m.cols; ++c) m.at(r, c) -= q * m.at(top, c);
      if (m.at(r, top) != 0) again = true;
    }
    for (int c = top + 1; c < m.cols; ++c) {
      if (m.at(top, c) == 0) continue;
      BInt q = m.at(top, c) / m.at(top, top);
      for (int r = top; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, top);
      if (m.at(top, c) != 0) again = true;
    }
    if (again) continue;
    // pivot must divide every remaining entry
    bool fixed = false;
    for (int r = top + 1; r < m.rows && !fixed; ++r)
      for (int c = top + 1; c < m.cols && !fixed; ++c)
        if (m.at(r, c) % m.at(top, top) != 0) {
          for (int cc = top; cc < m.cols; ++cc) m.at(top, cc) += m.at(r, cc);
          fixed = true;
        }
    if (fixed) continue;
    div.push_back(abs(m.at(top, top)));
    ++top;
  }
  return div;
}

std::vector<BRat> solve(const QMat& A, const std::vector<BRat>& b) {
  if (A.rows != A.cols || (int)b.size() != A.rows)
    throw std::invalid_argument("solve: shape mismatch");
  int n = A.rows;
  QMat M = A;
  std::vector<BRat> rhs = b;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r)
      if (M.at(r, k) != 0) {
        p = r;
        break;
      }
    if (p < 0) throw std::domain_error("solve: singular system");
    if (p != k) {
      for (int c = 0; c < n; ++c) std::swap(M.at(k, c), M.at(p, c));
      std::swap(rhs[k], rhs[p]);
    }
    for (int r = k + 1; r < n; ++r) {
      if (M.at(r, k) == 0) continue;
      BRat f = M.at(r, k) / M.at(k, k);
      for (int c = k; c < n; ++c) M.at(r, c) -= f * M.at(k, c);
      rhs[r] -= f * rhs[k];
    }
  }
  std::vector<BRat> x(n);
  for (int k = n - 1; k >= 0; --k) {
    BRat s = rhs[k];
    for (int c = k + 1; c < n; ++c) s -= M.at(k, c) * x[c];
    x[k] = s / M.at(k, k);
  }
  return x;
}

std::vector<BRat> solve(const IMat& A, const std::vector<BRat>& b) {
  QMat Q(A.rows, A.cols);
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) Q.at(r, c) = BRat(A.at(r, c));
  return solve(Q, b);
}

std::pair<int, int> signature(const IMat& sym) {
  int n = sym.rows;
  QMat M(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) M.at(r, c) = BRat(sym.at(r, c));
  int pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && M.at(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // all active diagonal entries vanish; look for an off-diagonal entry
      int oi = -1, oj = -1;
      for (int i = 0; i < n && oi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j)
          if (!done[j] && M.at(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      }
      if (oi < 0) break;  // zero block
      // e_i -> e_i + e_j turns the diagonal nonzero
      for (int c = 0; c < n; ++c) M.at(oi, c) += M.at(oj, c);
      for (int r = 0; r < n; ++r) M.at(r, oi) += M.at(r, oj);
      continue;
    }
    BRat d = M.at(piv, piv);
    if (d > 0)
      ++pos;
    else
      ++neg;
    for (int r = 0; r < n; ++r) {
      if (r == piv || done[r] || M.at(r, piv) == 0) continue;
      BRat f = M.at(r, piv) / d;
      for (int c = 0; c < n; ++c) M.at(r, c) -= f * M.at(piv, c);
      for (int c = 0; c < n; ++c) M.at(c, r) = M.at(r, c);
    }
    done[piv] = true;
  }
  return {pos, neg};
}

}  // namespace km2
