#include "km2/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace km2 {

namespace {

using Poly = std::vector<uint8_t>;  // little-endian, over F_p

int degree(const Poly& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_add(const Poly& a, const Poly& b, int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = (uint8_t)(v % p);
  }
  return trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (uint8_t)((r[i + j] + a[i] * b[j]) % p);
  }
  return trim(r);
}

// f mod g, g monic
Poly poly_mod(Poly f, const Poly& g, int p) {
  f = trim(f);
  int dg = degree(g);
  while (degree(f) >= dg) {
    int df = degree(f);
    int c = f[df];
    for (int i = 0; i <= dg; ++i) {
      int v = f[df - dg + i] - c * g[i] % p;
      f[df - dg + i] = (uint8_t)(((v % p) + p) % p);
    }
    f = trim(f);
  }
  return f;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& g, int p) {
  Poly r = {1};
  base = poly_mod(std::move(base), g, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), g, p);
    base = poly_mod(poly_mul(base, base, p), g, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    // make b monic for poly_mod
    Poly bm = b;
    int lead = bm[degree(bm)];
    if (lead != 1) {
      int inv = 1;
      for (int t = 1; t < p; ++t)
        if (t * lead % p == 1) inv = t;
      for (auto& c : bm) c = (uint8_t)(c * inv % p);
    }
    Poly r = poly_mod(a, bm, p);
    a = b;
    b = r;
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  int k = degree(f);
  if (k <= 0) return false;
  // x^{p^k} == x (mod f), and gcd(x^{p^{k/q}} - x, f) = 1 for primes q | k
  Poly x = {0, 1};
  uint64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= (uint64_t)p;
  Poly xq = poly_powmod(x, pk, f, p);
  if (trim(poly_add(xq, poly_mul({(uint8_t)(p - 1)}, x, p), p)) != Poly{})
    return false;
  for (int q = 2; q <= k; ++q) {
    if (k % q) continue;
    bool prime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (!prime) continue;
    uint64_t e = 1;
    for (int i = 0; i < k / q; ++i) e *= (uint64_t)p;
    Poly xe = poly_powmod(x, e, f, p);
    Poly diff = poly_add(xe, poly_mul({(uint8_t)(p - 1)}, x, p), p);
    Poly g = poly_gcd(f, diff, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<uint8_t> smallest_irreducible(int p, int k) {
  static std::map<std::pair<int, int>, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  if (k == 1) {
    Poly f = {0, 1};  // the polynomial x
    cache[{p, k}] = f;
    return f;
  }
  // enumerate lower coefficient vectors in lexicographic (value) order
  uint64_t limit = 1;
  for (int i = 0; i < k; ++i) limit *= (uint64_t)p;
  for (uint64_t n = 0; n < limit; ++n) {
    Poly f(k + 1, 0);
    uint64_t m = n;
    for (int i = 0; i < k; ++i) {
      f[i] = (uint8_t)(m % p);
      m /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) {
      cache[{p, k}] = f;
      return f;
    }
  }
  throw std::runtime_error("no irreducible polynomial found");
}

Fq::Fq(int p, int k) : p_(p), k_(k) {
  if ((p != 2 && p != 3) || k < 1 || k > 16)
    throw std::invalid_argument("Fq: unsupported field parameters");
  order_ = 1;
  for (int i = 0; i < k; ++i) order_ *= (uint64_t)p;
  mod_ = smallest_irreducible(p, k);
}

Fq::Elem Fq::one() const {
  Elem e(k_, 0);
  e[0] = 1;
  return e;
}

Fq::Elem Fq::from_int(uint64_t n) const {
  Elem e(k_, 0);
  for (int i = 0; i < k_; ++i) {
    e[i] = (uint8_t)(n % p_);
    n /= p_;
  }
  return e;
}

uint64_t Fq::to_int(const Elem& a) const {
  uint64_t n = 0;
  for (int i = k_ - 1; i >= 0; --i) n = n * p_ + a[i];
  return n;
}

bool Fq::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

Fq::Elem Fq::add(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = (uint8_t)((a[i] + b[i]) % p_);
  return r;
}

Fq::Elem Fq::sub(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = (uint8_t)((a[i] + p_ - b[i]) % p_);
  return r;
}

Fq::Elem Fq::neg(const Elem& a) const { return sub(zero(), a); }

Fq::Elem Fq::mul(const Elem& a, const Elem& b) const {
  Poly r = poly_mod(poly_mul(Poly(a.begin(), a.end()), Poly(b.begin(), b.end()), p_),
                    mod_, p_);
  Elem e(k_, 0);
  for (size_t i = 0; i < r.size(); ++i) e[i] = r[i];
  return e;
}

Fq::Elem Fq::pow(Elem a, uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fq::Elem Fq::inverse(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("Fq: inverse of zero");
  return pow(a, order_ - 2);
}

Fq::Elem Fq::frobenius(const Elem& a) const { return pow(a, (uint64_t)p_); }

Fq::Elem Fq::sqrt(const Elem& a) const {
  if (p_ != 2) throw std::logic_error("Fq::sqrt is for characteristic 2");
  uint64_t e = order_ >> 1;  // 2^{k-1}
  return pow(a, e);
}

int Fq::trace(const Elem& a) const {
  if (p_ != 2) throw std::logic_error("Fq::trace is for characteristic 2");
  Elem t = a, f = a;
  for (int i = 1; i < k_; ++i) {
    f = frobenius(f);
    t = add(t, f);
  }
  return t[0];
}

bool Fq::artin_schreier_solve(const Elem& a, Elem& out) const {
  if (p_ != 2) throw std::logic_error("artin_schreier_solve is for characteristic 2");
  if (trace(a) != 0) return false;
  // e -> e^2 + e is F_2-linear; solve the k x k system over F_2.
  std::vector<Elem> img(k_);
  for (int i = 0; i < k_; ++i) {
    Elem basis(k_, 0);
    basis[i] = 1;
    img[i] = add(mul(basis, basis), basis);
  }
  // Gaussian elimination on columns img[i] to express a.
  std::vector<uint32_t> rows(k_, 0), rhs_mask(1, 0);
  // pack: matrix M with M[r] over columns i
  std::vector<uint32_t> M(k_, 0);
  for (int r = 0; r < k_; ++r)
    for (int i = 0; i < k_; ++i)
      if (img[i][r]) M[r] |= (1u << i);
  std::vector<uint32_t> rhs(k_, 0);
  for (int r = 0; r < k_; ++r) rhs[r] = a[r];
  // solve M x = rhs over F_2
  std::vector<int> pivot_col(k_, -1);
  int row = 0;
  for (int col = 0; col < k_ && row < k_; ++col) {
    int pr = -1;
    for (int r = row; r < k_; ++r)
      if (M[r] & (1u << col)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[pr], M[row]);
    std::swap(rhs[pr], rhs[row]);
    for (int r = 0; r < k_; ++r) {
      if (r != row && (M[r] & (1u << col))) {
        M[r] ^= M[row];
        rhs[r] ^= rhs[row];
      }
    }
    pivot_col[row] = col;
    ++row;
  }
  Elem x(k_, 0);
  for (int r = 0; r < row; ++r)
    if (rhs[r]) x[pivot_col[r]] = 1;
  for (int r = row; r < k_; ++r)
    if (rhs[r]) return false;  // inconsistent (should not happen when trace = 0)
  // choose the lexicographically smaller of {x, x+1}
  Elem x1 = x;
  x1[0] ^= 1;
  out = (to_int(x) <= to_int(x1)) ? x : x1;
  // verify
  Elem chk = add(mul(out, out), out);
  if (chk != a) throw std::runtime_error("artin_schreier_solve: verification failed");
  return true;
}

std::string Fq::to_string(const Elem& a) const {
  std::string s = "[";
  for (int i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string((int)a[i]);
  }
  return s + "]";
}

}  // namespace km2
