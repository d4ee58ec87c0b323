// Small finite fields: GF(4) for the projective-plane coordinates of the MOG,
// and GF(p^k) (p = 2, 3; k <= 16) in polynomial-basis representation for the
// quartic identity screening and the genus-2 normal-form reduction.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace km2 {

// GF(4) = {0, 1, w, wb} encoded as 0,1,2,3.  Addition is xor.
namespace gf4 {
inline uint8_t add(uint8_t a, uint8_t b) { return a ^ b; }
inline uint8_t mul(uint8_t a, uint8_t b) {
  static constexpr uint8_t tab[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return tab[a][b];
}
inline uint8_t inv(uint8_t a) {
  static constexpr uint8_t tab[4] = {0, 1, 3, 2};
  return tab[a];
}
inline std::string name(uint8_t a) {
  static const char* n[4] = {"0", "1", "w", "wb"};
  return n[a];
}
}  // namespace gf4

// GF(p^k), elements as coefficient vectors of F_p[x]/(irreducible).
// The modulus is the lexicographically smallest monic irreducible of
// degree k, found once per (p, k) and cached, so representations are
// reproducible across runs.
class Fq {
 public:
  using Elem = std::vector<uint8_t>;  // k coefficients, little-endian

  Fq(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  uint64_t order() const { return order_; }
  const Elem& modulus() const { return mod_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const;
  Elem from_int(uint64_t n) const;  // base-p digits of n
  uint64_t to_int(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, uint64_t e) const;
  Elem inverse(const Elem& a) const;

  // Frobenius x -> x^p and its inverse (x -> x^{p^{k-1}}).
  Elem frobenius(const Elem& a) const;
  Elem sqrt(const Elem& a) const;  // p = 2 only: unique square root

  // F_2-trace, and a solution of e^2 + e = a when the trace vanishes
  // (p = 2).  Returns false if no solution exists in this field.
  int trace(const Elem& a) const;
  bool artin_schreier_solve(const Elem& a, Elem& out) const;

  std::string to_string(const Elem& a) const;

 private:
  int p_, k_;
  uint64_t order_;
  Elem mod_;  // degree-k monic modulus, k+1 coefficients
};

// The modulus picked by Fq for the given parameters (exposed for tests).
std::vector<uint8_t> smallest_irreducible(int p, int k);

}  // namespace km2
