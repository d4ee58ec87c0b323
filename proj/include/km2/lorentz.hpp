// Arithmetic in II_{1,25} = U + Leech: vectors (m, n, lambda) with
// x.y = m1 n2 + n1 m2 + <lam1, lam2>, Leech roots r = (-1 - lam^2/2, 1, lam),
// ADE recognition of root bases, extended (affine) fiber diagrams, exact
// rational projection to the orthogonal complement of a root basis, and the
// Niemeier root-type table.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "km2/intmat.hpp"
#include "km2/leech.hpp"

namespace km2 {

struct LVec {
  int64_t m = 0, n = 0;
  LeechVec lam{};

  bool operator==(const LVec& o) const = default;
};

// canonical order: lexicographic on (m, n, coords)
bool lvec_less(const LVec& a, const LVec& b);

int64_t lpair(const LVec& a, const LVec& b);
LVec leech_root(const LeechVec& lam);
LVec lvec_add(const LVec& a, const LVec& b);
LVec lvec_sub(const LVec& a, const LVec& b);
LVec lvec_scale(int64_t c, const LVec& a);

// Rational classes in II_{1,25} tensor Q.
struct QClass {
  BRat m, n;
  std::array<BRat, 24> lam{};
};

QClass qclass(const LVec& v);
BRat qpair(const QClass& a, const QClass& b);
int64_t qpair_int(const QClass& a, const QClass& b);  // throws if not integral
QClass qadd(const QClass& a, const QClass& b);
QClass qsub(const QClass& a, const QClass& b);
QClass qscale(const BRat& c, const QClass& a);
bool qis_zero(const QClass& a);
// least m >= 1 with m*v in II_{1,25}; throws if none below a safety cap
long integrality_multiplier(const QClass& v);

struct AdeError : std::runtime_error {
  explicit AdeError(const std::string& what) : std::runtime_error(what) {}
};

// multiset of simple types, e.g. { (A,3), (D,4) }
struct AdeType {
  std::vector<std::pair<char, int>> parts;  // sorted canonically

  std::string str() const;
  int rank() const;
  BInt cartan_det() const;  // product of (n+1 | 4 | 3 | 2 | 1)
  bool operator==(const AdeType& o) const = default;
  bool operator<(const AdeType& o) const;
  static AdeType parse(const std::string& s);  // "D4+D5", "2D5+2A7", "E8"
};

IMat gram(const std::vector<LVec>& v);
// Recognizes the diagram of a (-2)-root system basis; throws AdeError on
// cycles, high valence, double branches, or bad pairings.
AdeType ade_type(const std::vector<LVec>& roots);

// Extended (affine) fiber validation: the components with the given
// multiplicities must form the extended diagram of `type` ("A~15", "D~7",
// "E~8"), and F = sum mult_i C_i must satisfy F.F = 0 and F.C_i = 0.
struct FiberShape {
  char letter;  // 'A', 'D', 'E'
  int index;
  static FiberShape parse(const std::string& s);
  std::string str() const;
  int component_count() const { return index + 1; }
};
void validate_extended_fiber(const FiberShape& shape,
                             const std::vector<QClass>& comps,
                             const std::vector<int>& mults);

struct Projection {
  QClass delta;
  BRat norm;
  long multiplier;
  std::vector<BRat> coeffs;
};
Projection project(const LVec& r, const std::vector<LVec>& basis);

// Fixed Z-basis of II_{1,25}: f, g, then the 24 Leech basis rows.
const std::vector<LVec>& ii_basis();
IMat ii_gram();
// integer coordinates of v over ii_basis()
std::vector<BInt> ii_coords(const LVec& v);
// Z-basis (rows = ii-coordinates) of the saturated orthogonal complement
IMat perp_basis(const std::vector<LVec>& R);
IMat gram_in_ii(const IMat& coords);  // rows are ii-coordinates

// the 24 Niemeier root sublattice types; the empty type stands for Leech
const std::vector<AdeType>& niemeier_root_types();
bool is_niemeier_type(const AdeType& t);

}  // namespace km2
