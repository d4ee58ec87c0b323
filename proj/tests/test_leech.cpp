#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "km2/intmat.hpp"
#include "km2/leech.hpp"

using namespace km2;

TEST_CASE("named vector norms") {
  const Mog& mog = Mog::get();
  CHECK(inner(lv_zero(), lv_zero()) == 0);
  CHECK(inner(lv_point(3), lv_point(3)) == -4);
  CHECK(inner(lv_point_hat(6), lv_point_hat(6)) == -6);
  CHECK(inner(lv_line(mog.line_at_infinity()), lv_line(mog.line_at_infinity())) == -4);
  CHECK(inner(lv_oval(mog.q0()), lv_oval(mog.q0())) == -4);
  // nu_Omega - 4 nu_j coincides with [P] at P = j
  CHECK(lv_omega_minus_4(13) == lv_point(13));
  CHECK(inner(lv_omega_minus_4(0), lv_omega_minus_4(0)) == -4);
}

TEST_CASE("[Q0] has support Q0 plus Romans II, III") {
  const Mog& mog = Mog::get();
  LeechVec v = lv_oval(mog.q0());
  Mask supp = 0;
  for (int i = 0; i < 24; ++i)
    if (v[i]) supp |= 1u << i;
  CHECK(popcount24(supp) == 8);
  CHECK(supp == (mog.q0() | (1u << Mog::kCellII) | (1u << Mog::kCellIII)));
}

TEST_CASE("octad pair inner products follow the intersection size") {
  const auto& octads = Mog::get().octads();
  for (size_t i = 0; i < octads.size(); i += 11)
    for (size_t j = 0; j < octads.size(); j += 7) {
      int64_t p = inner(lv_octad(octads[i]), lv_octad(octads[j]));
      int t = popcount24(octads[i] & octads[j]);
      CHECK(t % 2 == 0);
      CHECK(p == -(int64_t)t / 2);
    }
}

TEST_CASE("membership: dictionary vectors in, perturbations out") {
  const Mog& mog = Mog::get();
  CHECK(leech_contains(lv_zero()));
  CHECK(leech_contains(lv_point(17)));
  CHECK(leech_contains(lv_point_hat(2)));
  CHECK(leech_contains(lv_line(mog.lines()[7])));
  CHECK(leech_contains(lv_oval(mog.ovals()[45])));
  LeechVec nu{};
  nu[0] = 1;  // nu_infinity alone: norm -1/8
  CHECK_FALSE(leech_contains(nu));
  LeechVec bad = lv_octad(mog.octads()[0]);
  bad[0] += 1;
  CHECK_FALSE(leech_contains(bad));
  // octad support but invalid mod-4 structure
  LeechVec odd4 = lv_octad(mog.octads()[3]);
  for (int i = 0; i < 24; ++i) odd4[i] *= 3;  // 6 on the octad: {i: 2 mod 4} empty? 6 mod 4 = 2 -> fine
  CHECK(leech_contains(odd4));               // 3x a member stays a member
  LeechVec shift{};
  shift[5] = 2;
  CHECK_FALSE(leech_contains(shift));  // weight-1 "codeword" support
}

TEST_CASE("membership cross-check against random generator combinations") {
  const auto& basis = leech_basis();
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 10000; ++trial) {
    LeechVec v{};
    for (int b = 0; b < 24; ++b) {
      int c = coef(rng);
      if (!c) continue;
      for (int i = 0; i < 24; ++i) v[i] += c * basis[b][i];
    }
    CHECK(leech_contains(v));
    // evenness of the norm
    int64_t d = dot24(v, v);
    CHECK(d % 16 == 0);  // norm = -d/8 is an even integer
  }
  // perturbing one coordinate of a member never stays inside
  for (int trial = 0; trial < 200; ++trial) {
    LeechVec v = basis[trial % 24];
    v[trial % 24] += 1;
    CHECK_FALSE(leech_contains(v));
  }
}

TEST_CASE("basis gram has determinant 1") {
  IMat g = leech_basis_gram();
  CHECK(det(g) == 1);
  auto sig = signature(g);
  CHECK(sig.first == 0);
  CHECK(sig.second == 24);
}

TEST_CASE("minimal shell: 196560 = 97152 + 98304 + 1104") {
  const auto& shell = MinimalShell::get();
  CHECK(shell.size() == 196560);
  auto fam = shell.family_counts();
  CHECK(fam[(int)ShellFamily::Octad] == 97152);
  CHECK(fam[(int)ShellFamily::Point] == 98304);
  CHECK(fam[(int)ShellFamily::Pair] == 1104);
  // canonical order, no duplicates
  for (size_t i = 1; i < shell.size(); ++i)
    CHECK(shell.vectors()[i - 1] < shell.vectors()[i]);
}

TEST_CASE("every [P] and [L] named vector appears in the shell") {
  const Mog& mog = Mog::get();
  auto find = [&](const LeechVec& v) {
    ShellVec sv;
    for (int i = 0; i < 24; ++i) sv[i] = (int8_t)v[i];
    const auto& vecs = MinimalShell::get().vectors();
    return std::binary_search(vecs.begin(), vecs.end(), sv);
  };
  for (int c = 0; c < 24; ++c) CHECK(find(lv_point(c)));
  for (Mask l : mog.lines()) CHECK(find(lv_line(l)));
}

TEST_CASE("no roots: norm -2 is impossible") {
  // all odd vectors have |v|^2 >= 24; even candidates with sum v_i^2 = 16
  // are (+-4,0^23) or (+-2^4,0^20), and both fail the congruences
  for (int i = 0; i < 24; ++i)
    for (int s = 0; s < 2; ++s) {
      LeechVec v{};
      v[i] = s ? -4 : 4;
      CHECK_FALSE(leech_contains(v));
    }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    LeechVec v{};
    std::set<int> pos;
    while (pos.size() < 4) pos.insert((int)(rng() % 24));
    for (int p : pos) v[p] = (rng() & 1) ? 2 : -2;
    CHECK_FALSE(leech_contains(v));
  }
}

TEST_CASE("minimal difference norms land in the allowed set") {
  const auto& shell = MinimalShell::get();
  std::mt19937_64 rng(99);
  std::set<int64_t> seen;
  for (int trial = 0; trial < 30000; ++trial) {
    size_t i = rng() % shell.size(), j = rng() % shell.size();
    LeechVec a = shell.lift(i), b = shell.lift(j);
    LeechVec d;
    for (int t = 0; t < 24; ++t) d[t] = a[t] - b[t];
    int64_t n = inner(d, d);
    seen.insert(n);
    bool ok = n == 0 || n == -4 || n == -6 || n == -8 || n == -10 || n == -12 ||
              n == -16;
    CHECK(ok);
  }
  CHECK(seen.count(-8) == 1);
}

TEST_CASE("shell cache round-trip") {
  const auto& shell = MinimalShell::get();
  std::string path = "/tmp/km2_shell_cache_test.bin";
  CHECK(shell.save_cache(path));
  CHECK(MinimalShell::cache_matches(path));
  std::remove(path.c_str());
}
