#include "km2/leech.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace km2 {

int64_t inner(const LeechVec& a, const LeechVec& b) {
  int64_t d = dot24(a, b);
  if (d % 8 != 0) throw std::domain_error("inner: pairing is not an integer");
  return -d / 8;
}

BRat inner_q(const LeechVec& a, const LeechVec& b) {
  return BRat(-dot24(a, b), 8);
}

LeechVec lv_zero() {
  LeechVec v{};
  return v;
}

LeechVec lv_point(int cell) {
  LeechVec v;
  v.fill(1);
  v[cell] = -3;
  return v;
}

LeechVec lv_point_hat(int cell) {
  LeechVec v;
  v.fill(1);
  v[cell] = 5;
  return v;
}

LeechVec lv_octad(Mask octad) {
  if (!Mog::get().is_octad(octad))
    throw std::invalid_argument("lv_octad: not an octad");
  LeechVec v{};
  for (int i = 0; i < 24; ++i)
    if ((octad >> i) & 1) v[i] = 2;
  return v;
}

LeechVec lv_line(Mask line) {
  const Mog& mog = Mog::get();
  if (mog.line_index(line) < 0) throw std::invalid_argument("lv_line: not a line");
  return lv_octad(line | Mog::kRomanMask);
}

LeechVec lv_oval(Mask oval) { return lv_octad(Mog::get().oval_octad(oval)); }

LeechVec lv_omega_minus_4(int cell) {
  LeechVec v;
  v.fill(1);
  v[cell] = -3;  // 1 - 4
  return v;
}

bool leech_contains(const LeechVec& v) {
  const Mog& mog = Mog::get();
  int m = ((v[0] % 2) + 2) % 2;
  int64_t sum = 0;
  Mask odd4 = 0;
  for (int i = 0; i < 24; ++i) {
    int r2 = ((v[i] % 2) + 2) % 2;
    if (r2 != m) return false;
    int r4 = ((v[i] - m) % 4 + 4) % 4;  // 0 or 2
    if (r4 == 2) odd4 |= 1u << i;
    sum += v[i];
  }
  if (!mog.is_codeword(odd4)) return false;
  return ((sum - 4 * m) % 8 + 8) % 8 == 0;
}

const std::vector<LeechVec>& leech_basis() {
  static std::vector<LeechVec> basis = [] {
    const Mog& mog = Mog::get();
    std::vector<LeechVec> gens;
    gens.push_back(lv_omega_minus_4(0));
    for (Mask o : mog.octads()) gens.push_back(lv_octad(o));
    // integer row elimination down to 24 independent rows
    IMat A((int)gens.size(), 24);
    for (size_t r = 0; r < gens.size(); ++r)
      for (int c = 0; c < 24; ++c) A.at((int)r, c) = gens[r][c];
    IMat H, U;
    hermite(A, H, U);
    std::vector<LeechVec> rows;
    for (int r = 0; r < H.rows && (int)rows.size() < 24; ++r) {
      bool nz = false;
      LeechVec v{};
      for (int c = 0; c < 24; ++c) {
        BInt x = H.at(r, c);
        if (x != 0) nz = true;
        v[c] = (int32_t)x.convert_to<long long>();
      }
      if (nz) rows.push_back(v);
    }
    if (rows.size() != 24)
      throw std::runtime_error("leech_basis: generators have rank != 24");
    for (const auto& v : rows)
      if (!leech_contains(v))
        throw std::runtime_error("leech_basis: basis row fails membership");
    return rows;
  }();
  return basis;
}

IMat leech_basis_gram() {
  const auto& b = leech_basis();
  IMat g(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) g.at(i, j) = inner(b[i], b[j]);
  return g;
}

ShellFamily shell_family(const ShellVec& v) {
  int mx = 0;
  for (int i = 0; i < 24; ++i) mx = std::max(mx, (int)std::abs(v[i]));
  if (mx == 4) return ShellFamily::Pair;
  if (mx == 3) return ShellFamily::Point;
  return ShellFamily::Octad;
}

const MinimalShell& MinimalShell::get() {
  static MinimalShell shell;
  return shell;
}

MinimalShell::MinimalShell() {
  const Mog& mog = Mog::get();
  vecs_.reserve(196560);

  // (+-2^8, 0^16): octad support, even number of minus signs
  for (Mask o : mog.octads()) {
    int cells[8], n = 0;
    for (int c = 0; c < 24; ++c)
      if ((o >> c) & 1) cells[n++] = c;
    for (int s = 0; s < 256; ++s) {
      if (__builtin_popcount(s) & 1) continue;
      ShellVec v{};
      for (int j = 0; j < 8; ++j) v[cells[j]] = ((s >> j) & 1) ? -2 : 2;
      vecs_.push_back(v);
    }
  }

  // (-+3, +-1^23): one vector per (codeword, position)
  for (Mask C : mog.codewords()) {
    for (int j = 0; j < 24; ++j) {
      ShellVec v;
      for (int i = 0; i < 24; ++i) v[i] = ((C >> i) & 1) ? -1 : 1;
      v[j] = ((C >> j) & 1) ? 3 : -3;
      vecs_.push_back(v);
    }
  }

  // (+-4^2, 0^22)
  for (int i = 0; i < 24; ++i)
    for (int j = i + 1; j < 24; ++j)
      for (int si = 0; si < 2; ++si)
        for (int sj = 0; sj < 2; ++sj) {
          ShellVec v{};
          v[i] = si ? -4 : 4;
          v[j] = sj ? -4 : 4;
          vecs_.push_back(v);
        }

  for (const auto& v : vecs_) {
    LeechVec lv;
    for (int i = 0; i < 24; ++i) lv[i] = v[i];
    if (!leech_contains(lv))
      throw std::runtime_error("minimal shell: vector fails membership");
    if (dot24(lv, lv) != 32)
      throw std::runtime_error("minimal shell: vector has wrong norm");
  }
  std::sort(vecs_.begin(), vecs_.end(),
            [](const ShellVec& a, const ShellVec& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                  b.end());
            });
  if (vecs_.size() != 196560)
    throw std::runtime_error("minimal shell: expected 196560 vectors");
}

std::array<size_t, 3> MinimalShell::family_counts() const {
  std::array<size_t, 3> c{0, 0, 0};
  for (const auto& v : vecs_) c[(int)shell_family(v)]++;
  return c;
}

LeechVec MinimalShell::lift(size_t i) const {
  LeechVec v;
  for (int j = 0; j < 24; ++j) v[j] = vecs_[i][j];
  return v;
}

namespace {
uint64_t fnv1a(const uint8_t* data, size_t n) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}
constexpr uint32_t kCacheMagic = 0x4b4d3243;  // "KM2C"
constexpr uint32_t kCacheVersion = 1;
}  // namespace

bool MinimalShell::save_cache(const std::string& path) const {
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return false;
  uint32_t header[4] = {kCacheMagic, kCacheVersion, (uint32_t)vecs_.size(), 0};
  uint64_t sum = fnv1a((const uint8_t*)vecs_.data(), vecs_.size() * 24);
  bool ok = std::fwrite(header, sizeof(header), 1, f) == 1 &&
            std::fwrite(&sum, sizeof(sum), 1, f) == 1 &&
            std::fwrite(vecs_.data(), 24, vecs_.size(), f) == vecs_.size();
  std::fclose(f);
  return ok;
}

bool MinimalShell::cache_matches(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  uint32_t header[4];
  uint64_t sum = 0;
  bool ok = std::fread(header, sizeof(header), 1, f) == 1 &&
            std::fread(&sum, sizeof(sum), 1, f) == 1;
  if (!ok || header[0] != kCacheMagic || header[1] != kCacheVersion) {
    std::fclose(f);
    return false;
  }
  std::vector<ShellVec> data(header[2]);
  ok = std::fread(data.data(), 24, data.size(), f) == data.size();
  std::fclose(f);
  if (!ok) return false;
  if (fnv1a((const uint8_t*)data.data(), data.size() * 24) != sum) return false;
  const auto& live = MinimalShell::get().vectors();
  return data.size() == live.size() &&
         std::memcmp(data.data(), live.data(), data.size() * 24) == 0;
}

void enumerate_norm6(const std::function<bool(const LeechVec&)>& visit) {
  const Mog& mog = Mog::get();
  auto emit = [&](const LeechVec& v) {
    if (dot24(v, v) != 48) throw std::logic_error("enumerate_norm6: bad norm");
    if (!leech_contains(v)) throw std::logic_error("enumerate_norm6: not a member");
    return visit(v);
  };

  // (+-2^12): dodecad support, even number of minus signs
  for (Mask C : mog.codewords()) {
    if (popcount24(C) != 12) continue;
    int cells[12], n = 0;
    for (int c = 0; c < 24; ++c)
      if ((C >> c) & 1) cells[n++] = c;
    for (int s = 0; s < 4096; ++s) {
      if (__builtin_popcount(s) & 1) continue;
      LeechVec v{};
      for (int j = 0; j < 12; ++j) v[cells[j]] = ((s >> j) & 1) ? -2 : 2;
      if (!emit(v)) return;
    }
  }

  // (+-4, +-2^8, 0^15): octad plus one +-4 outside, odd minus count
  for (Mask o : mog.octads()) {
    int cells[8], n = 0;
    for (int c = 0; c < 24; ++c)
      if ((o >> c) & 1) cells[n++] = c;
    for (int out = 0; out < 24; ++out) {
      if ((o >> out) & 1) continue;
      for (int s4 = 0; s4 < 2; ++s4)
        for (int s = 0; s < 256; ++s) {
          LeechVec v{};
          v[out] = s4 ? -4 : 4;
          for (int j = 0; j < 8; ++j) v[cells[j]] = ((s >> j) & 1) ? -2 : 2;
          int64_t sum = 0;
          for (int i = 0; i < 24; ++i) sum += v[i];
          if ((sum % 8 + 8) % 8 != 0) continue;
          if (!emit(v)) return;
        }
    }
  }

  // (+-5, +-1^23)
  for (Mask C : mog.codewords()) {
    for (int j = 0; j < 24; ++j) {
      LeechVec v;
      for (int i = 0; i < 24; ++i) v[i] = ((C >> i) & 1) ? -1 : 1;
      v[j] = ((C >> j) & 1) ? -5 : 5;
      if (!emit(v)) return;
    }
  }

  // (+-3^3, +-1^21): the positions not congruent to 1 mod 4 form a codeword
  for (Mask A : mog.codewords()) {
    for (int a = 0; a < 24; ++a)
      for (int b = a + 1; b < 24; ++b)
        for (int c = b + 1; c < 24; ++c) {
          Mask T = (1u << a) | (1u << b) | (1u << c);
          LeechVec v;
          for (int i = 0; i < 24; ++i) {
            bool inA = (A >> i) & 1, inT = (T >> i) & 1;
            v[i] = inA ? (inT ? 3 : -1) : (inT ? -3 : 1);
          }
          int64_t sum = 0;
          for (int i = 0; i < 24; ++i) sum += v[i];
          if (((sum - 4) % 8 + 8) % 8 != 0) continue;
          if (!emit(v)) return;
        }
  }
}

}  // namespace km2
