#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "km2/mog.hpp"

using namespace km2;

static Mask cells(std::initializer_list<const char*> labels) {
  Mask m = 0;
  for (auto l : labels) m |= 1u << Mog::get().cell_by_label(l);
  return m;
}

TEST_CASE("759 octads, 4096 codewords, weight enumerator") {
  const Mog& mog = Mog::get();
  CHECK(mog.octads().size() == 759);
  CHECK(mog.codewords().size() == 4096);
  std::map<int, int> weights;
  for (Mask w : mog.codewords()) weights[popcount24(w)]++;
  CHECK(weights[0] == 1);
  CHECK(weights[8] == 759);
  CHECK(weights[12] == 2576);
  CHECK(weights[16] == 759);
  CHECK(weights[24] == 1);
}

TEST_CASE("steiner uniqueness: the (3+5) octad over {I,II,III,inf_0,inf_1}") {
  const Mog& mog = Mog::get();
  Mask five = cells({"I", "II", "III", "inf_0", "inf_1"});
  Mask o = mog.octad_through(five);
  CHECK(o == (mog.line_at_infinity() | Mog::kRomanMask));
  auto cls = mog.classify_octad(o);
  CHECK(cls.tag == "3+5");
  CHECK(cls.payload == mog.line_at_infinity());
}

TEST_CASE("octad class histogram 21/168/360/210") {
  const Mog& mog = Mog::get();
  std::map<std::string, int> hist;
  for (Mask o : mog.octads()) hist[mog.classify_octad(o).tag]++;
  CHECK(hist["3+5"] == 21);
  CHECK(hist["2+6"] == 168);
  CHECK(hist["1+7"] == 360);
  CHECK(hist["0+8"] == 210);
}

TEST_CASE("two octads meet in 0, 2 or 4 cells") {
  const auto& octads = Mog::get().octads();
  for (size_t i = 0; i < octads.size(); i += 13)
    for (size_t j = 0; j < octads.size(); ++j) {
      if (i == j) continue;
      int t = popcount24(octads[i] & octads[j]);
      CHECK((t == 0 || t == 2 || t == 4));
    }
}

TEST_CASE("every 2+6 payload passes the arc test") {
  const Mog& mog = Mog::get();
  int n = 0;
  for (Mask q : mog.ovals()) {
    CHECK(mog.is_oval(q));
    ++n;
  }
  CHECK(n == 168);
}

TEST_CASE("Q0 is an oval whose octad carries Romans II, III") {
  const Mog& mog = Mog::get();
  CHECK(mog.is_oval(mog.q0()));
  CHECK(mog.oval_romans(mog.q0()) ==
        ((1u << Mog::kCellII) | (1u << Mog::kCellIII)));
}

TEST_CASE("duad lines and axes: 15 + 6 = 21") {
  const Mog& mog = Mog::get();
  std::set<Mask> duads;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      Mask l = mog.duad_line(a, b);
      CHECK(popcount24(l & mog.q0()) == 2);
      duads.insert(l);
    }
  CHECK(duads.size() == 15);
  CHECK(mog.axis_lines().size() == 6);
  for (Mask ax : mog.axis_lines()) {
    CHECK(popcount24(ax & mog.q0()) == 0);
    CHECK(duads.count(ax) == 0);
  }
}

TEST_CASE("the duad line i0 contains the three i0 synthemes") {
  const Mog& mog = Mog::get();
  Mask l = mog.line_by_label("i0");
  CHECK(l == cells({"oo", "0", "i0.12.34", "i0.13.24", "i0.14.23"}));
  CHECK(mog.line_label_b(l) == "i0");
  // in chart A this line is the line at infinity
  CHECK(l == mog.line_at_infinity());
}

TEST_CASE("totals expand to their five synthemes and cover all 15 duads") {
  const Mog& mog = Mog::get();
  for (Mask ax : mog.axis_lines()) {
    std::string lab = mog.total_label(ax);
    CHECK(mog.expand_total(lab) == ax);
    // five synthemes partition the 15 duads
    std::set<std::pair<int, int>> seen;
    for (int c = 0; c < 24; ++c) {
      if (!((ax >> c) & 1)) continue;
      std::string syn = mog.cell_label_b(c);
      for (int d = 0; d < 3; ++d) {
        auto key = std::make_pair(syn[3 * d] < syn[3 * d + 1] ? syn[3 * d] : syn[3 * d + 1],
                                  syn[3 * d] < syn[3 * d + 1] ? syn[3 * d + 1] : syn[3 * d]);
        CHECK(seen.insert(key).second);
      }
    }
    CHECK(seen.size() == 15);
  }
}

TEST_CASE("each of the 15 synthemes appears exactly once as a cell label") {
  const Mog& mog = Mog::get();
  std::set<std::string> syn;
  int romans = 0, ovalpts = 0;
  for (int c = 0; c < 24; ++c) {
    std::string l = mog.cell_label_b(c);
    if (l == "I" || l == "II" || l == "III")
      ++romans;
    else if (l.size() <= 2)
      ++ovalpts;
    else
      CHECK(syn.insert(l).second);
  }
  CHECK(romans == 3);
  CHECK(ovalpts == 6);
  CHECK(syn.size() == 15);
}

TEST_CASE("exactly two ovals through each 3-subset of Q0, Romans {I,III}/{I,II}") {
  const Mog& mog = Mog::get();
  // the displayed pair for T = {0,1,2}
  Mask T = cells({"0", "1", "2"});
  auto two = mog.ovals_through_triple(T);
  Mask star = cells({"0", "1", "2", "i0.14.23", "i2.04.13", "i1.03.24"});
  Mask bullet = cells({"0", "1", "2", "i0.13.24", "i1.04.23", "i2.03.14"});
  CHECK(two[0] == star);
  CHECK(two[1] == bullet);

  // all 20 triples give exactly two, with the stated Roman pairs
  int digits[6];
  int n = 0;
  for (int s = 0; s < 6; ++s) digits[n++] = s;
  int count = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        Mask t = (1u << mog.q0_cell(digits[a])) | (1u << mog.q0_cell(digits[b])) |
                 (1u << mog.q0_cell(digits[c]));
        auto pair = mog.ovals_through_triple(t);
        CHECK(mog.oval_romans(pair[0]) == ((1u << Mog::kCellI) | (1u << Mog::kCellIII)));
        CHECK(mog.oval_romans(pair[1]) == ((1u << Mog::kCellI) | (1u << Mog::kCellII)));
        ++count;
      }
  CHECK(count == 20);
}

TEST_CASE("chart A line labels round-trip") {
  const Mog& mog = Mog::get();
  for (Mask l : mog.lines()) {
    CHECK(mog.line_by_label(mog.line_label_a(l)) == l);
    CHECK(mog.line_by_label(mog.line_label_b(l)) == l);
  }
  CHECK(mog.line_by_label("y=x") == mog.sloped_line(1, 0));
  CHECK(mog.line_by_label("y=wx+wb") == mog.sloped_line(2, 3));
}

TEST_CASE("errors") {
  const Mog& mog = Mog::get();
  CHECK_THROWS(mog.classify_octad(0xFFu));  // not an octad
  CHECK_THROWS(mog.ovals_through_triple(cells({"I", "0", "1"})));
  CHECK_THROWS(mog.line_by_label("z=w"));
  CHECK_THROWS(mog.octad_through(0x7u));
}
