#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dyckatlas/path.hpp"

using namespace dyck;

TEST_CASE("parsing and basic geometry") {
  const DyckPath p = DyckPath::parse("UDUUDUDD");
  CHECK(p.order() == 4);
  CHECK(p.step_count() == 8);
  CHECK(p.word() == "UDUUDUDD");
  CHECK(p.step(1) == Step::Up);
  CHECK(p.step(2) == Step::Down);
  CHECK(p.step(8) == Step::Down);
  CHECK(p.height(-4) == 0);
  CHECK(p.height(-3) == 1);
  CHECK(p.height(0) == 2);
  CHECK(p.height(4) == 0);
  CHECK(p.heights() == std::vector<int>{0, 1, 0, 1, 2, 1, 2, 1, 0});

  CHECK(DyckPath::parse("()(())") == DyckPath::parse("UDUUDD"));
  CHECK(DyckPath::parse("") == DyckPath());
  CHECK(DyckPath().order() == 0);
  CHECK(DyckPath().height(0) == 0);
  CHECK(DyckPath::zigzag(3).word() == "UDUDUD");
  CHECK(DyckPath::zigzag(0) == DyckPath());

  CHECK_THROWS_AS(DyckPath::parse("UX"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("DU"), std::invalid_argument);   // dips below 0
  CHECK_THROWS_AS(DyckPath::parse("UUD"), std::invalid_argument);  // does not end at 0
  CHECK_THROWS_AS(DyckPath::parse("U(IC"), std::invalid_argument);
}

TEST_CASE("chords pair up steps with their matching down steps") {
  const DyckPath p = DyckPath::parse("UDUUDUDD");
  const std::vector<Chord> cs = chords(p);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == Chord{1, 2, -4, -2});
  CHECK(cs[1] == Chord{3, 8, -2, 4});
  CHECK(cs[2] == Chord{4, 5, -1, 1});
  CHECK(cs[3] == Chord{6, 7, 1, 3});
  CHECK(chord_length(p, cs[0]) == 1);
  CHECK(chord_length(p, cs[1]) == 3);
  CHECK(chord_length(p, cs[2]) == 1);
  CHECK(chords(DyckPath()).empty());
}

TEST_CASE("weakly_above and discrepancy") {
  const DyckPath lo = DyckPath::parse("UDUD");
  const DyckPath hi = DyckPath::parse("UUDD");
  CHECK(weakly_above(hi, lo));
  CHECK(!weakly_above(lo, hi));
  CHECK(weakly_above(lo, lo));
  // discrepancy counts steps where the lower goes down while the upper
  // goes up; UDUD vs UUDD differ only in their middle two steps.
  CHECK(discrepancy(lo, hi) == 1);
  CHECK(discrepancy(lo, lo) == 0);
  CHECK(discrepancy(DyckPath::parse("UDUUDUDD"), DyckPath::parse("UUUDUDDD")) == 2);
  CHECK(discrepancy(DyckPath::parse("UDUUDUDD"), DyckPath::parse("UUUUDDDD")) == 1);
}

TEST_CASE("spread inserts a peak; contract removes one") {
  CHECK(spread(DyckPath::parse("UD"), 1).word() == "UDUD");
  CHECK(spread(DyckPath::parse("UD"), -1).word() == "UDUD");
  CHECK(spread(DyckPath::parse("UD"), 0).word() == "UUDD");
  CHECK(spread(DyckPath::parse("UUDD"), 0).word() == "UUUDDD");
  CHECK(spread(DyckPath(), 0).word() == "UD");

  CHECK(contract(DyckPath::parse("UDUD"), -1).word() == "UD");
  CHECK(contract(DyckPath::parse("UDUD"), 1).word() == "UD");
  CHECK(contract(DyckPath::parse("UUUDDD"), 0).word() == "UUDD");
  CHECK_THROWS_AS(contract(DyckPath::parse("UDUD"), 0), std::invalid_argument);  // valley, not peak

  // contract undoes spread at every legal column
  for (const char* w : {"UD", "UUDD", "UDUUDUDD"}) {
    const DyckPath p = DyckPath::parse(w);
    for (int s = -p.order(); s <= p.order(); ++s) CHECK(contract(spread(p, s), s) == p);
  }
}

TEST_CASE("mirror reflects about the vertical axis") {
  CHECK(mirror(DyckPath::parse("UDUUDUDD")).word() == "UUDUDDUD");
  CHECK(mirror(DyckPath::zigzag(3)) == DyckPath::zigzag(3));
  CHECK(mirror(mirror(DyckPath::parse("UUDUDDUD"))) == DyckPath::parse("UUDUDDUD"));
}

TEST_CASE("skew shapes count boxes per column") {
  const SkewShape s(DyckPath::parse("UDUD"), DyckPath::parse("UUDD"));
  CHECK(s.boxes_in_column(-1) == 0);
  CHECK(s.boxes_in_column(0) == 1);
  CHECK(s.boxes_in_column(1) == 0);
  CHECK(s.box_count() == 1);

  const SkewShape big(DyckPath::parse("UDUUDUDD"), DyckPath::parse("UUUUDDDD"));
  CHECK(big.box_count() == 4);
  CHECK(big.boxes_in_column(0) == 1);

  CHECK_THROWS_AS(SkewShape(DyckPath::parse("UUDD"), DyckPath::parse("UDUD")),
                  std::invalid_argument);
  CHECK_THROWS_AS(SkewShape(DyckPath::parse("UD"), DyckPath::parse("UDUD")),
                  std::invalid_argument);  // different orders
}
