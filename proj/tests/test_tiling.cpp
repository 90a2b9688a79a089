#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dyckatlas/tiling.hpp"

using namespace dyck;

namespace {

DyckTiling make(const char* lower, const char* upper, std::vector<DyckTile> tiles) {
  return DyckTiling(SkewShape(DyckPath::parse(lower), DyckPath::parse(upper)), std::move(tiles));
}

}  // namespace

TEST_CASE("tiles are ribbons of diagonally adjacent boxes") {
  const DyckTile three({{-1, 0}, {0, 1}, {1, 0}});
  CHECK(three.size() == 3);
  CHECK(three.left() == -1);
  CHECK(three.right() == 1);
  CHECK(three.has_column(0));
  CHECK(!three.has_column(2));
  CHECK(three.height_at(0) == 1);

  CHECK_THROWS_AS(DyckTile({}), std::invalid_argument);
  CHECK_THROWS_AS(DyckTile({{0, 0}, {1, 1}}), std::invalid_argument);  // ends differ in height
  CHECK_THROWS_AS(DyckTile({{0, 0}, {2, 0}}), std::invalid_argument);  // gap in columns
  CHECK_THROWS_AS(DyckTile({{0, 0}, {1, 2}}), std::invalid_argument);  // height jump
  CHECK_THROWS_AS(DyckTile({{0, 2}, {1, 1}, {2, 2}}), std::invalid_argument);  // dips below ends
}

TEST_CASE("tilings must cover the shape exactly") {
  const DyckTiling one = make("UDUD", "UUDD", {DyckTile({{0, 0}})});
  CHECK(one.order() == 2);
  CHECK(stats(one) == TilingStats{1, 1, 1, 1});

  CHECK(stats(DyckTiling::empty(DyckPath::parse("UDUD"))) == TilingStats{0, 0, 0, 0});

  CHECK_THROWS_WITH_AS(make("UDUD", "UUDD", {DyckTile({{0, 0}}), DyckTile({{0, 0}})}),
                       "tiles overlap", std::invalid_argument);
  CHECK_THROWS_AS(make("UDUD", "UUDD", {}), std::invalid_argument);  // box left uncovered
  CHECK_THROWS_AS(make("UDUD", "UDUD", {DyckTile({{0, 0}})}), std::invalid_argument);
  CHECK_THROWS_AS(make("UDUD", "UUDD", {DyckTile({{1, 0}})}), std::invalid_argument);
}

TEST_CASE("cover-inclusive means stacked tiles nest horizontally") {
  // a wide tile sitting on a narrow one breaks the property
  const DyckTiling bad = make("UDUDUDUD", "UUUUDDDD",
                              {DyckTile({{-2, 0}}), DyckTile({{-1, 1}, {0, 2}, {1, 1}}),
                               DyckTile({{0, 0}}), DyckTile({{2, 0}})});
  CHECK(!is_cover_inclusive(bad));

  // the reverse stacking is fine
  const DyckTiling good = make("UDUUDDUD", "UUUUDDDD",
                               {DyckTile({{-2, 0}}), DyckTile({{-1, 1}}), DyckTile({{0, 2}}),
                                DyckTile({{1, 1}}), DyckTile({{2, 0}})});
  CHECK(is_cover_inclusive(good));
  CHECK(is_cover_inclusive(DyckTiling::empty(DyckPath())));
}

TEST_CASE("brute-force enumeration lists cover-inclusive tilings canonically") {
  const auto two = enumerate_tilings(SkewShape(DyckPath::zigzag(3), DyckPath::parse("UUUDDD")));
  REQUIRE(two.size() == 2);
  CHECK(two[0].tiles().size() == 3);  // canonical order: sorted tile lists
  CHECK(two[1].tiles().size() == 1);
  CHECK(two[1].tiles()[0] == DyckTile({{-1, 0}, {0, 1}, {1, 0}}));

  const auto eight = enumerate_all(DyckPath::parse("UDUUDUDD"));
  CHECK(eight.size() == 8);
  for (const DyckTiling& t : eight) CHECK(is_cover_inclusive(t));

  CHECK(enumerate_upper_paths(DyckPath::zigzag(3)).size() == 5);
  CHECK(enumerate_upper_paths(DyckPath::parse("UUUDDD")).size() == 1);
  CHECK(enumerate_all(DyckPath()).size() == 1);
}

TEST_CASE("chord labels determine the tiling") {
  const SkewShape shape(DyckPath::parse("UDUUDDUD"), DyckPath::parse("UUUUDDDD"));
  const auto tilings = enumerate_tilings(shape);
  REQUIRE(tilings.size() == 3);
  // tile counts 5, 3, 1 correspond to label sums 0, 1, 2
  for (const DyckTiling& t : tilings) {
    const ChordLabeling lab = chord_labels(t);
    CHECK(lab.h == std::vector<int>{0, 1, 1, 0});
    long long sum = 0;
    for (int g : lab.g) sum += g;
    CHECK(2 * sum == stats(t).area - stats(t).tiles);
    CHECK(tiling_from_labels(shape, lab.g) == t);
  }
  CHECK(chord_labels(tilings[2]).g == std::vector<int>{0, 1, 1, 0});  // one 5-box tile
  CHECK(genfun(shape).to_string("x") == "1 + x + x^2");
  CHECK(genfun(SkewShape(DyckPath::zigzag(3), DyckPath::parse("UUUDDD"))).to_string("x") ==
        "1 + x");
  CHECK(genfun(SkewShape(DyckPath(), DyckPath())).to_string("x") == "1");

  CHECK_THROWS_WITH_AS(tiling_from_labels(shape, {0, 0, 2, 0}), "label exceeds its chord bound",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(tiling_from_labels(shape, {0, 1, 0, 0}),
                       "labels must weakly increase up the chord poset", std::invalid_argument);
  CHECK_THROWS_AS(tiling_from_labels(shape, {0, 0}), std::invalid_argument);
}

TEST_CASE("tableaux encode zigzag-based tilings") {
  const auto tilings = enumerate_all(DyckPath::zigzag(2));
  REQUIRE(tilings.size() == 2);
  for (const DyckTiling& t : tilings) CHECK(from_tableau(to_tableau(t)) == t);

  const DyckTableau tab = to_tableau(make("UDUD", "UUDD", {DyckTile({{0, 0}})}));
  CHECK(tab.upper == DyckPath::parse("UUUDDD"));
  CHECK(tab.dot_heights == std::vector<int>{0, 0});

  // round trip through the flat tableau of the empty order-1 tiling
  CHECK(from_tableau(DyckTableau{DyckPath::parse("UUDD"), {0}}) ==
        DyckTiling::empty(DyckPath::parse("UD")));

  CHECK_THROWS_AS(to_tableau(DyckTiling::empty(DyckPath::parse("UUDD"))), std::invalid_argument);
  CHECK_THROWS_AS(from_tableau(DyckTableau{DyckPath::parse("UDUD"), {0}}),
                  std::invalid_argument);  // interior is not a path
  CHECK_THROWS_AS(from_tableau(DyckTableau{DyckPath::parse("UUUDDD"), {0}}),
                  std::invalid_argument);  // needs one dot per valley column
}

TEST_CASE("canonical ordering is by upper path then tiles") {
  const auto all = enumerate_all(DyckPath::zigzag(2));
  REQUIRE(all.size() == 2);
  CHECK(tiling_less(all[0], all[1]));
  CHECK(!tiling_less(all[1], all[0]));
  CHECK(!tiling_less(all[0], all[0]));
  CHECK(all[0].upper().word() == "UUDD");  // U sorts before D
  CHECK(all[1].upper().word() == "UDUD");
}
