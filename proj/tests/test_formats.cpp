#include <stdexcept>

#include "doctest.h"
#include "dyckatlas/render.hpp"
#include "dyckatlas/tiling.hpp"

using namespace dyck;

namespace {

const char* kOneBox =
    "lower UDUD\n"
    "upper UUDD\n"
    "tile 0,0\n";

DyckTiling one_box() {
  return DyckTiling(SkewShape(DyckPath::parse("UDUD"), DyckPath::parse("UUDD")),
                    {DyckTile({{0, 0}})});
}

}  // namespace

TEST_CASE("text serialization round-trips") {
  CHECK(to_text(one_box()) == kOneBox);
  CHECK(parse_tiling(kOneBox) == one_box());
  CHECK(to_text(DyckTiling::empty(DyckPath::parse("UD"))) == "lower UD\nupper UD\n");
  CHECK(parse_tiling("lower UD\nupper UD\n") == DyckTiling::empty(DyckPath::parse("UD")));
  // order zero: bare keys, no trailing blank
  CHECK(to_text(DyckTiling::empty(DyckPath())) == "lower\nupper\n");
  CHECK(parse_tiling("lower\nupper\n") == DyckTiling::empty(DyckPath()));
  CHECK_THROWS_AS(parse_tiling("lower \nupper \n"), std::invalid_argument);

  const DyckTiling big(SkewShape(DyckPath::parse("UDUUDDUD"), DyckPath::parse("UUUUDDDD")),
                       {DyckTile({{-2, 0}, {-1, 1}, {0, 2}, {1, 1}, {2, 0}})});
  CHECK(parse_tiling(to_text(big)) == big);
  CHECK(to_text(big) ==
        "lower UDUUDDUD\n"
        "upper UUUUDDDD\n"
        "tile -2,0 -1,1 0,2 1,1 2,0\n");
}

TEST_CASE("parsing is strict") {
  CHECK_THROWS_AS(parse_tiling(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling("upper UD\nlower UD\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling("lower UD\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling("lower UX\nupper UD\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling("lower UUDD\nupper UDUD\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling("lower UDUD\nupper UUDD\n"), std::invalid_argument);  // uncovered
  CHECK_THROWS_WITH_AS(parse_tiling("lower UDUD\nupper UUDD\ntile 0,0\ntile 0,0\n"),
                       "tiles overlap", std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling("lower UDUD\nupper UUDD\ntile 0,0 \n"),
                  std::invalid_argument);  // trailing space
  CHECK_THROWS_AS(parse_tiling("lower UDUD\nupper UUDD\ntile 0, 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling("lower UDUD\nupper UUDD\ntile 0;0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tiling("lower UDUD\nupper UUDD\ntile\n"), std::invalid_argument);
  // tiles must come in canonical order
  CHECK_THROWS_WITH_AS(
      parse_tiling("lower UDUDUDUD\nupper UUDDUUDD\ntile 2,0\ntile -2,0\n"),
      "tiles must appear in canonical order", std::invalid_argument);
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(DyckTiling::empty(DyckPath())) == "");
  CHECK(render_ascii(DyckTiling::empty(DyckPath::parse("UD"))) == " / \\\n");
  CHECK(render_ascii(one_box()) ==
        "   / \\\n"
        "    A\n"
        " / \\ / \\\n");
  // one letter per box, shared across a multi-box tile
  const DyckTiling big(SkewShape(DyckPath::parse("UDUUDDUD"), DyckPath::parse("UUUUDDDD")),
                       {DyckTile({{-2, 0}, {-1, 1}, {0, 2}, {1, 1}, {2, 0}})});
  CHECK(render_ascii(big) ==
        "       / \\\n"
        "        A\n"
        "     /     \\\n"
        "      A   A\n"
        "   /   / \\   \\\n"
        "    A       A\n"
        " / \\ /     \\ / \\\n");
}

TEST_CASE("svg rendering is deterministic") {
  CHECK(render_svg(one_box()) ==
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-50 -50 100 60\" width=\"100\" "
        "height=\"60\">\n"
        "<g fill=\"#e8ecf4\" stroke=\"#9aa4b8\" stroke-width=\"1\">\n"
        "<polygon points=\"0,0 20,-20 0,-40 -20,-20\"/>\n"
        "</g>\n"
        "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"2\">\n"
        "<polygon points=\"-20,-20 0,0 20,-20 0,-40\"/>\n"
        "</g>\n"
        "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"-40,0 -20,-20 "
        "0,-40 20,-20 40,0\"/>\n"
        "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"4\" points=\"-40,0 -20,-20 "
        "0,0 20,-20 40,0\"/>\n"
        "</svg>\n");
  // identical invocations yield identical bytes
  CHECK(render_svg(one_box()) == render_svg(one_box()));
  const std::string empty_svg = render_svg(DyckTiling::empty(DyckPath::parse("UD")));
  CHECK(empty_svg.find("<polygon") == std::string::npos);
  CHECK(empty_svg.find("<polyline") != std::string::npos);
}
