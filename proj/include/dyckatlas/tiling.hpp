#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dyckatlas/path.hpp"
#include "dyckatlas/poly.hpp"
#include "dyckatlas/poset.hpp"

namespace dyck {

// A box is the 45-degree square with bottom vertex (x,y), side vertices
// (x-1,y+1) and (x+1,y+1), and top vertex (x,y+2).
struct Box {
  int x = 0;
  int y = 0;
  bool operator==(const Box&) const = default;
  bool operator<(const Box& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// A Dyck tile: boxes in consecutive columns whose heights change by one
// per column, with both end boxes at the (equal, minimal) start height.
// The box count is odd automatically.
class DyckTile {
 public:
  explicit DyckTile(std::vector<Box> boxes);
  const std::vector<Box>& boxes() const { return boxes_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  int left() const { return boxes_.front().x; }
  int right() const { return boxes_.back().x; }
  bool has_column(int x) const { return left() <= x && x <= right(); }
  int height_at(int x) const { return boxes_.at(static_cast<size_t>(x - left())).y; }
  bool operator==(const DyckTile& o) const = default;
  bool operator<(const DyckTile& o) const { return boxes_ < o.boxes_; }

 private:
  std::vector<Box> boxes_;  // left to right
};

// A tiling of a skew shape by Dyck tiles.  Construction validates that the
// tiles are disjoint and cover the shape exactly; tiles are stored in
// canonical (sorted box list) order.
class DyckTiling {
 public:
  DyckTiling(SkewShape shape, std::vector<DyckTile> tiles);
  static DyckTiling empty(const DyckPath& lower) { return DyckTiling(SkewShape(lower, lower), {}); }
  const SkewShape& shape() const { return shape_; }
  const DyckPath& lower() const { return shape_.lower(); }
  const DyckPath& upper() const { return shape_.upper(); }
  int order() const { return shape_.order(); }
  const std::vector<DyckTile>& tiles() const { return tiles_; }
  bool operator==(const DyckTiling& o) const = default;

 private:
  SkewShape shape_;
  std::vector<DyckTile> tiles_;
};

// Canonical comparison: upper word first (U before D), then tile lists.
bool tiling_less(const DyckTiling& a, const DyckTiling& b);

struct TilingStats {
  long long area = 0;   // number of boxes
  long long tiles = 0;  // number of tiles
  long long art = 0;    // (area + tiles) / 2
  long long dis = 0;    // discrepancy of the boundary paths
  bool operator==(const TilingStats&) const = default;
};

TilingStats stats(const DyckTiling& t);

// Cover-inclusive: whenever a tile has a box straight above a box of
// another tile, its horizontal extent is contained in the other's.
bool is_cover_inclusive(const DyckTiling& t);

// All cover-inclusive tilings of the shape, canonically ordered.  The
// search is a direct backtracking over ribbon placements, independent of
// the growth bijections.  Guarded by exhaustive_limit().
std::vector<DyckTiling> enumerate_tilings(const SkewShape& shape);

// Every upper path weakly above `lower`, in canonical order.
std::vector<DyckPath> enumerate_upper_paths(const DyckPath& lower);

// Union of enumerate_tilings over all upper paths, canonically ordered.
std::vector<DyckTiling> enumerate_all(const DyckPath& lower);

// Chord labels of a cover-inclusive tiling: g_c counts the tiles having a
// box in both endpoint columns of chord c; h_c is the tight upper bound
// min over the chord's column span of the shape's column box counts.
// Labels are indexed like ChordPoset(lower) chords.
struct ChordLabeling {
  std::vector<int> g;
  std::vector<int> h;
};

ChordLabeling chord_labels(const DyckTiling& t);

// Inverse of chord_labels: the unique cover-inclusive tiling of the shape
// whose labels are g.  Requires 0 <= g_c <= h_c and g weakly increasing up
// the chord poset.
DyckTiling tiling_from_labels(const SkewShape& shape, const std::vector<int>& g);

// Generating function sum of x^{(area - tiles)/2} over all cover-inclusive
// tilings of the shape, computed by the bounded-labeling recursion over
// the chord poset (no tiling is enumerated).
IntPolynomial genfun(const SkewShape& shape);

// A Dyck tableau of order n: the skew shape zigzag(n+1)/upper with one
// dotted box per valley column of zigzag(n+1); dot_heights[i] counts the
// shape boxes below the dot in its column.
struct DyckTableau {
  DyckPath upper;                // order n+1
  std::vector<int> dot_heights;  // size n, valley columns left to right
  bool operator==(const DyckTableau&) const = default;
};

// Defined for tilings over a zigzag lower path: the tableau upper path is
// U + upper word + D and the dots record the chord labels.
DyckTableau to_tableau(const DyckTiling& t);
DyckTiling from_tableau(const DyckTableau& tab);

// Plain text format:
//   lower <word>
//   upper <word>
//   tile <x1>,<y1> <x2>,<y2> ...
// with boxes left to right and tiles in canonical order.  Parsing is
// strict: single spaces, no trailing whitespace, canonical tile order.
std::string to_text(const DyckTiling& t);
DyckTiling parse_tiling(std::string_view text);

}  // namespace dyck
