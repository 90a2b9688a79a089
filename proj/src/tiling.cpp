#include "dyckatlas/tiling.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace dyck {

DyckTile::DyckTile(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  if (boxes_.empty()) throw std::invalid_argument("tile needs at least one box");
  const int y0 = boxes_.front().y;
  int min_y = y0;
  for (size_t k = 1; k < boxes_.size(); ++k) {
    if (boxes_[k].x != boxes_[k - 1].x + 1)
      throw std::invalid_argument("tile boxes must occupy consecutive columns");
    int dy = boxes_[k].y - boxes_[k - 1].y;
    if (dy != 1 && dy != -1)
      throw std::invalid_argument("tile box heights must change by one per column");
    min_y = std::min(min_y, boxes_[k].y);
  }
  if (boxes_.back().y != y0 || min_y != y0)
    throw std::invalid_argument("tile must start and end at its minimal height");
}

DyckTiling::DyckTiling(SkewShape shape, std::vector<DyckTile> tiles)
    : shape_(std::move(shape)), tiles_(std::move(tiles)) {
  const int n = shape_.order();
  // Every box must lie in the shape, and each shape box must be covered
  // exactly once.
  std::vector<std::vector<int>> covered(static_cast<size_t>(2 * n + 1));
  for (int x = -n; x <= n; ++x)
    covered[static_cast<size_t>(x + n)].assign(
        static_cast<size_t>(shape_.boxes_in_column(x)), 0);
  for (const DyckTile& t : tiles_) {
    for (const Box& b : t.boxes()) {
      if (b.x <= -n || b.x >= n) throw std::invalid_argument("box column outside the shape");
      int base = shape_.lower().height(b.x);
      if (b.y < base || (b.y - base) % 2 != 0)
        throw std::invalid_argument("box does not sit on the shape lattice");
      int level = (b.y - base) / 2;
      auto& col = covered[static_cast<size_t>(b.x + n)];
      if (level >= static_cast<int>(col.size()))
        throw std::invalid_argument("box pokes above the upper path");
      if (++col[static_cast<size_t>(level)] > 1)
        throw std::invalid_argument("tiles overlap");
    }
  }
  for (const auto& col : covered)
    for (int c : col)
      if (c == 0) throw std::invalid_argument("tiles do not cover the shape");
  std::sort(tiles_.begin(), tiles_.end());
}

bool tiling_less(const DyckTiling& a, const DyckTiling& b) {
  if (a.upper() == b.upper()) return a.tiles() < b.tiles();
  return a.upper() < b.upper();
}

TilingStats stats(const DyckTiling& t) {
  TilingStats s;
  for (const DyckTile& tile : t.tiles()) s.area += tile.size();
  s.tiles = static_cast<long long>(t.tiles().size());
  assert((s.area + s.tiles) % 2 == 0);
  s.art = (s.area + s.tiles) / 2;
  s.dis = discrepancy(t.lower(), t.upper());
  return s;
}

namespace {

bool sits_above(const DyckTile& a, const DyckTile& b) {
  // Some box of `a` straight above (same column, higher) a box of `b`.
  const int lo = std::max(a.left(), b.left());
  const int hi = std::min(a.right(), b.right());
  for (int x = lo; x <= hi; ++x)
    if (a.height_at(x) > b.height_at(x)) return true;
  return false;
}

bool extent_inside(const DyckTile& a, const DyckTile& b) {
  return b.left() <= a.left() && a.right() <= b.right();
}

bool pair_cover_inclusive(const DyckTile& a, const DyckTile& b) {
  if (sits_above(a, b) && !extent_inside(a, b)) return false;
  if (sits_above(b, a) && !extent_inside(b, a)) return false;
  return true;
}

}  // namespace

bool is_cover_inclusive(const DyckTiling& t) {
  const auto& tiles = t.tiles();
  for (size_t i = 0; i < tiles.size(); ++i)
    for (size_t j = i + 1; j < tiles.size(); ++j)
      if (!pair_cover_inclusive(tiles[i], tiles[j])) return false;
  return true;
}

namespace {

// Backtracking state for the brute-force enumeration.  Boxes are addressed
// by (column, level); the seed for each new tile is the lowest uncovered
// box in the leftmost uncovered column, which is necessarily the leftmost
// box of its tile.
struct TilingSearch {
  const SkewShape& shape;
  int n;
  std::vector<std::vector<bool>> covered;  // [x+n][level]
  std::vector<DyckTile> placed;
  std::vector<DyckTiling> out;

  explicit TilingSearch(const SkewShape& s) : shape(s), n(s.order()) {
    covered.resize(static_cast<size_t>(2 * n + 1));
    for (int x = -n; x <= n; ++x)
      covered[static_cast<size_t>(x + n)].assign(
          static_cast<size_t>(shape.boxes_in_column(x)), false);
  }

  bool box_free(int x, int y) const {
    if (x <= -n || x >= n) return false;
    int base = shape.lower().height(x);
    if (y < base || (y - base) % 2 != 0) return false;
    int level = (y - base) / 2;
    const auto& col = covered[static_cast<size_t>(x + n)];
    if (level >= static_cast<int>(col.size())) return false;
    return !col[static_cast<size_t>(level)];
  }

  void set_covered(const DyckTile& t, bool value) {
    for (const Box& b : t.boxes()) {
      int level = (b.y - shape.lower().height(b.x)) / 2;
      covered[static_cast<size_t>(b.x + n)][static_cast<size_t>(level)] = value;
    }
  }

  bool admissible(const DyckTile& t) const {
    for (const DyckTile& p : placed)
      if (!pair_cover_inclusive(t, p)) return false;
    return true;
  }

  void place_and_continue(std::vector<Box> boxes) {
    DyckTile tile(std::move(boxes));
    if (!admissible(tile)) return;
    set_covered(tile, true);
    placed.push_back(tile);
    search();
    placed.pop_back();
    set_covered(tile, false);
  }

  // Extend a ribbon rightward from its fixed start height; a tile may
  // close whenever it returns to the start height.
  void grow_ribbon(std::vector<Box>& boxes, int y0) {
    const Box last = boxes.back();
    if (last.y == y0) place_and_continue(boxes);
    for (int dy : {+1, -1}) {
      int ny = last.y + dy;
      if (ny < y0) continue;
      if (!box_free(last.x + 1, ny)) continue;
      boxes.push_back(Box{last.x + 1, ny});
      grow_ribbon(boxes, y0);
      boxes.pop_back();
    }
  }

  void search() {
    for (int x = -n; x <= n; ++x) {
      auto& col = covered[static_cast<size_t>(x + n)];
      for (size_t level = 0; level < col.size(); ++level) {
        if (col[level]) continue;
        int y0 = shape.lower().height(x) + 2 * static_cast<int>(level);
        std::vector<Box> boxes{Box{x, y0}};
        grow_ribbon(boxes, y0);
        return;  // all tilings extend through this seed box
      }
    }
    out.emplace_back(shape, placed);  // everything covered
  }
};

}  // namespace

std::vector<DyckTiling> enumerate_tilings(const SkewShape& shape) {
  if (shape.order() > exhaustive_limit())
    throw std::invalid_argument("enumerate_tilings: order exceeds the exhaustive limit");
  TilingSearch search(shape);
  search.search();
  std::sort(search.out.begin(), search.out.end(), tiling_less);
  return std::move(search.out);
}

namespace {

void upper_paths_from(const DyckPath& lower, std::vector<Step>& prefix, int x, int h,
                      std::vector<DyckPath>& out) {
  const int n = lower.order();
  if (x == n) {
    if (h == 0) out.emplace_back(prefix);
    return;
  }
  // Feasibility: must reach height >= lower everywhere and return to 0.
  for (Step s : {Step::Up, Step::Down}) {
    int nh = h + (s == Step::Up ? 1 : -1);
    if (nh < lower.height(x + 1)) continue;
    if (nh > n - (x + 1)) continue;  // cannot come back down in time
    prefix.push_back(s);
    upper_paths_from(lower, prefix, x + 1, nh, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_upper_paths(const DyckPath& lower) {
  std::vector<DyckPath> out;
  std::vector<Step> prefix;
  upper_paths_from(lower, prefix, -lower.order(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DyckTiling> enumerate_all(const DyckPath& lower) {
  if (lower.order() > exhaustive_limit())
    throw std::invalid_argument("enumerate_all: order exceeds the exhaustive limit");
  std::vector<DyckTiling> out;
  for (const DyckPath& upper : enumerate_upper_paths(lower)) {
    auto part = enumerate_tilings(SkewShape(lower, upper));
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end(), tiling_less);
  return out;
}

namespace {

// h_c: the minimum column box count over the chord's span, i.e. the most
// tiles that can cross the chord end to end inside the shape.
int shape_min_boxes(const SkewShape& shape, int from_col, int to_col) {
  int m = shape.boxes_in_column(from_col);
  for (int x = from_col + 1; x <= to_col; ++x) m = std::min(m, shape.boxes_in_column(x));
  return m;
}

}  // namespace

ChordLabeling chord_labels(const DyckTiling& t) {
  if (!is_cover_inclusive(t))
    throw std::invalid_argument("chord labels need a cover-inclusive tiling");
  const ChordPoset poset(t.lower());
  ChordLabeling lab;
  lab.g.reserve(static_cast<size_t>(poset.size()));
  lab.h.reserve(static_cast<size_t>(poset.size()));
  for (int i = 0; i < poset.size(); ++i) {
    const Chord& c = poset.chord(i);
    int g = 0;
    for (const DyckTile& tile : t.tiles())
      if (tile.left() <= c.left_col && c.right_col <= tile.right()) ++g;
    int h = shape_min_boxes(t.shape(), c.left_col, c.right_col);
    lab.g.push_back(g);
    lab.h.push_back(h);
  }
  return lab;
}

DyckTiling tiling_from_labels(const SkewShape& shape, const std::vector<int>& g) {
  const ChordPoset poset(shape.lower());
  const int n = shape.order();
  if (static_cast<int>(g.size()) != poset.size())
    throw std::invalid_argument("need one label per chord");
  for (int i = 0; i < poset.size(); ++i) {
    const Chord& c = poset.chord(i);
    int h = shape_min_boxes(shape, c.left_col, c.right_col);
    if (g[static_cast<size_t>(i)] < 0 || g[static_cast<size_t>(i)] > h)
      throw std::invalid_argument("label exceeds its chord bound");
    int par = poset.parent(i);
    if (par >= 0 && g[static_cast<size_t>(i)] < g[static_cast<size_t>(par)])
      throw std::invalid_argument("labels must weakly increase up the chord poset");
  }
  // Boxes at the same level join across the gap between columns x and x+1
  // exactly when the level is below the strip count: the largest label of
  // a chord spanning that gap.
  std::vector<int> strip(static_cast<size_t>(2 * n), 0);  // gap x -> x+1 at index x+n
  for (int i = 0; i < poset.size(); ++i) {
    const Chord& c = poset.chord(i);
    for (int x = c.left_col; x < c.right_col; ++x)
      strip[static_cast<size_t>(x + n)] =
          std::max(strip[static_cast<size_t>(x + n)], g[static_cast<size_t>(i)]);
  }
  int max_level = 0;
  for (int x = -n; x <= n; ++x) max_level = std::max(max_level, shape.boxes_in_column(x));
  std::vector<DyckTile> tiles;
  for (int level = 0; level < max_level; ++level) {
    std::vector<Box> run;
    for (int x = -n; x <= n; ++x) {
      bool has_box = level < shape.boxes_in_column(x);
      bool joins = !run.empty() && has_box && level < strip[static_cast<size_t>(x - 1 + n)];
      if (!joins && !run.empty()) {
        tiles.emplace_back(std::move(run));
        run.clear();
      }
      if (has_box) run.push_back(Box{x, shape.lower().height(x) + 2 * level});
    }
    if (!run.empty()) tiles.emplace_back(std::move(run));
  }
  DyckTiling result(shape, std::move(tiles));
  assert(is_cover_inclusive(result));
  return result;
}

IntPolynomial genfun(const SkewShape& shape) {
  const ChordPoset poset(shape.lower());
  std::vector<int> h(static_cast<size_t>(poset.size()));
  for (int i = 0; i < poset.size(); ++i)
    h[static_cast<size_t>(i)] =
        shape_min_boxes(shape, poset.chord(i).left_col, poset.chord(i).right_col);
  // f(c, v): generating function of bounded weakly increasing labelings of
  // the subtree at c with the label of c at least v, by label sum.
  auto f = [&](auto&& self, int c, int v) -> IntPolynomial {
    if (v > h[static_cast<size_t>(c)]) return IntPolynomial{};
    IntPolynomial exact = IntPolynomial::monomial(1, v);
    for (int child : poset.children(c)) exact *= self(self, child, v);
    return self(self, c, v + 1) + exact;
  };
  IntPolynomial result = IntPolynomial::constant(1);
  for (int r : poset.top_level()) result *= f(f, r, 0);
  return result;
}

DyckTableau to_tableau(const DyckTiling& t) {
  const int n = t.order();
  if (!(t.lower() == DyckPath::zigzag(n)))
    throw std::invalid_argument("tableaux are defined over a zigzag lower path");
  std::vector<Step> upper_steps;
  upper_steps.reserve(static_cast<size_t>(2 * (n + 1)));
  upper_steps.push_back(Step::Up);
  for (Step s : t.upper().steps()) upper_steps.push_back(s);
  upper_steps.push_back(Step::Down);
  return DyckTableau{DyckPath(std::move(upper_steps)), chord_labels(t).g};
}

DyckTiling from_tableau(const DyckTableau& tab) {
  const int m = tab.upper.order();
  if (m < 1) throw std::invalid_argument("tableau upper path must have positive order");
  const int n = m - 1;
  if (tab.upper.step(1) != Step::Up || tab.upper.step(2 * m) != Step::Down)
    throw std::invalid_argument("tableau upper path must start with U and end with D");
  std::vector<Step> inner(tab.upper.steps().begin() + 1, tab.upper.steps().end() - 1);
  DyckPath upper{std::move(inner)};  // throws when the interior is not a path
  if (static_cast<int>(tab.dot_heights.size()) != n)
    throw std::invalid_argument("tableau needs one dot per valley column");
  return tiling_from_labels(SkewShape(DyckPath::zigzag(n), upper), tab.dot_heights);
}

std::string to_text(const DyckTiling& t) {
  std::ostringstream out;
  out << "lower";
  if (t.order() > 0) out << " " << t.lower().word();
  out << "\nupper";
  if (t.order() > 0) out << " " << t.upper().word();
  out << "\n";
  for (const DyckTile& tile : t.tiles()) {
    out << "tile";
    for (const Box& b : tile.boxes()) out << " " << b.x << "," << b.y;
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      start = text.size();
    } else {
      lines.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
  }
  return lines;
}

DyckPath parse_path_line(const std::string& line, const std::string& key) {
  if (line == key) return DyckPath();
  if (line.rfind(key + " ", 0) != 0)
    throw std::invalid_argument("expected '" + key + " <word>' line");
  std::string word = line.substr(key.size() + 1);
  if (word.empty() || word.find(' ') != std::string::npos)
    throw std::invalid_argument("malformed '" + key + "' line");
  return DyckPath::parse(word);
}

int parse_int_strict(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number in tile line");
  size_t pos = 0;
  int value = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  return value;
}

}  // namespace

DyckTiling parse_tiling(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 2) throw std::invalid_argument("tiling text needs lower and upper lines");
  DyckPath lower = parse_path_line(lines[0], "lower");
  DyckPath upper = parse_path_line(lines[1], "upper");
  std::vector<DyckTile> tiles;
  for (size_t k = 2; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    if (line.rfind("tile", 0) != 0 || (line.size() > 4 && line[4] != ' '))
      throw std::invalid_argument("expected 'tile' line");
    std::vector<Box> boxes;
    size_t pos = 4;
    while (pos < line.size()) {
      if (line[pos] != ' ') throw std::invalid_argument("malformed tile line spacing");
      ++pos;
      size_t next = line.find(' ', pos);
      std::string token = line.substr(pos, next == std::string::npos ? next : next - pos);
      size_t comma = token.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("tile boxes must be written x,y");
      boxes.push_back(Box{parse_int_strict(token.substr(0, comma)),
                          parse_int_strict(token.substr(comma + 1))});
      pos += token.size();
    }
    if (boxes.empty()) throw std::invalid_argument("tile line without boxes");
    tiles.emplace_back(std::move(boxes));
  }
  if (!std::is_sorted(tiles.begin(), tiles.end()))
    throw std::invalid_argument("tiles must appear in canonical order");
  return DyckTiling(SkewShape(std::move(lower), std::move(upper)), std::move(tiles));
}

}  // namespace dyck
