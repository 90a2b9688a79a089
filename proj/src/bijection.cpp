#include "dyckatlas/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyck {

namespace {

DyckPath path_from_heights(const std::vector<int>& h) {
  std::vector<Step> steps;
  steps.reserve(h.size() - 1);
  for (std::size_t i = 1; i < h.size(); ++i) {
    const int d = h[i] - h[i - 1];
    if (d == 1) {
      steps.push_back(Step::Up);
    } else if (d == -1) {
      steps.push_back(Step::Down);
    } else {
      throw std::logic_error("heights do not describe a lattice path");
    }
  }
  return DyckPath(std::move(steps));
}

// Raise the path by two at each listed column, i.e. stack a box on top of
// it in each of those columns.
DyckPath raise_at(const DyckPath& path, const std::vector<int>& columns) {
  std::vector<int> h = path.heights();
  for (int x : columns) h[static_cast<std::size_t>(x + path.order())] += 2;
  return path_from_heights(h);
}

std::vector<Box> spread_boxes(const std::vector<Box>& boxes, int s) {
  std::vector<Box> out;
  out.reserve(boxes.size() + 2);
  for (const Box& b : boxes) {
    if (b.x < s) {
      out.push_back({b.x - 1, b.y});
    } else if (b.x > s) {
      out.push_back({b.x + 1, b.y});
    } else {
      out.push_back({s - 1, b.y});
      out.push_back({s, b.y + 1});
      out.push_back({s + 1, b.y});
    }
  }
  return out;
}

}  // namespace

DyckTiling spread_tiling(const DyckTiling& t, int s) {
  const int n = t.order();
  if (s < -n || s > n) throw std::invalid_argument("spread column out of range");
  std::vector<DyckTile> tiles;
  tiles.reserve(t.tiles().size());
  for (const DyckTile& tile : t.tiles()) tiles.emplace_back(spread_boxes(tile.boxes(), s));
  return DyckTiling(SkewShape(spread(t.lower(), s), spread(t.upper(), s)), std::move(tiles));
}

DyckTiling contract_tiling(const DyckTiling& t, int s) {
  const int n = t.order();
  if (n == 0) throw std::invalid_argument("cannot contract the empty tiling");
  if (s < -(n - 1) || s > n - 1) throw std::invalid_argument("contract column out of range");
  std::vector<DyckTile> tiles;
  tiles.reserve(t.tiles().size());
  for (const DyckTile& tile : t.tiles()) {
    std::vector<Box> boxes;
    if (tile.right() <= s - 2) {
      for (const Box& b : tile.boxes()) boxes.push_back({b.x + 1, b.y});
    } else if (tile.left() >= s + 2) {
      for (const Box& b : tile.boxes()) boxes.push_back({b.x - 1, b.y});
    } else {
      // a tile meeting any of the three middle columns must cross all of
      // them with a peak at s, which collapses back to a single box
      if (!tile.has_column(s - 1) || !tile.has_column(s + 1))
        throw std::invalid_argument("no contraction: a tile only partly covers the pivot columns");
      const int y = tile.height_at(s - 1);
      if (tile.height_at(s) != y + 1 || tile.height_at(s + 1) != y)
        throw std::invalid_argument("no contraction: a tile has no peak at the pivot column");
      for (const Box& b : tile.boxes()) {
        if (b.x <= s - 2) {
          boxes.push_back({b.x + 1, b.y});
        } else if (b.x == s - 1) {
          boxes.push_back({s, y});
        } else if (b.x >= s + 2) {
          boxes.push_back({b.x - 1, b.y});
        }
      }
    }
    tiles.emplace_back(std::move(boxes));
  }
  return DyckTiling(SkewShape(contract(t.lower(), s), contract(t.upper(), s)), std::move(tiles));
}

int special_column(const DyckTiling& t) {
  const int n = t.order();
  if (n == 0) throw std::invalid_argument("the empty tiling has no special column");
  const DyckPath& mu = t.upper();
  for (int s = n; s >= -n + 1; --s) {
    if (mu.height(s) != mu.height(s - 1) + 1) continue;
    bool capped = false;
    for (const DyckTile& tile : t.tiles()) {
      if (tile.size() == 1 && tile.left() == s && tile.height_at(s) == mu.height(s) - 2) {
        capped = true;
        break;
      }
    }
    if (!capped) return s;
  }
  throw std::logic_error("no eligible column found");  // leftmost up step is always eligible
}

DyckTiling strip_grow(const DyckTiling& t, int s) {
  const int n = t.order();
  if (s < -n || s > n) throw std::invalid_argument("growth column out of range");
  const DyckTiling sp = spread_tiling(t, s);
  const DyckPath& mu = sp.upper();
  std::vector<DyckTile> tiles = sp.tiles();
  std::vector<int> raised;
  // one box on top of every up step of the spread upper path strictly
  // right of the growth column
  for (int x = s + 1; x < sp.order(); ++x) {
    if (mu.height(x + 1) == mu.height(x) + 1) {
      tiles.emplace_back(std::vector<Box>{{x, mu.height(x)}});
      raised.push_back(x);
    }
  }
  return DyckTiling(SkewShape(sp.lower(), raise_at(mu, raised)), std::move(tiles));
}

DyckTiling ribbon_grow(const DyckTiling& t, int s) {
  const int n = t.order();
  if (s < -n || s > n) throw std::invalid_argument("growth column out of range");
  const DyckTiling sp = spread_tiling(t, s);
  const int q = special_column(sp);
  if (q <= s) return sp;
  const DyckPath& mu = sp.upper();
  std::vector<DyckTile> tiles = sp.tiles();
  std::vector<int> raised;
  for (int x = s + 1; x < q; ++x) {
    tiles.emplace_back(std::vector<Box>{{x, mu.height(x)}});
    raised.push_back(x);
  }
  return DyckTiling(SkewShape(sp.lower(), raise_at(mu, raised)), std::move(tiles));
}

namespace {

// Drop the listed one-box tiles (identified by their single box), lower the
// upper path accordingly, then contract at s.
DyckTiling remove_and_contract(const DyckTiling& t, const std::vector<Box>& doomed, int s) {
  std::vector<bool> drop(t.tiles().size(), false);
  for (const Box& want : doomed) {
    bool found = false;
    for (std::size_t i = 0; i < t.tiles().size(); ++i) {
      const DyckTile& tile = t.tiles()[i];
      if (!drop[i] && tile.size() == 1 && tile.boxes().front() == want) {
        drop[i] = true;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("shrink expected a one-box tile that is not there");
  }
  std::vector<DyckTile> kept;
  kept.reserve(t.tiles().size() - doomed.size());
  for (std::size_t i = 0; i < t.tiles().size(); ++i)
    if (!drop[i]) kept.push_back(t.tiles()[i]);
  std::vector<int> h = t.upper().heights();
  for (const Box& b : doomed) h[static_cast<std::size_t>(b.x + t.order())] -= 2;
  const DyckTiling mid(SkewShape(t.lower(), path_from_heights(h)), std::move(kept));
  return contract_tiling(mid, s);
}

}  // namespace

std::pair<DyckTiling, int> strip_shrink(const DyckTiling& t) {
  const int s = special_column(t);
  const DyckPath& mu = t.upper();
  std::vector<Box> doomed;
  for (int x = s + 1; x <= t.order(); ++x)
    if (mu.height(x) == mu.height(x - 1) + 1) doomed.push_back({x, mu.height(x) - 2});
  return {remove_and_contract(t, doomed, s), s};
}

std::pair<DyckTiling, int> ribbon_shrink(const DyckTiling& t) {
  const int s = special_column(t);
  const DyckPath& mu = t.upper();
  std::vector<Box> doomed;
  for (int x = s + 1; x <= t.order(); ++x) {
    const Box want{x, mu.height(x) - 2};
    bool found = false;
    for (const DyckTile& tile : t.tiles()) {
      if (tile.size() == 1 && tile.boxes().front() == want) {
        found = true;
        break;
      }
    }
    if (!found) break;
    doomed.push_back(want);
  }
  return {remove_and_contract(t, doomed, s), s};
}

DyckTiling dts(const GrowthSequence& p) {
  DyckTiling t = DyckTiling::empty(DyckPath());
  for (int i = 1; i <= p.size(); ++i) t = strip_grow(t, p.at(i) - (i - 1));
  return t;
}

DyckTiling dtr(const GrowthSequence& p) {
  DyckTiling t = DyckTiling::empty(DyckPath());
  for (int i = 1; i <= p.size(); ++i) t = ribbon_grow(t, p.at(i) - (i - 1));
  return t;
}

namespace {

GrowthSequence unfold(const DyckTiling& t, std::pair<DyckTiling, int> (*shrink)(const DyckTiling&)) {
  if (!is_cover_inclusive(t)) throw std::invalid_argument("tiling is not cover-inclusive");
  std::vector<int> p(static_cast<std::size_t>(t.order()));
  DyckTiling cur = t;
  for (int i = t.order(); i >= 1; --i) {
    auto [shrunk, s] = shrink(cur);
    p[static_cast<std::size_t>(i - 1)] = s + (i - 1);
    cur = std::move(shrunk);
  }
  return GrowthSequence(std::move(p));
}

}  // namespace

GrowthSequence dts_inverse(const DyckTiling& t) { return unfold(t, &strip_shrink); }

GrowthSequence dtr_inverse(const DyckTiling& t) { return unfold(t, &ribbon_shrink); }

DyckTiling dts_of(const DyckPath& lower, const Permutation& sigma) {
  const ChordPoset poset(lower);
  return dts(growth_sequence(poset, labeling_of_sigma(poset, sigma)));
}

DyckTiling dtr_of(const DyckPath& lower, const Permutation& sigma) {
  const ChordPoset poset(lower);
  return dtr(growth_sequence(poset, labeling_of_sigma(poset, sigma)));
}

}  // namespace dyck
