#pragma once

#include <set>
#include <utility>
#include <vector>

namespace dyck {

// A word is a sequence of distinct integers; a permutation is a word whose
// entries are exactly 1..n.  Positions are 1-based throughout this module.
using Word = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_.at(static_cast<size_t>(i - 1)); }  // 1-based
  const std::vector<int>& values() const { return values_; }
  Permutation inverse() const;
  Permutation reversed() const;

  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const { return values_ < o.values_; }

 private:
  std::vector<int> values_;
};

void require_distinct(const Word& w);  // throws on repeated entries

// Inversions and descents.
long long inv(const Word& w);
int des(const Word& w);
std::set<std::pair<int, int>> inversion_set(const Word& w);  // {(i,j): i<j, w_i>w_j}
std::set<int> descent_set(const Word& w);                    // {i: w_i > w_{i+1}}

// Replace each entry by its rank; the unique permutation with the same
// relative order.
Permutation standardize(const Word& w);

// mad = desdif + res where desdif sums the descent drops w_i - w_{i+1} and
// res counts, for each descent i, earlier entries sandwiched between
// w_{i+1} and w_i.
long long desdif(const Word& w);
long long res(const Word& w);
long long mad(const Word& w);

// {k > i : w_i > w_k > w_{i+1}}: the positions after i whose value is
// sandwiched by the descent pair at i.
std::set<int> rem_set(const Word& w, int i);

// Sum over descents i of sigma of (sigma_i - sigma_{i+1} + tau_i - tau_{i+1}).
// Requires the inversion set of sigma to be contained in that of tau.
long long desdif2(const Permutation& sigma, const Permutation& tau);

struct AreaTiles {
  long long area = 0;
  long long tiles = 0;
  bool operator==(const AreaTiles&) const = default;
};

// Closed forms for the ribbon-growth tiling statistics straight from the
// chord endpoint words: area sums l_i - r_{i+1} over descents of l, and
// tiles subtracts twice the count of later left endpoints sandwiched by
// the descent pair.
AreaTiles closed_area_tiles(const Word& left_ends, const Word& right_ends);

// The same two statistics written against the standardized words sigma,
// tau via desdif2, des and the rem sets (symmetric difference for area,
// size sum for tiles).
AreaTiles rem_formulas(const Permutation& sigma, const Permutation& tau);

// Classical pattern avoidance: 231 means some i<j<k has w_k < w_i < w_j;
// 132 means some i<j<k has w_i < w_k < w_j.
bool avoids_231(const Word& w);
bool avoids_132(const Word& w);

}  // namespace dyck
