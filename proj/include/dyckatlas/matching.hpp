#pragma once

#include <utility>
#include <vector>

#include "dyckatlas/path.hpp"
#include "dyckatlas/permstat.hpp"
#include "dyckatlas/poset.hpp"

namespace dyck {

// A perfect matching of {1,...,2n}, stored as pairs (min,max) sorted by
// their larger element.
class PerfectMatching {
 public:
  PerfectMatching() = default;
  explicit PerfectMatching(std::vector<std::pair<int, int>> pairs);
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool operator==(const PerfectMatching& o) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Recursive construction from a growth sequence: take the matching of the
// prefix, bump every number larger than p_n, then adjoin (p_n + 1, 2n).
PerfectMatching match_of(const GrowthSequence& p);

// Pair minima listed in the sorted-by-maxima order.
Word min_word(const PerfectMatching& m);

// Number of nested pairs: (a,b) inside (c,d) with c < a < b < d.
long long nestings(const PerfectMatching& m);

// Dyck path with an up step at each pair minimum and a down step at each
// maximum.
DyckPath matching_shape(const PerfectMatching& m);

// Per pair (aligned with pairs()): how many pairs nest strictly around it.
std::vector<int> nesting_numbers(const PerfectMatching& m);

// Rebuild the matching from its shape plus the nesting numbers attached to
// the up steps in position order.  Throws when no matching fits.
PerfectMatching matching_from_nesting_numbers(const DyckPath& shape,
                                              const std::vector<int>& labels_by_up_step);

}  // namespace dyck
