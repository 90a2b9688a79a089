#pragma once

#include <utility>

#include "dyckatlas/path.hpp"
#include "dyckatlas/permstat.hpp"
#include "dyckatlas/poset.hpp"
#include "dyckatlas/tiling.hpp"

namespace dyck {

// Spread of a whole tiling at column s: both boundary paths and every tile
// are spread pointwise, so tiles touching column s gain two boxes.
DyckTiling spread_tiling(const DyckTiling& t, int s);
DyckTiling contract_tiling(const DyckTiling& t, int s);

// A column s is eligible when an up step of the upper path ends at s and
// the upper-path vertex there is not the top corner of a one-box tile; the
// special column is the rightmost eligible one (it always exists).
int special_column(const DyckTiling& t);

// Growth at column s in [-order, order]; both maps raise the order by one
// and both inverses report the column that was used.
DyckTiling strip_grow(const DyckTiling& t, int s);
DyckTiling ribbon_grow(const DyckTiling& t, int s);
std::pair<DyckTiling, int> strip_shrink(const DyckTiling& t);
std::pair<DyckTiling, int> ribbon_shrink(const DyckTiling& t);

// Fold of the growth maps over a growth sequence, starting from the empty
// tiling of order 0, growing at column s_i = p_i - (i-1).
DyckTiling dts(const GrowthSequence& p);
DyckTiling dtr(const GrowthSequence& p);
GrowthSequence dts_inverse(const DyckTiling& t);
GrowthSequence dtr_inverse(const DyckTiling& t);

// Convenience wrappers taking a lower path plus a linear extension of its
// chord poset.
DyckTiling dts_of(const DyckPath& lower, const Permutation& sigma);
DyckTiling dtr_of(const DyckPath& lower, const Permutation& sigma);

}  // namespace dyck
