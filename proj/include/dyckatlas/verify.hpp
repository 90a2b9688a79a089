#pragma once

#include <string>
#include <vector>

#include "dyckatlas/tiling.hpp"

namespace dyck {

// Outcome of one exhaustive verification sweep.
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string summary;                 // e.g. "23 paths checked"
  std::vector<std::string> failures;   // counterexample dumps, capped
};

// Each suite sweeps every object of order 0..max_n (permutation suites start
// at order 1) and cross-checks independently computed quantities.

// extension counts against the hook product, factorial sums, q-hook at q=1,
// inversion generating function, and growth-sequence round-trips
SuiteResult verify_hook(int max_n);

// q^art over enumerated tilings against the q-hook polynomial
SuiteResult verify_qart(int max_n);

// z^dis over enumerated tilings against z^des over extensions
SuiteResult verify_zdis(int max_n);

// matching identities, min-word descents, strip/ribbon round-trips at
// perm_n, and image exhaustion against brute-force enumeration at shape_n
SuiteResult verify_matching(int perm_n, int shape_n);

// mad against art over the minimal path, Mahonian distribution, closed
// area/tiles formulas, and containment of the endpoint inversion sets
SuiteResult verify_mad(int max_n);

// 231-avoiders onto one-box tilings (and the mirrored 132 variant)
SuiteResult verify_patterns(int max_n);

// chord labelings: sum rule, tiling round-trip, count match, bound tightness
SuiteResult verify_poset(int max_n);

// recursion-computed generating function against brute force per shape
SuiteResult verify_genfun(int max_n);

// tableau round-trip and the n! count over the minimal lower path
SuiteResult verify_tableaux(int max_n);

}  // namespace dyck
