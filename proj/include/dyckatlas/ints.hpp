#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

// Exact arbitrary-precision integer used for all counting results, so
// factorials and polynomial coefficients never overflow.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// (2n-1)!! = 1 * 3 * 5 * ... * (2n-1); the number of perfect matchings of
// {1,...,2n} and of increasing plane trees on n+1 vertices.
inline Int double_factorial_odd(int n) {
  Int r = 1;
  for (int k = 3; k <= 2 * n - 1; k += 2) r *= k;
  return r;
}

inline Int catalan(int n) {
  // C(2n, n) / (n + 1), computed exactly.
  Int num = 1;
  for (int k = n + 2; k <= 2 * n; ++k) num *= k;
  return num / factorial(n);
}

// Global cap for exhaustive enumerations (linear extensions, tilings of a
// shape, tilings over all upper paths).  Guards against runaway sweeps;
// initialized from the DYCK_ATLAS_MAX_N environment variable when set.
int exhaustive_limit();
void set_exhaustive_limit(int n);

}  // namespace dyck
