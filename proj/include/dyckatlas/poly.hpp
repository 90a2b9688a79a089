#pragma once

#include <string>
#include <vector>

#include "dyckatlas/ints.hpp"

namespace dyck {

// Polynomial with exact integer coefficients, kept canonical (no trailing
// zero coefficients; the zero polynomial has an empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, int power);
  // [n]_q = 1 + q + ... + q^{n-1}.
  static IntPolynomial q_integer(int n);
  static IntPolynomial q_factorial(int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int value_at_one() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  bool operator==(const IntPolynomial& o) const = default;

  // Exact division; throws when the divisor does not divide evenly.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  // "c0 + c1*q + c2*q^2 + ...": zero terms skipped, unit coefficients
  // elided, the zero polynomial printed as "0".
  std::string to_string(const std::string& variable) const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

}  // namespace dyck
