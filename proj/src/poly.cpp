#include "dyckatlas/poly.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dyck {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(Int c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(Int c, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<Int> v(static_cast<size_t>(power) + 1, Int(0));
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::q_integer(int n) {
  return IntPolynomial(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

IntPolynomial IntPolynomial::q_factorial(int n) {
  IntPolynomial r = constant(1);
  for (int k = 1; k <= n; ++k) r *= q_integer(k);
  return r;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

Int IntPolynomial::value_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  IntPolynomial rem = *this;
  std::vector<Int> q(
      coeffs_.size() >= divisor.coeffs_.size() ? coeffs_.size() - divisor.coeffs_.size() + 1 : 0,
      Int(0));
  const Int& lead = divisor.coeffs_.back();
  while (!rem.is_zero() && rem.coeffs_.size() >= divisor.coeffs_.size()) {
    Int factor = rem.coeffs_.back() / lead;
    if (factor * lead != rem.coeffs_.back())
      throw std::invalid_argument("polynomial division is not exact");
    size_t shift = rem.coeffs_.size() - divisor.coeffs_.size();
    q[shift] = factor;
    for (size_t k = 0; k < divisor.coeffs_.size(); ++k)
      rem.coeffs_[shift + k] -= factor * divisor.coeffs_[k];
    rem.trim();
  }
  if (!rem.is_zero()) throw std::invalid_argument("polynomial division is not exact");
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << variable;
      if (k >= 2) out << "^" << k;
    }
  }
  return out.str();
}

int exhaustive_limit_storage(int set_to, bool do_set) {
  static int limit = [] {
    if (const char* env = std::getenv("DYCK_ATLAS_MAX_N")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 7;
  }();
  if (do_set) limit = set_to;
  return limit;
}

int exhaustive_limit() { return exhaustive_limit_storage(0, false); }
void set_exhaustive_limit(int n) { exhaustive_limit_storage(n, true); }

}  // namespace dyck
