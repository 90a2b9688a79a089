#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dyckatlas/poly.hpp"

using namespace dyck;

TEST_CASE("polynomial construction and arithmetic") {
  const IntPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.coeff(0) == 0);
  CHECK(zero.to_string("q") == "0");

  const IntPolynomial c = IntPolynomial::constant(5);
  CHECK(c.degree() == 0);
  CHECK(c.value_at_one() == 5);

  const IntPolynomial m = IntPolynomial::monomial(3, 2);  // 3q^2
  CHECK(m.degree() == 2);
  CHECK(m.coeff(2) == 3);
  CHECK(m.coeff(1) == 0);

  const IntPolynomial s = c + m;
  CHECK(s.to_string("q") == "5 + 3*q^2");
  CHECK((s - s).is_zero());

  const IntPolynomial p = IntPolynomial(std::vector<Int>{1, 1});  // 1 + q
  CHECK((p * p).to_string("q") == "1 + 2*q + q^2");
  CHECK((p * zero).is_zero());
  CHECK((p * p).value_at_one() == 4);
}

TEST_CASE("q-integers and q-factorials") {
  CHECK(IntPolynomial::q_integer(1).to_string("q") == "1");
  CHECK(IntPolynomial::q_integer(3).to_string("q") == "1 + q + q^2");
  CHECK(IntPolynomial::q_factorial(0).to_string("q") == "1");
  CHECK(IntPolynomial::q_factorial(3).to_string("q") == "1 + 2*q + 2*q^2 + q^3");
  CHECK(IntPolynomial::q_factorial(4).value_at_one() == 24);
  // [4]_q! = [4]_q * [3]_q!
  CHECK(IntPolynomial::q_factorial(4) ==
        IntPolynomial::q_integer(4) * IntPolynomial::q_factorial(3));
}

TEST_CASE("exact division") {
  const IntPolynomial num = IntPolynomial::q_factorial(4);
  const IntPolynomial den = IntPolynomial::q_integer(2);
  CHECK(num.divide_exact(den) * den == num);
  CHECK_THROWS_AS(IntPolynomial::constant(1).divide_exact(IntPolynomial::q_integer(2)),
                  std::invalid_argument);
}

TEST_CASE("printing elides unit coefficients and power one") {
  const IntPolynomial p =
      IntPolynomial::monomial(1, 4) + IntPolynomial::monomial(2, 1) + IntPolynomial::constant(1);
  CHECK(p.to_string("q") == "1 + 2*q + q^4");
  CHECK(p.to_string("z") == "1 + 2*z + z^4");
}
