#include "gwl/milnor.hpp"

#include <doctest.h>

using namespace gwl;

namespace {

F2Poly mono(std::size_t n, unsigned d, Exponent e) {
  F2Poly p(n, d);
  p.toggle(e);
  return p;
}

}  // namespace

TEST_CASE("gf2 arithmetic") {
  const F2Poly x = F2Poly::variable(2, 4, 0), y = F2Poly::variable(2, 4, 1);
  const F2Poly s = x + y;
  CHECK(s * s == x * x + y * y);  // Frobenius
  CHECK((x + x).is_zero());
  CHECK((s * s * s * s * s).is_zero());  // degree 5 > 4 is truncated
  const F2Poly one = F2Poly::constant(2, 4, true);
  CHECK((one + x).inverse() * (one + x) == one);
  CHECK_THROWS_AS(x.inverse(), std::invalid_argument);
  CHECK_THROWS_AS(x * F2Poly::variable(3, 4, 0), std::invalid_argument);
}

TEST_CASE("omega for small n") {
  // n = 1: omega = 1 + x1.
  const F2Poly w1 = omega(1, 3);
  CHECK(w1 == F2Poly::constant(1, 3, true) + F2Poly::variable(1, 3, 0));
  // n = 2: no linear term, x1 x2 in degree 2.
  const F2Poly w2 = omega(2, 2);
  CHECK(w2.homogeneous_part(1).is_zero());
  CHECK(w2.homogeneous_part(2) == mono(2, 2, {1, 1}));
  // n = 3: degree-4 part x1^2 x2 x3 + x1 x2^2 x3 + x1 x2 x3^2.
  const F2Poly w3 = omega(3, 4);
  for (unsigned d = 1; d <= 3; ++d) CHECK(w3.homogeneous_part(d).is_zero());
  CHECK(w3.homogeneous_part(4) == mono(3, 4, {2, 1, 1}) + mono(3, 4, {1, 2, 1}) + mono(3, 4, {1, 1, 2}));
  CHECK_THROWS_AS(omega(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(omega(5, 16), std::out_of_range);
}

TEST_CASE("omega clears its own denominator") {
  // Expansion oracle: omega^{(-1)^n} times the odd product is the even product.
  for (std::size_t n = 1; n <= 4; ++n) {
    const unsigned d = 1u << (n - 1);
    F2Poly even = F2Poly::constant(n, d, true), odd = even;
    for (unsigned eps = 1; eps < (1u << n); ++eps) {
      F2Poly f = F2Poly::constant(n, d, true);
      for (std::size_t i = 0; i < n; ++i)
        if (eps & (1u << i)) f += F2Poly::variable(n, d, i);
      if (__builtin_popcount(eps) % 2 == 0) even = even * f;
      else odd = odd * f;
    }
    const F2Poly w = omega(n, d);
    const F2Poly lhs = n % 2 == 0 ? w : w.inverse();
    CHECK(lhs * odd == even);
  }
}

TEST_CASE("vanishing range and closed forms for n up to 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const unsigned d = 1u << (n - 1);
    CHECK(vanishing_range(n) == d);
    CHECK(top_class_product(n) == top_class_sum(n));
    CHECK(top_class_product(n) == omega(n, d).homogeneous_part(d));
    CHECK(milnor_check(n).all_pass());
  }
  CHECK(top_class_product(1) == F2Poly::variable(1, 1, 0));
  CHECK(top_class_product(2) == mono(2, 2, {1, 1}));
}

TEST_CASE("substituting a sum of two variables cancels every factor") {
  for (std::size_t n = 3; n <= 4; ++n) {
    const unsigned d = 1u << (n - 1);
    CHECK(omega(n, d).substitute(n - 1, {0, 1}) == F2Poly::constant(n, d, true));
    // Substituting a single variable does not.
    CHECK_FALSE(omega(n, d).substitute(n - 1, {0}) == F2Poly::constant(n, d, true));
  }
}
