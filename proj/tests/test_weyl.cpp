#include "doctest.h"

#include <cmath>

#include "critex/weyl.hpp"

using namespace critex;

TEST_CASE("r vector satisfies the weight normalization") {
  const CartanVector r3 = r_vector(3);
  CHECK(r3[0] == doctest::Approx(1.0));
  CHECK(r3[1] == doctest::Approx(0.0));
  CHECK(r3[2] == doctest::Approx(-1.0));
  // omega1(r) = a1 and omega2(r) = a1 + a2 are both 1
  CHECK(functional_from_weights(1.0, 0.0)(r3) == doctest::Approx(1.0));
  CHECK(functional_from_weights(0.0, 1.0)(r3) == doctest::Approx(1.0));

  const CartanVector r2 = r_vector(2);
  CHECK(r2[0] == doctest::Approx(1.0));
  CHECK(r2[1] == doctest::Approx(-1.0));
  CHECK_THROWS(r_vector(4));
}

TEST_CASE("r_epsilon scaling") {
  const double eps = 0.1;
  const CartanVector r = r_epsilon(3, eps);
  CHECK(r[0] == doctest::Approx(-std::log(std::sin(eps))));
  // sin eps = 1 kills the correction entirely
  const CartanVector r90 = r_epsilon(3, std::asin(1.0));
  CHECK(std::abs(r90[0]) < 1e-12);
  CHECK_THROWS(r_epsilon(3, 0.0));
  CHECK_THROWS(r_epsilon(3, 2.0));
}

TEST_CASE("functionals from roots and weights") {
  // alpha1 + alpha2 has raw coefficients (1, 0, -1)
  const Functional phi = functional_from_roots(1.0, 1.0);
  CHECK(phi.coeffs[0] == doctest::Approx(1.0));
  CHECK(phi.coeffs[1] == doctest::Approx(0.0));
  CHECK(phi.coeffs[2] == doctest::Approx(-1.0));
  CHECK(phi(cartan_vector(2.0, 0.0, -2.0)) == doctest::Approx(4.0));

  const Functional alpha1 = functional_from_roots(1.0, 0.0);
  CHECK(alpha1(cartan_vector(3.0, 1.0, -4.0)) == doctest::Approx(2.0));

  const Functional omega1 = functional_from_weights(1.0, 0.0);
  CHECK(omega1(cartan_vector(3.0, 1.0, -4.0)) == doctest::Approx(3.0));
  const Functional omega2 = functional_from_weights(0.0, 1.0);
  CHECK(omega2(cartan_vector(3.0, 1.0, -4.0)) == doctest::Approx(4.0));
}

TEST_CASE("canonical form and equality") {
  const Functional f = functional_raw(3, {2.0, 1.0, 1.0});
  const Functional g = functional_raw(3, {1.0, 0.0, 0.0});
  CHECK(functional_equal(f, g, 1e-12));
  CHECK_FALSE(functional_equal(f, functional_from_roots(1.0, 1.0), 1e-12));
  // on trace-zero vectors the shifted functionals agree
  const CartanVector v = cartan_vector(1.0, 0.5, -1.5);
  CHECK(f(v) == doctest::Approx(g(v)));
}

TEST_CASE("opposition involution") {
  const CartanVector v = cartan_vector(3.0, -1.0, -2.0);
  const CartanVector iv = opposition_involution(v);
  CHECK(iv[0] == doctest::Approx(2.0));
  CHECK(iv[1] == doctest::Approx(1.0));
  CHECK(iv[2] == doctest::Approx(-3.0));
  const CartanVector back = opposition_involution(iv);
  for (int i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(v[i]));
}

TEST_CASE("vector arithmetic") {
  const CartanVector a = cartan_vector(1.0, 2.0, -3.0);
  const CartanVector b = cartan_vector(0.5, -0.5, 0.0);
  CHECK((a + b)[0] == doctest::Approx(1.5));
  CHECK((a - b)[1] == doctest::Approx(2.5));
  CHECK((2.0 * a)[2] == doctest::Approx(-6.0));
}
