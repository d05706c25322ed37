#pragma once

#include <array>
#include <cstddef>

// Model Cartan subspace of sl(n,R) for n in {2,3}: trace-zero coordinate
// vectors, linear functionals with root/weight basis conversions, and the
// R / R_eps vectors used by the separation estimates.

namespace critex {

struct CartanVector {
  int n = 3;
  std::array<double, 3> a{0.0, 0.0, 0.0};

  double operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return a[static_cast<std::size_t>(i)]; }
};

CartanVector cartan_vector(double a1, double a2);
CartanVector cartan_vector(double a1, double a2, double a3);

CartanVector operator+(const CartanVector& x, const CartanVector& y);
CartanVector operator-(const CartanVector& x, const CartanVector& y);
CartanVector operator*(double c, const CartanVector& x);

// Linear functional phi(a) = sum coeffs_i * a_i. Coefficient lists differing
// by a constant shift agree on the trace-zero domain; canonical_form shifts
// so the last coefficient is 0 (used for equality only).
struct Functional {
  int n = 3;
  std::array<double, 3> coeffs{0.0, 0.0, 0.0};

  double operator()(const CartanVector& v) const;
};

Functional functional_raw(int n, const std::array<double, 3>& coeffs);
// phi = c1*alpha1 + c2*alpha2 with alpha1(a)=a1-a2, alpha2(a)=a2-a3 (n=3).
Functional functional_from_roots(double c1, double c2);
// phi = d1*omega1 + d2*omega2 with omega1(a)=a1, omega2(a)=a1+a2 (n=3).
Functional functional_from_weights(double d1, double d2);

Functional canonical_form(const Functional& f);
bool functional_equal(const Functional& f, const Functional& g, double tol = 1e-12);

// iota(a_1..a_n) = (-a_n, ..., -a_1).
CartanVector opposition_involution(const CartanVector& v);

// The unique R with omega_i(R) = 1 for every fundamental weight;
// (1, 0, -1) for n=3 and (1, -1) for n=2.
CartanVector r_vector(int n);

// R_eps = -log(sin eps) * R, for eps in (0, pi/2].
CartanVector r_epsilon(int n, double eps);

}  // namespace critex
