#include "critex/weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace critex {

CartanVector cartan_vector(double a1, double a2) {
  CartanVector v;
  v.n = 2;
  v.a = {a1, a2, 0.0};
  return v;
}

CartanVector cartan_vector(double a1, double a2, double a3) {
  CartanVector v;
  v.n = 3;
  v.a = {a1, a2, a3};
  return v;
}

CartanVector operator+(const CartanVector& x, const CartanVector& y) {
  CartanVector r = x;
  for (int i = 0; i < x.n; ++i) r[i] += y[i];
  return r;
}

CartanVector operator-(const CartanVector& x, const CartanVector& y) {
  CartanVector r = x;
  for (int i = 0; i < x.n; ++i) r[i] -= y[i];
  return r;
}

CartanVector operator*(double c, const CartanVector& x) {
  CartanVector r = x;
  for (int i = 0; i < x.n; ++i) r[i] *= c;
  return r;
}

double Functional::operator()(const CartanVector& v) const {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += coeffs[static_cast<std::size_t>(i)] * v[i];
  return s;
}

Functional functional_raw(int n, const std::array<double, 3>& coeffs) {
  if (n != 2 && n != 3) throw std::invalid_argument("functional_raw: n must be 2 or 3");
  Functional f;
  f.n = n;
  f.coeffs = coeffs;
  if (n == 2) f.coeffs[2] = 0.0;
  return f;
}

Functional functional_from_roots(double c1, double c2) {
  return functional_raw(3, {c1, c2 - c1, -c2});
}

Functional functional_from_weights(double d1, double d2) {
  return functional_raw(3, {d1 + d2, d2, 0.0});
}

Functional canonical_form(const Functional& f) {
  Functional g = f;
  const double last = f.coeffs[static_cast<std::size_t>(f.n - 1)];
  for (int i = 0; i < f.n; ++i) g.coeffs[static_cast<std::size_t>(i)] -= last;
  return g;
}

bool functional_equal(const Functional& f, const Functional& g, double tol) {
  if (f.n != g.n) return false;
  const Functional a = canonical_form(f), b = canonical_form(g);
  for (int i = 0; i < f.n; ++i) {
    if (std::abs(a.coeffs[static_cast<std::size_t>(i)] - b.coeffs[static_cast<std::size_t>(i)]) > tol)
      return false;
  }
  return true;
}

CartanVector opposition_involution(const CartanVector& v) {
  CartanVector r = v;
  for (int i = 0; i < v.n; ++i) r[i] = -v[v.n - 1 - i];
  return r;
}

CartanVector r_vector(int n) {
  // omega_i(R) = 1 for all fundamental weights. For n=3: a1=1, a1+a2=1,
  // trace 0. For n=2: a1=1, trace 0.
  if (n == 3) return cartan_vector(1.0, 0.0, -1.0);
  if (n == 2) return cartan_vector(1.0, -1.0);
  throw std::invalid_argument("r_vector: n must be 2 or 3");
}

CartanVector r_epsilon(int n, double eps) {
  if (!(eps > 0.0) || eps > std::asin(1.0))
    throw std::invalid_argument("r_epsilon: eps must lie in (0, pi/2]");
  return -std::log(std::sin(eps)) * r_vector(n);
}

}  // namespace critex
