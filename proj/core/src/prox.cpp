#include "critex/prox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace critex {

namespace {

double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

}  // namespace

Mat mat2(double a, double b, double c, double d) {
  Mat r;
  r.n = 2;
  r(0, 0) = a;
  r(0, 1) = b;
  r(1, 0) = c;
  r(1, 1) = d;
  return r;
}

Mat mat3(double a11, double a12, double a13,
         double a21, double a22, double a23,
         double a31, double a32, double a33) {
  Mat r;
  r.n = 3;
  r(0, 0) = a11; r(0, 1) = a12; r(0, 2) = a13;
  r(1, 0) = a21; r(1, 1) = a22; r(1, 2) = a23;
  r(2, 0) = a31; r(2, 1) = a32; r(2, 2) = a33;
  return r;
}

Mat identity(int n) {
  Mat r;
  r.n = n;
  for (int i = 0; i < n; ++i) r(i, i) = 1.0;
  return r;
}

Mat diag(const std::vector<double>& d) {
  Mat r;
  r.n = static_cast<int>(d.size());
  for (int i = 0; i < r.n; ++i) r(i, i) = d[static_cast<std::size_t>(i)];
  return r;
}

Mat operator*(const Mat& A, const Mat& B) {
  Mat r;
  r.n = A.n;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      double s = 0.0;
      for (int k = 0; k < A.n; ++k) s += A(i, k) * B(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat operator*(double c, const Mat& A) {
  Mat r = A;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) r(i, j) *= c;
  return r;
}

Mat transpose(const Mat& A) {
  Mat r;
  r.n = A.n;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) r(i, j) = A(j, i);
  return r;
}

double det(const Mat& A) {
  if (A.n == 2) return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
  return A(0, 0) * (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) -
         A(0, 1) * (A(1, 0) * A(2, 2) - A(1, 2) * A(2, 0)) +
         A(0, 2) * (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
}

Mat inverse(const Mat& A) {
  const double d = det(A);
  if (d == 0.0) throw std::domain_error("inverse: singular matrix");
  Mat r;
  r.n = A.n;
  if (A.n == 2) {
    r(0, 0) = A(1, 1) / d;
    r(0, 1) = -A(0, 1) / d;
    r(1, 0) = -A(1, 0) / d;
    r(1, 1) = A(0, 0) / d;
    return r;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
      const int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r(i, j) = (A(i1, j1) * A(i2, j2) - A(i1, j2) * A(i2, j1)) / d;
    }
  return r;
}

double max_abs(const Mat& A) {
  double m = 0.0;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) m = std::max(m, std::abs(A(i, j)));
  return m;
}

Vec3 apply(const Mat& A, const Vec3& v) {
  Vec3 r{0.0, 0.0, 0.0};
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) r[static_cast<std::size_t>(i)] += A(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

double norm(const Vec3& v, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
  return std::sqrt(s);
}

double dot(const Vec3& x, const Vec3& y, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  return s;
}

Vec3 normalized(const Vec3& v, int n) {
  const double s = norm(v, n);
  Vec3 r = v;
  if (s > 0.0)
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] /= s;
  return r;
}

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Mat exterior_square(const Mat& A) {
  if (A.n != 3) throw std::invalid_argument("exterior_square: n must be 3");
  static constexpr int P[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  Mat r;
  r.n = 3;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int i = P[a][0], j = P[a][1], k = P[b][0], l = P[b][1];
      r(a, b) = A(i, k) * A(j, l) - A(i, l) * A(j, k);
    }
  return r;
}

Mat dual_rep(const Mat& A) { return transpose(inverse(A)); }

// Cyclic Jacobi on the symmetric S = A^T A, accumulating V.
Svd svd(const Mat& A) {
  const int n = A.n;
  Mat S = transpose(A) * A;
  Mat V = identity(n);
  const double scale = std::max(max_abs(S), 1e-300);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::abs(S(p, q));
    if (off <= 1e-14 * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(S(p, q)) <= 1e-18 * scale) continue;
        const double theta = (S(q, q) - S(p, p)) / (2.0 * S(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double skp = S(k, p), skq = S(k, q);
          S(k, p) = c * skp - s * skq;
          S(k, q) = s * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          const double spk = S(p, k), sqk = S(q, k);
          S(p, k) = c * spk - s * sqk;
          S(q, k) = s * spk + c * sqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.begin() + n, [&](int i, int j) { return S(i, i) > S(j, j); });
  Svd out;
  out.u = identity(n);
  out.v = identity(n);
  out.sigma = {0.0, 0.0, 0.0};
  for (int c = 0; c < n; ++c) {
    const int src = order[static_cast<std::size_t>(c)];
    out.sigma[static_cast<std::size_t>(c)] = std::sqrt(std::max(S(src, src), 0.0));
    for (int k = 0; k < n; ++k) out.v(k, c) = V(k, src);
  }
  for (int c = 0; c < n; ++c) {
    Vec3 vc{0.0, 0.0, 0.0};
    for (int k = 0; k < n; ++k) vc[static_cast<std::size_t>(k)] = out.v(k, c);
    Vec3 uc = critex::apply(A, vc);
    const double s = norm(uc, n);
    if (s > 1e-150) {
      uc = normalized(uc, n);
    } else if (n == 3 && c == 2) {
      Vec3 u0{out.u(0, 0), out.u(1, 0), out.u(2, 0)};
      Vec3 u1{out.u(0, 1), out.u(1, 1), out.u(2, 1)};
      uc = normalized(cross(u0, u1), 3);
    } else if (n == 2 && c == 1) {
      uc = {-out.u(1, 0), out.u(0, 0), 0.0};
    }
    for (int k = 0; k < n; ++k) out.u(k, c) = uc[static_cast<std::size_t>(k)];
  }
  return out;
}

std::array<double, 3> singular_values(const Mat& A) { return svd(A).sigma; }

namespace {

// Real roots of x^3 + B x^2 + C x + D, polished by two Newton steps.
// Returns the number of real roots (1 or 3) in r.
int cubic_real_roots(double B, double C, double D, std::array<double, 3>& r) {
  const double p = C - B * B / 3.0;
  const double q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  int count;
  if (disc <= 0.0) {
    const double mp = std::max(-p, 0.0);
    const double rho = 2.0 * std::sqrt(mp / 3.0);
    double phi = 0.0;
    if (rho > 0.0) {
      const double arg = clamp(3.0 * q / (p * rho), -1.0, 1.0);
      phi = std::acos(arg);
    }
    for (int k = 0; k < 3; ++k)
      r[static_cast<std::size_t>(k)] = rho * std::cos((phi - 2.0 * M_PI * k) / 3.0) - B / 3.0;
    count = 3;
  } else {
    const double sq = std::sqrt(disc);
    const double u = std::cbrt(-q / 2.0 + sq);
    const double v = std::cbrt(-q / 2.0 - sq);
    r[0] = u + v - B / 3.0;
    count = 1;
  }
  for (int i = 0; i < count; ++i) {
    double x = r[static_cast<std::size_t>(i)];
    for (int it = 0; it < 2; ++it) {
      const double f = ((x + B) * x + C) * x + D;
      const double df = (3.0 * x + 2.0 * B) * x + C;
      if (df != 0.0) x -= f / df;
    }
    r[static_cast<std::size_t>(i)] = x;
  }
  return count;
}

Vec3 kernel_vector(const Mat& M, double lambda) {
  // Unit vector spanning ker(M - lambda I), assuming a simple eigenvalue.
  const int n = M.n;
  Mat B = M;
  for (int i = 0; i < n; ++i) B(i, i) -= lambda;
  if (n == 2) {
    const Vec3 c1{B(0, 1), -B(0, 0), 0.0};
    const Vec3 c2{B(1, 1), -B(1, 0), 0.0};
    return normalized(norm(c1, 2) >= norm(c2, 2) ? c1 : c2, 2);
  }
  const Vec3 r0{B(0, 0), B(0, 1), B(0, 2)};
  const Vec3 r1{B(1, 0), B(1, 1), B(1, 2)};
  const Vec3 r2{B(2, 0), B(2, 1), B(2, 2)};
  Vec3 best = cross(r0, r1);
  for (const Vec3& c : {cross(r0, r2), cross(r1, r2)})
    if (norm(c, 3) > norm(best, 3)) best = c;
  if (norm(best, 3) < 1e-150) {
    // Nearly defective: fall back to a few power iterations.
    Vec3 v{1.0, 1.0, 1.0};
    for (int it = 0; it < 200; ++it) v = normalized(critex::apply(M, v), 3);
    return v;
  }
  return normalized(best, 3);
}

}  // namespace

EigenData eigen_data(const Mat& A) {
  EigenData out;
  const double d = det(A);
  if (A.n == 2) {
    const double tr = A(0, 0) + A(1, 1);
    const double disc = tr * tr / 4.0 - d;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      const double l1 = tr / 2.0 + (tr >= 0.0 ? s : -s);
      const double l2 = (l1 != 0.0) ? d / l1 : tr - l1;
      const double hi = std::max(std::abs(l1), std::abs(l2));
      const double lo = std::min(std::abs(l1), std::abs(l2));
      out.moduli = {hi, lo, 0.0};
      const double top = (std::abs(l1) >= std::abs(l2)) ? l1 : l2;
      out.top_real = true;
      out.top = top;
      out.top_vec = kernel_vector(A, top);
    } else {
      const double m = std::sqrt(std::max(d, 0.0));
      out.moduli = {m, m, 0.0};
      out.top_real = false;
    }
    return out;
  }
  const double tr = A(0, 0) + A(1, 1) + A(2, 2);
  double e2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    (void)k;
    e2 += A(i, i) * A(j, j) - A(i, j) * A(j, i);
  }
  std::array<double, 3> roots{};
  const int nreal = cubic_real_roots(-tr, e2, -d, roots);
  if (nreal == 3) {
    std::array<double, 3> mod{std::abs(roots[0]), std::abs(roots[1]), std::abs(roots[2])};
    std::sort(mod.begin(), mod.end(), std::greater<double>());
    out.moduli = mod;
    double top = roots[0];
    for (double r : roots)
      if (std::abs(r) > std::abs(top)) top = r;
    out.top_real = true;
    out.top = top;
    out.top_vec = kernel_vector(A, top);
  } else {
    const double r = roots[0];
    const double pair_mod = std::sqrt(std::max(std::abs(d / (r == 0.0 ? 1e-300 : r)), 0.0));
    std::array<double, 3> mod{std::abs(r), pair_mod, pair_mod};
    std::sort(mod.begin(), mod.end(), std::greater<double>());
    out.moduli = mod;
    out.top_real = std::abs(r) > pair_mod;
    if (out.top_real) {
      out.top = r;
      out.top_vec = kernel_vector(A, r);
    }
  }
  return out;
}

namespace {

CartanVector sorted_trace_zero(int n, std::array<double, 3> logs) {
  std::sort(logs.begin(), logs.begin() + n, std::greater<double>());
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += logs[static_cast<std::size_t>(i)];
  mean /= n;
  CartanVector v;
  v.n = n;
  for (int i = 0; i < n; ++i) v[i] = logs[static_cast<std::size_t>(i)] - mean;
  return v;
}

}  // namespace

// Both projections avoid the smallest singular/eigenvalue of ill-conditioned
// matrices: the top value comes from A, the product of the top two from the
// exterior square, and the last from the determinant, all exact in log scale.
CartanVector cartan_projection(const Mat& A) {
  const double d = std::abs(det(A));
  if (!(d > 0.0)) throw std::domain_error("cartan_projection: singular matrix");
  const double l1 = std::log(singular_values(A)[0]);
  std::array<double, 3> logs{};
  if (A.n == 2) {
    logs = {l1, std::log(d) - l1, 0.0};
  } else {
    const double l12 = std::log(singular_values(exterior_square(A))[0]);
    logs = {l1, l12 - l1, std::log(d) - l12};
  }
  return sorted_trace_zero(A.n, logs);
}

CartanVector jordan_projection(const Mat& A) {
  const double d = std::abs(det(A));
  if (!(d > 0.0)) throw std::domain_error("jordan_projection: singular matrix");
  const double m1 = eigen_data(A).moduli[0];
  if (!(m1 > 0.0)) throw std::domain_error("jordan_projection: zero spectral radius");
  const double l1 = std::log(m1);
  std::array<double, 3> logs{};
  if (A.n == 2) {
    logs = {l1, std::log(d) - l1, 0.0};
  } else {
    const double l12 = std::log(eigen_data(exterior_square(A)).moduli[0]);
    logs = {l1, l12 - l1, std::log(d) - l12};
  }
  return sorted_trace_zero(A.n, logs);
}

double proj_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  return std::acos(clamp(std::abs(dot(p.v, q.v, p.n)), 0.0, 1.0));
}

double point_hyperplane_distance(const ProjectivePoint& p, const ProjectiveHyperplane& h) {
  return std::asin(clamp(std::abs(dot(p.v, h.normal, p.n)), 0.0, 1.0));
}

std::optional<ProximalData> proximal_data(const Mat& A, double gap_tol) {
  const auto e = eigen_data(A);
  if (!e.top_real) return std::nullopt;
  if (!(e.moduli[0] > 0.0) || !(e.moduli[0] >= (1.0 + gap_tol) * e.moduli[1])) return std::nullopt;
  ProximalData p;
  p.lambda1 = e.moduli[0];
  p.gap = e.moduli[0] / e.moduli[1];
  p.attracting.n = A.n;
  p.attracting.v = e.top_vec;
  const auto et = eigen_data(transpose(A));
  if (!et.top_real) return std::nullopt;
  p.repelling.n = A.n;
  p.repelling.normal = et.top_vec;

  // Operator norm of A on the invariant complement (coordinates in an
  // orthonormal basis of the hyperplane).
  const int n = A.n;
  const Vec3& nm = p.repelling.normal;
  std::array<Vec3, 2> basis{};
  int nb = 0;
  for (int axis = 0; axis < n && nb < n - 1; ++axis) {
    Vec3 w{0.0, 0.0, 0.0};
    w[static_cast<std::size_t>(axis)] = 1.0;
    double c = dot(w, nm, n);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= c * nm[static_cast<std::size_t>(i)];
    for (int b = 0; b < nb; ++b) {
      c = dot(w, basis[static_cast<std::size_t>(b)], n);
      for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] -= c * basis[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
    }
    if (norm(w, n) > 1e-8) basis[static_cast<std::size_t>(nb++)] = normalized(w, n);
  }
  if (n == 2) {
    p.restriction_norm = norm(critex::apply(A, basis[0]), 2);
  } else {
    Mat R = mat2(0, 0, 0, 0);
    for (int i = 0; i < 2; ++i) {
      const Vec3 img = critex::apply(A, basis[static_cast<std::size_t>(i)]);
      for (int j = 0; j < 2; ++j) R(j, i) = dot(img, basis[static_cast<std::size_t>(j)], 3);
    }
    p.restriction_norm = singular_values(R)[0];
  }
  return p;
}

SeparationInterval separation_interval(const ProximalData& p) {
  SeparationInterval iv;
  const double ratio = clamp(p.restriction_norm / p.lambda1, 0.0, 1.0);
  iv.lo = std::asin(std::sqrt(ratio));
  iv.hi = point_hyperplane_distance(p.attracting, p.repelling) / 2.0;
  return iv;
}

double separation_margin(const ProximalData& p) {
  const auto iv = separation_interval(p);
  return iv.nonempty() ? iv.hi : 0.0;
}

std::optional<double> separation_margin(const Mat& A, double gap_tol) {
  const auto p = proximal_data(A, gap_tol);
  if (!p) return std::nullopt;
  return separation_margin(*p);
}

std::optional<double> theta_loxodromic_margin_sl3(const Mat& A, double gap_tol) {
  const auto m1 = separation_margin(A, gap_tol);
  if (!m1) return std::nullopt;
  const auto m2 = separation_margin(dual_rep(A), gap_tol);
  if (!m2) return std::nullopt;
  return std::min(*m1, *m2);
}

Flag3 attracting_flag(const Mat& A) {
  const Svd s = svd(A);
  Flag3 f;
  f.point = {s.u(0, 0), s.u(1, 0), s.u(2, 0)};
  f.plane1 = f.point;
  f.plane2 = {s.u(0, 1), s.u(1, 1), s.u(2, 1)};
  return f;
}

CartanVector iwasawa_value_sl3(const Mat& A, const Flag3& flag) {
  if (A.n != 3) throw std::invalid_argument("iwasawa_value_sl3: n must be 3");
  if (std::abs(dot(flag.point, flag.plane1, 3)) < 1e-9 &&
      std::abs(dot(flag.point, flag.plane2, 3)) < 1e-9)
    throw std::invalid_argument("iwasawa_value_sl3: point not on the flag plane");
  const double d = det(A);
  if (d == 0.0) throw std::domain_error("iwasawa_value_sl3: singular matrix");
  const double log_norm_fix = std::log(std::abs(d)) / 3.0;
  const Vec3 p = normalized(flag.point, 3);
  // Orthonormalize the plane basis.
  Vec3 w1 = normalized(flag.plane1, 3);
  Vec3 w2 = flag.plane2;
  const double c = dot(w2, w1, 3);
  for (int i = 0; i < 3; ++i) w2[static_cast<std::size_t>(i)] -= c * w1[static_cast<std::size_t>(i)];
  w2 = normalized(w2, 3);
  const double omega1 = std::log(norm(critex::apply(A, p), 3)) - log_norm_fix;
  const double omega2 = std::log(norm(cross(critex::apply(A, w1), critex::apply(A, w2)), 3)) - 2.0 * log_norm_fix;
  CartanVector v;
  v.n = 3;
  v[0] = omega1;
  v[1] = omega2 - omega1;
  v[2] = -omega2;
  return v;
}

ScaledMat scaled(const Mat& A) {
  ScaledMat s;
  const double m = max_abs(A);
  if (m == 0.0) throw std::domain_error("scaled: zero matrix");
  s.m = (1.0 / m) * A;
  s.log_scale = std::log(m);
  return s;
}

ScaledMat scaled_mul(const ScaledMat& A, const Mat& B) {
  ScaledMat r = scaled(A.m * B);
  r.log_scale += A.log_scale;
  return r;
}

ScaledMat scaled_mul(const ScaledMat& A, const ScaledMat& B) {
  ScaledMat r = scaled(A.m * B.m);
  r.log_scale += A.log_scale + B.log_scale;
  return r;
}

ScaledMat scaled_product(const std::vector<Mat>& ms, int n) {
  ScaledMat r = scaled(identity(ms.empty() ? n : ms.front().n));
  for (const Mat& m : ms) r = scaled_mul(r, m);
  return r;
}

CartanVector cartan_projection(const ScaledMat& A) {
  CartanVector v = cartan_projection(A.m);
  return v;  // the uniform scale cancels in the trace-zero normalization
}

WordState WordState::start(int n) {
  WordState w;
  w.n = n;
  w.std_rep = scaled(identity(n));
  if (n == 3) w.ext_rep = scaled(identity(3));
  w.log_det = 0.0;
  return w;
}

WordState WordState::extend(const Mat& g) const {
  WordState w = *this;
  w.std_rep = scaled_mul(std_rep, g);
  if (n == 3) w.ext_rep = scaled_mul(ext_rep, exterior_square(g));
  const double dg = det(g);
  if (dg == 0.0) throw std::domain_error("WordState::extend: singular generator");
  w.log_det += std::log(std::abs(dg));
  return w;
}

CartanVector WordState::kappa() const {
  const double ls1 = std_rep.log_scale + std::log(singular_values(std_rep.m)[0]);
  std::array<double, 3> logs{};
  if (n == 2) {
    logs = {ls1, log_det - ls1, 0.0};
  } else {
    const double ls12 = ext_rep.log_scale + std::log(singular_values(ext_rep.m)[0]);
    logs = {ls1, ls12 - ls1, log_det - ls12};
  }
  return sorted_trace_zero(n, logs);
}

CartanVector WordState::lambda() const {
  const double ll1 = std_rep.log_scale + std::log(eigen_data(std_rep.m).moduli[0]);
  std::array<double, 3> logs{};
  if (n == 2) {
    logs = {ll1, log_det - ll1, 0.0};
  } else {
    const double ll12 = ext_rep.log_scale + std::log(eigen_data(ext_rep.m).moduli[0]);
    logs = {ll1, ll12 - ll1, log_det - ll12};
  }
  return sorted_trace_zero(n, logs);
}

}  // namespace critex
