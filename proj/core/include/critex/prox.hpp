#pragma once

#include <array>
#include <optional>
#include <vector>

#include "critex/weyl.hpp"

// Numerics for 2x2 / 3x3 real matrices: singular values via Jacobi on M^T M,
// eigenvalues via the characteristic cubic with Newton polish, projective
// metrics, proximality data, separation margins, the exterior-square
// representation, Iwasawa values, and overflow-safe scaled products.

namespace critex {

struct Mat {
  int n = 3;
  std::array<std::array<double, 3>, 3> m{};

  double operator()(int i, int j) const { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  double& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

using Vec3 = std::array<double, 3>;

Mat mat2(double a, double b, double c, double d);
Mat mat3(double a11, double a12, double a13,
         double a21, double a22, double a23,
         double a31, double a32, double a33);
Mat identity(int n);
Mat diag(const std::vector<double>& d);

Mat operator*(const Mat& A, const Mat& B);
Mat operator*(double c, const Mat& A);
Mat transpose(const Mat& A);
double det(const Mat& A);
Mat inverse(const Mat& A);
double max_abs(const Mat& A);
Vec3 apply(const Mat& A, const Vec3& v);

double norm(const Vec3& v, int n);
double dot(const Vec3& x, const Vec3& y, int n);
Vec3 normalized(const Vec3& v, int n);
Vec3 cross(const Vec3& x, const Vec3& y);

// Exterior square of a 3x3 matrix in the basis e1^e2, e1^e3, e2^e3.
Mat exterior_square(const Mat& A);

// (g^t)^-1, intertwining the standard and dual representations.
Mat dual_rep(const Mat& A);

// Non-increasing singular values; product equals |det| up to rounding.
std::array<double, 3> singular_values(const Mat& A);

struct Svd {
  std::array<double, 3> sigma;  // non-increasing
  Mat u;                        // columns = left singular vectors
  Mat v;                        // columns = right singular vectors
};
Svd svd(const Mat& A);

// Eigenvalue moduli sorted non-increasing; top_real is set when the
// maximal-modulus eigenvalue is real and simple, with its value and a
// unit eigenvector.
struct EigenData {
  std::array<double, 3> moduli;
  bool top_real = false;
  double top = 0.0;
  Vec3 top_vec{0.0, 0.0, 0.0};
};
EigenData eigen_data(const Mat& A);

// Sorted log singular values of M / |det M|^{1/n}.
CartanVector cartan_projection(const Mat& A);
// Sorted log eigenvalue moduli of M / |det M|^{1/n}.
CartanVector jordan_projection(const Mat& A);

struct ProjectivePoint {
  int n = 3;
  Vec3 v{1.0, 0.0, 0.0};  // unit, up to sign
};

struct ProjectiveHyperplane {
  int n = 3;
  Vec3 normal{1.0, 0.0, 0.0};  // unit, up to sign
};

double proj_distance(const ProjectivePoint& p, const ProjectivePoint& q);
double point_hyperplane_distance(const ProjectivePoint& p, const ProjectiveHyperplane& h);

struct ProximalData {
  double lambda1 = 0.0;          // top eigenvalue modulus
  ProjectivePoint attracting;    // g_plus
  ProjectiveHyperplane repelling;  // g_minus
  double restriction_norm = 0.0;   // operator norm of M on g_minus
  double gap = 0.0;                // lambda1 / lambda2 moduli
};

inline constexpr double kDefaultGapTol = 1e-6;

// Empty when the top eigenvalue is complex or the modulus gap is below tol.
std::optional<ProximalData> proximal_data(const Mat& A, double gap_tol = kDefaultGapTol);

// Certified interval of the separation criterion: eps works when
// sin^2(eps) >= restriction_norm / lambda1 and 2 eps < d(g_plus, g_minus).
struct SeparationInterval {
  double lo = 0.0;  // arcsin(sqrt(restriction_norm / lambda1))
  double hi = 0.0;  // d(g_plus, g_minus) / 2
  bool nonempty() const { return lo < hi; }
};
SeparationInterval separation_interval(const ProximalData& p);

// Sup of certified eps (the interval's upper endpoint), or 0.
double separation_margin(const ProximalData& p);
std::optional<double> separation_margin(const Mat& A, double gap_tol = kDefaultGapTol);

// Min of separation_margin over the two fundamental representations
// {M, dual_rep(M)}; empty when either fails proximality.
std::optional<double> theta_loxodromic_margin_sl3(const Mat& A, double gap_tol = kDefaultGapTol);

// Iwasawa value sigma(M, xi) for a full flag xi = (point p, 2-plane
// span(w1,w2)) with p on the plane: omega1 = log|M v_p|, omega2 =
// log|Lambda^2 M (w1 ^ w2)|, on M normalized to det +-1.
struct Flag3 {
  Vec3 point;
  Vec3 plane1, plane2;  // orthonormal basis of the 2-plane containing point
};
Flag3 attracting_flag(const Mat& A);  // from the left singular basis
CartanVector iwasawa_value_sl3(const Mat& A, const Flag3& flag);

// Product with max-abs renormalization and accumulated log factor.
struct ScaledMat {
  Mat m;
  double log_scale = 0.0;
};
ScaledMat scaled(const Mat& A);
ScaledMat scaled_mul(const ScaledMat& A, const Mat& B);
ScaledMat scaled_mul(const ScaledMat& A, const ScaledMat& B);
ScaledMat scaled_product(const std::vector<Mat>& ms, int n = 3);
CartanVector cartan_projection(const ScaledMat& A);

// Word accumulator carrying both fundamental representations, so that all
// log singular / eigenvalue data of arbitrarily long products stays exact
// in log scale: log sigma1 from the standard factor, log(sigma1 sigma2)
// from the exterior square, the rest from the determinant.
struct WordState {
  int n = 3;
  ScaledMat std_rep;   // product in the standard representation
  ScaledMat ext_rep;   // product in Lambda^2 (n = 3 only)
  double log_det = 0.0;

  static WordState start(int n);
  WordState extend(const Mat& g) const;  // right multiplication
  CartanVector kappa() const;            // Cartan projection of the word
  CartanVector lambda() const;           // Jordan projection of the word
};

}  // namespace critex
