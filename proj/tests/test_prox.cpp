#include "doctest.h"

#include <cmath>
#include <random>

#include "critex/prox.hpp"

using namespace critex;

namespace {

Mat random_mat3(std::mt19937& rng, double span = 2.0) {
  std::uniform_real_distribution<double> u(-span, span);
  Mat m = identity(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("matrix basics") {
  const Mat a = mat3(1, 2, 3, 4, 5, 6, 7, 8, 10);
  CHECK(det(a) == doctest::Approx(-3.0));
  const Mat ai = inverse(a);
  const Mat id = a * ai;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
  CHECK(transpose(a)(0, 2) == doctest::Approx(7.0));
  CHECK(max_abs(a) == doctest::Approx(10.0));

  const Mat b = mat2(2, 1, 1, 1);
  CHECK(det(b) == doctest::Approx(1.0));
  const Mat bi = inverse(b);
  CHECK(bi(0, 0) == doctest::Approx(1.0));
  CHECK(bi(0, 1) == doctest::Approx(-1.0));
}

TEST_CASE("singular values of diagonal and rotated matrices") {
  const auto s = singular_values(diag({3.0, -2.0, 0.5}));
  CHECK(s[0] == doctest::Approx(3.0));
  CHECK(s[1] == doctest::Approx(2.0));
  CHECK(s[2] == doctest::Approx(0.5));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat m = random_mat3(rng);
    const double d = det(m);
    if (std::abs(d) < 1e-3) continue;
    const auto sv = singular_values(m);
    CHECK(sv[0] >= sv[1]);
    CHECK(sv[1] >= sv[2]);
    CHECK(sv[0] * sv[1] * sv[2] == doctest::Approx(std::abs(d)).epsilon(1e-8));
  }
}

TEST_CASE("svd reconstructs the matrix") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat m = random_mat3(rng);
    const Svd s = svd(m);
    // M = U diag(sigma) V^t
    const Mat rec = s.u * diag({s.sigma[0], s.sigma[1], s.sigma[2]}) * transpose(s.v);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(rec(i, j) == doctest::Approx(m(i, j)).epsilon(1e-9));
  }
}

TEST_CASE("eigen data") {
  const EigenData d = eigen_data(diag({5.0, 2.0, 0.1}));
  CHECK(d.top_real);
  CHECK(d.top == doctest::Approx(5.0));
  CHECK(d.moduli[0] == doctest::Approx(5.0));
  CHECK(d.moduli[2] == doctest::Approx(0.1));
  CHECK(std::abs(d.top_vec[0]) == doctest::Approx(1.0));

  // rotation by 90 degrees in a 2-plane: complex pair of modulus 1
  const EigenData r = eigen_data(mat3(0, -1, 0, 1, 0, 0, 0, 0, 2));
  CHECK(r.moduli[0] == doctest::Approx(2.0));
  CHECK(r.moduli[1] == doctest::Approx(1.0));
  CHECK(r.moduli[2] == doctest::Approx(1.0));

  const EigenData e2 = eigen_data(mat2(2, 1, 0, 0.5));
  CHECK(e2.top_real);
  CHECK(e2.top == doctest::Approx(2.0));
}

TEST_CASE("eigenvalue moduli product equals determinant") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat m = random_mat3(rng);
    const EigenData d = eigen_data(m);
    CHECK(d.moduli[0] * d.moduli[1] * d.moduli[2] ==
          doctest::Approx(std::abs(det(m))).epsilon(1e-7));
  }
}

TEST_CASE("exterior square") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = random_mat3(rng);
    const Mat b = random_mat3(rng);
    const Mat lhs = exterior_square(a * b);
    const Mat rhs = exterior_square(a) * exterior_square(b);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(lhs(i, j) == doctest::Approx(rhs(i, j)).epsilon(1e-9));
    CHECK(det(exterior_square(a)) == doctest::Approx(det(a) * det(a)).epsilon(1e-8));
  }
}

TEST_CASE("cartan and jordan projections of diagonal matrices") {
  const CartanVector k = cartan_projection(diag({std::exp(2.0), 1.0, std::exp(-2.0)}));
  CHECK(k[0] == doctest::Approx(2.0));
  CHECK(k[1] == doctest::Approx(0.0));
  CHECK(k[2] == doctest::Approx(-2.0));
  const CartanVector l = jordan_projection(diag({std::exp(2.0), 1.0, std::exp(-2.0)}));
  for (int i = 0; i < 3; ++i) CHECK(l[i] == doctest::Approx(k[i]));

  // determinant normalization: scaling the matrix changes nothing
  const CartanVector ks = cartan_projection(7.5 * diag({std::exp(2.0), 1.0, std::exp(-2.0)}));
  for (int i = 0; i < 3; ++i) CHECK(ks[i] == doctest::Approx(k[i]));
}

TEST_CASE("projections survive extreme conditioning") {
  // kappa of diag(e^m, 1, e^-m) is exact in log scale far beyond the
  // breakdown of a naive smallest singular value
  const double m = 40.0;
  const CartanVector k = cartan_projection(diag({std::exp(m), 1.0, std::exp(-m)}));
  CHECK(k[0] == doctest::Approx(m).epsilon(1e-12));
  CHECK(k[2] == doctest::Approx(-m).epsilon(1e-12));
}

TEST_CASE("kappa of the inverse is the opposition involution") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_mat3(rng);
    if (std::abs(det(m)) < 1e-3) continue;
    const CartanVector k = cartan_projection(m);
    const CartanVector ki = cartan_projection(inverse(m));
    const CartanVector expect = opposition_involution(k);
    for (int i = 0; i < 3; ++i) CHECK(ki[i] == doctest::Approx(expect[i]).epsilon(1e-7));
  }
}

TEST_CASE("proximal data of a diagonal matrix") {
  const auto p = proximal_data(diag({10.0, 1.0, 0.1}));
  REQUIRE(p.has_value());
  CHECK(p->lambda1 == doctest::Approx(10.0));
  CHECK(std::abs(p->attracting.v[0]) == doctest::Approx(1.0));
  CHECK(std::abs(p->repelling.normal[0]) == doctest::Approx(1.0));
  CHECK(p->restriction_norm == doctest::Approx(1.0));
  CHECK(p->gap == doctest::Approx(10.0));

  const SeparationInterval si = separation_interval(*p);
  CHECK(si.lo == doctest::Approx(std::asin(std::sqrt(0.1))));
  CHECK(si.lo == doctest::Approx(0.3217505543966422));
  CHECK(si.hi == doctest::Approx(std::asin(1.0) / 2.0));  // d = pi/2, hi = pi/4
  CHECK(si.nonempty());
  CHECK(separation_margin(*p) == doctest::Approx(si.hi));
}

TEST_CASE("proximality failures") {
  CHECK_FALSE(proximal_data(identity(3)).has_value());
  // complex leading pair
  CHECK_FALSE(proximal_data(mat3(0, -1, 0, 1, 0, 0, 0, 0, 0.5)).has_value());
  // margin helper propagates the failure
  CHECK_FALSE(separation_margin(identity(3)).has_value());
}

TEST_CASE("projective distances") {
  ProjectivePoint p;
  p.n = 3;
  p.v = {1.0, 0.0, 0.0};
  ProjectivePoint q;
  q.n = 3;
  q.v = {0.0, 1.0, 0.0};
  CHECK(proj_distance(p, q) == doctest::Approx(std::asin(1.0)));
  // antipodal representatives are the same projective point
  ProjectivePoint pm = p;
  pm.v = {-1.0, 0.0, 0.0};
  CHECK(proj_distance(p, pm) == doctest::Approx(0.0));

  ProjectiveHyperplane h;
  h.n = 3;
  h.normal = {1.0, 0.0, 0.0};
  CHECK(point_hyperplane_distance(p, h) == doctest::Approx(std::asin(1.0)));
  CHECK(point_hyperplane_distance(q, h) == doctest::Approx(0.0));
}

TEST_CASE("word state matches direct products on short words") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Mat> ms;
    Mat prod = identity(3);
    WordState st = WordState::start(3);
    for (int i = 0; i < 6; ++i) {
      Mat m = random_mat3(rng);
      if (std::abs(det(m)) < 1e-2) m = m * diag({2.0, 2.0, 2.0});
      ms.push_back(m);
      prod = prod * m;
      st = st.extend(m);
    }
    if (std::abs(det(prod)) < 1e-6) continue;
    const CartanVector k1 = cartan_projection(prod);
    const CartanVector k2 = st.kappa();
    for (int i = 0; i < 3; ++i) CHECK(k2[i] == doctest::Approx(k1[i]).epsilon(1e-7));
    const CartanVector l1 = jordan_projection(prod);
    const CartanVector l2 = st.lambda();
    for (int i = 0; i < 3; ++i) CHECK(l2[i] == doctest::Approx(l1[i]).epsilon(1e-7));
  }
}

TEST_CASE("word state is exact on long diagonal words") {
  const Mat g = diag({std::exp(1.5), 1.0, std::exp(-1.5)});
  WordState st = WordState::start(3);
  for (int i = 0; i < 200; ++i) st = st.extend(g);
  CHECK(st.kappa()[0] == doctest::Approx(300.0).epsilon(1e-12));
  CHECK(st.lambda()[0] == doctest::Approx(300.0).epsilon(1e-12));
}

TEST_CASE("iwasawa value at the standard flag of a diagonal matrix") {
  const Mat a = diag({std::exp(2.0), 1.0, std::exp(-2.0)});
  Flag3 flag;
  flag.point = {1.0, 0.0, 0.0};
  flag.plane1 = {1.0, 0.0, 0.0};
  flag.plane2 = {0.0, 1.0, 0.0};
  const CartanVector s = iwasawa_value_sl3(a, flag);
  CHECK(s[0] == doctest::Approx(2.0));
  CHECK(s[1] == doctest::Approx(0.0));
  CHECK(s[2] == doctest::Approx(-2.0));
}

TEST_CASE("attracting flag of a diagonal matrix") {
  const Flag3 f = attracting_flag(diag({5.0, 2.0, 1.0}));
  CHECK(std::abs(f.point[0]) == doctest::Approx(1.0));
  // plane spanned by e1, e2
  CHECK(std::abs(f.plane1[2]) == doctest::Approx(0.0));
  CHECK(std::abs(f.plane2[2]) == doctest::Approx(0.0));
}
