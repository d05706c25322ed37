#include "critex/pants.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "critex/pressure.hpp"

namespace critex {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

void require_positive(const FGParams& p) {
  require_positive(p.x1, "X1");
  require_positive(p.x2, "X2");
  for (double z : p.z) require_positive(z, "Z");
  for (double w : p.w) require_positive(w, "W");
}

// CartanVector with the given fundamental-weight coordinates (d1, d2).
CartanVector from_weight_coords(double d1, double d2) {
  return cartan_vector((2.0 * d1 + d2) / 3.0, (-d1 + d2) / 3.0, (-d1 - 2.0 * d2) / 3.0);
}

}  // namespace

Mat t_matrix(double x) {
  require_positive(x, "X");
  return mat3(0, 0, 1, 0, -1, -1, x, 1 + x, 1);
}

Mat e_matrix(double z, double w) {
  require_positive(z, "Z");
  require_positive(w, "W");
  return mat3(0, 0, 1 / z, 0, -1, 0, w, 0, 0);
}

Mat et_closed_form(double z, double w, double x) {
  return mat3(x / z, (1 + x) / z, 1 / z, 0, 1, 1, 0, 0, w);
}

PantsHolonomy holonomy(const FGParams& p) {
  require_positive(p);
  const Mat t1 = t_matrix(p.x1), t2 = t_matrix(p.x2);
  const auto& z = p.z;
  const auto& w = p.w;
  // E's first printed argument occupies the Z slot of e_matrix; this is the
  // reading under which the product of the three inverse generators is
  // scalar and the boundary eigenvalue closed forms hold (cross-checked in
  // tests to 1e-8 over random admissible parameters).
  const Mat a_inv = e_matrix(w[2], z[2]) * t2 * e_matrix(z[1], w[1]) * t1;
  const Mat b_core = e_matrix(w[0], z[0]) * t2 * e_matrix(z[2], w[2]) * t1;
  const Mat c_core = e_matrix(w[1], z[1]) * t2 * e_matrix(z[0], w[0]) * t1;
  const Mat b_inv = t1 * b_core * inverse(t1);
  const Mat c_inv = inverse(t1) * c_core * t1;
  PantsHolonomy h;
  h.params = p;
  h.rep = make_representation(3, {{"a'", a_inv}, {"b'", b_inv}, {"c'", c_inv}});
  return h;
}

Admissibility is_admissible(const FGParams& p) {
  require_positive(p);
  Admissibility a;
  const auto lz = [&](int i) { return std::log(p.z[static_cast<std::size_t>(i % 3)]); };
  const auto lw = [&](int i) { return std::log(p.w[static_cast<std::size_t>(i % 3)]); };
  const double lx = std::log(p.x2) - std::log(p.x1);
  for (int i = 0; i < 3; ++i) {
    a.slacks[static_cast<std::size_t>(i)] = lz(i) + lw(i + 2);
    a.slacks[static_cast<std::size_t>(i + 3)] = lw(i) + lz(i + 2) + lx;
  }
  a.min_slack = a.slacks[0];
  for (double s : a.slacks) a.min_slack = std::min(a.min_slack, s);
  a.pass = a.min_slack > 0.0;
  return a;
}

BoundaryJordan boundary_jordan_closed_form(const std::vector<Block>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("boundary_jordan_closed_form: empty block list");
  BoundaryJordan r;
  Mat prod = identity(3);
  double prod_zinv_x = 1.0, prod_w = 1.0;
  for (const Block& b : blocks) {
    require_positive(b.z, "Z");
    require_positive(b.w, "W");
    require_positive(b.x, "X");
    prod = prod * (e_matrix(b.z, b.w) * t_matrix(b.x));
    r.alpha1 += std::log(b.w);
    r.alpha2 += std::log(b.z) - std::log(b.x);
    prod_zinv_x *= b.x / b.z;
    prod_w *= b.w;
  }
  r.numeric = jordan_projection(prod);
  r.hypothesis = prod_zinv_x < 1.0 && prod_w > 1.0;
  return r;
}

VWVectors vw_vectors(const FGParams& p) {
  require_positive(p);
  VWVectors r;
  for (int i = 0; i < 3; ++i) {
    const std::size_t si = static_cast<std::size_t>(i);
    const std::size_t sp = static_cast<std::size_t>((i + 2) % 3);  // index i-1 mod 3
    const double d1 = std::log(p.w[si] * p.z[sp]);
    const double d2 = std::log(p.z[si] * p.w[sp]);
    r.v[si] = from_weight_coords(d1, d2);
    r.w[si] = from_weight_coords(d2, d1);
  }
  return r;
}

double sl3_transfer_root(const FGParams& p, const Functional& phi) {
  const VWVectors vw = vw_vectors(p);
  std::array<double, 6> row_weights{};
  for (int i = 0; i < 3; ++i) {
    row_weights[static_cast<std::size_t>(i)] = phi(vw.w[static_cast<std::size_t>(i)]);
    row_weights[static_cast<std::size_t>(i + 3)] = phi(vw.v[static_cast<std::size_t>(i)]);
  }
  for (double wt : row_weights)
    if (!(wt > 0.0)) throw std::invalid_argument("sl3_transfer_root: non-positive weight");

  const AdjacencyMatrix adj = vertex_adjacency(builtin_f2_abc());
  const auto log_perron = [&](double s) {
    std::vector<std::vector<double>> m = adj.a;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        m[i][j] *= std::exp(-s * row_weights[i]);
    return std::log(perron_root(m).root);
  };
  if (log_perron(0.0) <= 0.0) return 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (log_perron(hi) > 0.0) {
    hi *= 2.0;
    if (++doublings > 60) throw std::runtime_error("sl3_transfer_root: bracket failure");
  }
  double lo = 0.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (log_perron(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double sl3_scalar_residual(double s, const FGParams& p, const Functional& phi) {
  const VWVectors vw = vw_vectors(p);
  double prod_v = 1.0, prod_w = 1.0, sum_vw = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    prod_v *= 1.0 - std::exp(-s * phi(vw.v[i]));
    prod_w *= 1.0 - std::exp(-s * phi(vw.w[i]));
    sum_vw += std::exp(-s * phi(vw.v[i] + vw.w[i]));
  }
  return prod_v + prod_w + sum_vw - 1.0;
}

FGParams shear_family(double t, const FGParams& base) {
  if (t < 0.0) throw std::invalid_argument("shear_family: t must be >= 0");
  FGParams p = base;
  for (auto& z : p.z) z *= std::exp(t);
  for (auto& w : p.w) w *= std::exp(t);
  return p;
}

}  // namespace critex
