#pragma once

#include <array>
#include <vector>

#include "critex/prox.hpp"
#include "critex/rep.hpp"
#include "critex/weyl.hpp"

// Fock-Goncharov parametrization of convex projective structures on the
// pair of pants: elementary T/E matrices, holonomy, admissibility, boundary
// eigenvalue closed forms, shear families, and the transfer-matrix exponent.

namespace critex {

struct FGParams {
  double x1 = 1.0, x2 = 1.0;        // triple ratios
  std::array<double, 3> z{1, 1, 1};  // cross ratios, 1-based in formulas
  std::array<double, 3> w{1, 1, 1};
};

Mat t_matrix(double x);
Mat e_matrix(double z, double w);
// Upper-triangular closed form of e_matrix(z, w) * t_matrix(x).
Mat et_closed_form(double z, double w, double x);

struct PantsHolonomy {
  Representation rep;  // generators a, b, c, a', b', c' with abc = id
  FGParams params;
};

PantsHolonomy holonomy(const FGParams& p);

struct Admissibility {
  bool pass = false;
  double min_slack = 0.0;
  std::array<double, 6> slacks{};  // zw slacks i=1..3, then x slacks i=1..3
};

Admissibility is_admissible(const FGParams& p);

struct Block {
  double z = 1.0, w = 1.0, x = 1.0;
};

struct BoundaryJordan {
  double alpha1 = 0.0;  // sum of log w
  double alpha2 = 0.0;  // sum of log z minus sum of log x
  CartanVector numeric;  // Jordan projection of the block product
  bool hypothesis = false;
};

BoundaryJordan boundary_jordan_closed_form(const std::vector<Block>& blocks);

struct VWVectors {
  std::array<CartanVector, 3> v, w;
};

VWVectors vw_vectors(const FGParams& p);

// Unique s with Perron root of the weighted 6x6 transfer matrix equal to 1.
double sl3_transfer_root(const FGParams& p, const Functional& phi);
// Left-hand side minus one of the scalar boundary equation at s.
double sl3_scalar_residual(double s, const FGParams& p, const Functional& phi);

// Z, W scaled by e^t, triple ratios fixed.
FGParams shear_family(double t, const FGParams& base);

}  // namespace critex
