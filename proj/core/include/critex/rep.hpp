#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "critex/automaton.hpp"
#include "critex/prox.hpp"
#include "critex/weyl.hpp"

// Representations of free groups into SL(2)/SL(3): word evaluation, length
// functions, generator potentials, separation certification, exponent
// estimators and bounds, limit-cone comparison, and the asymmetric-metric
// estimator.

namespace critex {

struct Representation {
  int n = 3;
  std::map<std::string, Mat> generators;  // includes derived inverse labels

  const Mat& matrix(const std::string& symbol) const;
};

// Derives missing inverse matrices and checks rho(s) rho(s') = id to 1e-9.
Representation make_representation(int n, const std::map<std::string, Mat>& gens);

Mat evaluate(const Representation& rho, const GroupWord& w);
// Overflow-safe evaluation carrying both fundamental representations.
WordState evaluate_state(const Representation& rho, const GroupWord& w);

// phi applied to the Jordan projection of the evaluated word.
double length_phi(const Representation& rho, const Functional& phi, const GroupWord& w);
// phi applied to the Cartan projection of the evaluated word.
double length_phi_kappa(const Representation& rho, const Functional& phi, const GroupWord& w);

enum class WeightKind { kappa, lambda };

// Per-label potential phi(kappa or lambda of rho(label)) over the recurrent
// edges of G. Throws std::invalid_argument when some weight is not positive.
std::map<std::string, double> generator_weights(const Representation& rho, const Functional& phi,
                                                const LabeledGraph& g, WeightKind kind);

// (h_kappa, h_lambda): roots of the pressure equations for the kappa and
// lambda generator potentials.
std::pair<double, double> approximating_exponents(const Representation& rho, const Functional& phi,
                                                  const LabeledGraph& g);

struct GeneratorMargin {
  std::string symbol;
  bool proximal = false;
  double margin = 0.0;  // min over the fundamental representations
};

struct TransitionDistance {
  std::string from, to;          // admissible transition: label 'from' then 'to'
  double dist_std = 0.0;         // d(attractor(rho(to)), repelling hyperplane(rho(from)))
  double dist_dual = 0.0;        // same in the dual representation (n = 3)
};

struct SeparationCertificate {
  double epsilon = 0.0;
  bool pass = false;
  std::string failure;  // empty on pass
  std::vector<GeneratorMargin> margins;
  std::vector<TransitionDistance> transitions;
  double min_margin = 0.0;
  double min_distance = 0.0;
};

// Pass iff every recurrent generator has separation margin >= eps in all
// fundamental representations, and every admissible transition g -> h keeps
// the attractor of rho(h) at distance >= 2 eps from the repelling hyperplane
// of rho(g), again in all fundamental representations.
SeparationCertificate certify_separation(const Representation& rho, const LabeledGraph& g,
                                         double eps);

// Sup of certifiable eps: min(margins, transition distances / 2), or 0.
double separation_sup(const Representation& rho, const LabeledGraph& g);

struct ExponentReport {
  double h_kappa = 0.0;
  double h_lambda = 0.0;
  double lower = 0.0;          // = h_kappa
  double upper = 0.0;          // h_kappa / (1 - 2 phi(R_eps)/m_kappa)
  double upper_lambda = 0.0;   // h_lambda / (1 - phi(R_eps)/m_lambda)
  double m_kappa = 0.0;        // min generator kappa-weight
  double m_lambda = 0.0;
  double phi_r_eps = 0.0;
  bool certified = false;
  bool valid_upper = false;         // m_kappa > 2 phi(R_eps)
  bool valid_upper_lambda = false;  // m_lambda > phi(R_eps)
};

ExponentReport exponent_bounds(const Representation& rho, const Functional& phi,
                               const LabeledGraph& g, double eps);

// Unique s with (1/n) log sum over based closed paths of length n of
// e^{-s phi(lambda(rho(ev)))} = 0.
double periodic_exponent(const Representation& rho, const Functional& phi, const LabeledGraph& g,
                         int n);

// Root of the pressure equation for the (k+1)-cylinder potential
// B_k(x0..xk) = phi(sigma(rho(x0), flag of rho(x1)...rho(xk))).
double busemann_depth_k_exponent(const Representation& rho, const Functional& phi,
                                 const LabeledGraph& g, int k, int node_budget = 200000);

// Orbit-counting estimate: enumerate path evaluations from start with
// phi(kappa) <= t_max, least-squares slope of log N(T) over 25 thresholds
// in the top half of the range.
double brute_force_exponent(const Representation& rho, const Functional& phi,
                            const LabeledGraph& g, double t_max, long long budget = 5000000);

// Max over cycles of length <= n of the angle from the normalized Jordan
// projection of the cycle to the cone spanned by the generator Cartan
// projections.
double limit_cone_deviation(const Representation& rho, const LabeledGraph& g, int n);

struct ThurstonEstimate {
  double value = 0.0;  // log max ratio; lower estimate of the sup
  GroupWord best_cycle;
  double h1 = 0.0, h2 = 0.0;  // depth-k exponent estimates used
  int depth_k = 2;
};

ThurstonEstimate thurston_estimate(const Representation& rho1, const Representation& rho2,
                                   const Functional& phi, const LabeledGraph& g, int max_len,
                                   int depth_k = 2);

}  // namespace critex
