#include "critex/rep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "critex/pressure.hpp"

namespace critex {

namespace {

bool near_identity(const Mat& m, double tol) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (std::abs(m(i, j) - (i == j ? 1.0 : 0.0)) > tol) return false;
  return true;
}

std::vector<std::string> recurrent_labels(const LabeledGraph& g) {
  const LabeledGraph r = recurrent_subgraph(g);
  std::set<std::string> labels;
  for (const Edge& e : r.edges) labels.insert(e.label);
  return {labels.begin(), labels.end()};
}

std::vector<Mat> fundamental_reps(const Representation& rho, const std::string& symbol) {
  const Mat& m = rho.matrix(symbol);
  if (rho.n == 2) return {m};
  return {m, dual_rep(m)};
}

double bisect_decreasing(const std::function<double(double)>& f, double tol) {
  if (f(0.0) <= 0.0) return 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (f(hi) > 0.0) {
    hi *= 2.0;
    if (++doublings > 60) throw std::runtime_error("exponent bisection: bracket failure");
  }
  double lo = 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const Mat& Representation::matrix(const std::string& symbol) const {
  const auto it = generators.find(symbol);
  if (it == generators.end())
    throw std::invalid_argument("representation: unknown symbol '" + symbol + "'");
  return it->second;
}

Representation make_representation(int n, const std::map<std::string, Mat>& gens) {
  if (n != 2 && n != 3) throw std::invalid_argument("make_representation: n must be 2 or 3");
  Representation rho;
  rho.n = n;
  for (const auto& [s, m] : gens) {
    if (m.n != n) throw std::invalid_argument("make_representation: dimension mismatch at '" + s + "'");
    rho.generators[s] = m;
  }
  for (const auto& [s, m] : gens) {
    const std::string inv = inverse_label(s);
    if (rho.generators.count(inv)) {
      const double scale = std::max(1.0, max_abs(m) * max_abs(rho.generators[inv]));
      if (!near_identity(m * rho.generators[inv], 1e-9 * scale))
        throw std::invalid_argument("make_representation: '" + s + "' and '" + inv +
                                    "' are not inverse");
    } else {
      rho.generators[inv] = inverse(m);
    }
  }
  return rho;
}

Mat evaluate(const Representation& rho, const GroupWord& w) {
  Mat m = identity(rho.n);
  for (const std::string& s : w.symbols) m = m * rho.matrix(s);
  return m;
}

WordState evaluate_state(const Representation& rho, const GroupWord& w) {
  WordState st = WordState::start(rho.n);
  for (const std::string& s : w.symbols) st = st.extend(rho.matrix(s));
  return st;
}

double length_phi(const Representation& rho, const Functional& phi, const GroupWord& w) {
  return phi(evaluate_state(rho, w).lambda());
}

double length_phi_kappa(const Representation& rho, const Functional& phi, const GroupWord& w) {
  return phi(evaluate_state(rho, w).kappa());
}

std::map<std::string, double> generator_weights(const Representation& rho, const Functional& phi,
                                                const LabeledGraph& g, WeightKind kind) {
  std::map<std::string, double> w;
  for (const std::string& s : recurrent_labels(g)) {
    const Mat& m = rho.matrix(s);
    const CartanVector v = (kind == WeightKind::kappa) ? cartan_projection(m) : jordan_projection(m);
    const double value = phi(v);
    if (!(value > 0.0))
      throw std::invalid_argument("generator_weights: non-positive weight at '" + s + "'");
    w[s] = value;
  }
  return w;
}

std::pair<double, double> approximating_exponents(const Representation& rho, const Functional& phi,
                                                  const LabeledGraph& g) {
  const auto wk = generator_weights(rho, phi, g, WeightKind::kappa);
  const auto wl = generator_weights(rho, phi, g, WeightKind::lambda);
  const double hk = solve_exponent(g, [&](const Edge& e) { return wk.at(e.label); });
  const double hl = solve_exponent(g, [&](const Edge& e) { return wl.at(e.label); });
  return {hk, hl};
}

SeparationCertificate certify_separation(const Representation& rho, const LabeledGraph& g,
                                         double eps) {
  SeparationCertificate cert;
  cert.epsilon = eps;
  const LabeledGraph r = recurrent_subgraph(g);
  const auto labels = recurrent_labels(g);

  std::map<std::string, std::vector<ProximalData>> prox;
  for (const std::string& s : labels) {
    GeneratorMargin gm;
    gm.symbol = s;
    double margin = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (const Mat& m : fundamental_reps(rho, s)) {
      const auto pd = proximal_data(m);
      if (!pd) {
        ok = false;
        break;
      }
      prox[s].push_back(*pd);
      margin = std::min(margin, separation_margin(*pd));
    }
    gm.proximal = ok;
    gm.margin = ok ? margin : 0.0;
    cert.margins.push_back(gm);
    if (!ok && cert.failure.empty()) cert.failure = "generator '" + s + "' not proximal";
  }
  cert.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& gm : cert.margins) cert.min_margin = std::min(cert.min_margin, gm.margin);
  if (cert.margins.empty()) cert.min_margin = 0.0;

  if (cert.failure.empty()) {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const Edge& e : r.edges)
      for (const Edge& f : r.edges)
        if (e.to == f.from) pairs.insert({e.label, f.label});
    cert.min_distance = std::numeric_limits<double>::infinity();
    for (const auto& [from, to] : pairs) {
      TransitionDistance td;
      td.from = from;
      td.to = to;
      td.dist_std = point_hyperplane_distance(prox[to][0].attracting, prox[from][0].repelling);
      td.dist_dual = (rho.n == 3)
                         ? point_hyperplane_distance(prox[to][1].attracting, prox[from][1].repelling)
                         : td.dist_std;
      cert.transitions.push_back(td);
      cert.min_distance = std::min(cert.min_distance, std::min(td.dist_std, td.dist_dual));
    }
    if (pairs.empty()) cert.min_distance = 0.0;
  }

  if (cert.failure.empty() && cert.min_margin < eps)
    cert.failure = "generator margin below epsilon";
  if (cert.failure.empty() && cert.min_distance < 2.0 * eps)
    cert.failure = "transition distance below 2 epsilon";
  cert.pass = cert.failure.empty();
  return cert;
}

double separation_sup(const Representation& rho, const LabeledGraph& g) {
  const SeparationCertificate cert = certify_separation(rho, g, 0.0);
  if (!cert.pass) return 0.0;
  return std::min(cert.min_margin, 0.5 * cert.min_distance);
}

ExponentReport exponent_bounds(const Representation& rho, const Functional& phi,
                               const LabeledGraph& g, double eps) {
  ExponentReport rep;
  const auto [hk, hl] = approximating_exponents(rho, phi, g);
  rep.h_kappa = hk;
  rep.h_lambda = hl;
  rep.lower = hk;
  const auto wk = generator_weights(rho, phi, g, WeightKind::kappa);
  const auto wl = generator_weights(rho, phi, g, WeightKind::lambda);
  rep.m_kappa = std::numeric_limits<double>::infinity();
  rep.m_lambda = std::numeric_limits<double>::infinity();
  for (const auto& [s, v] : wk) rep.m_kappa = std::min(rep.m_kappa, v);
  for (const auto& [s, v] : wl) rep.m_lambda = std::min(rep.m_lambda, v);
  rep.phi_r_eps = phi(r_epsilon(rho.n, eps));
  rep.certified = certify_separation(rho, g, eps).pass;
  rep.valid_upper = rep.m_kappa > 2.0 * rep.phi_r_eps;
  rep.valid_upper_lambda = rep.m_lambda > rep.phi_r_eps;
  if (rep.valid_upper) rep.upper = hk / (1.0 - 2.0 * rep.phi_r_eps / rep.m_kappa);
  if (rep.valid_upper_lambda) rep.upper_lambda = hl / (1.0 - rep.phi_r_eps / rep.m_lambda);
  return rep;
}

double periodic_exponent(const Representation& rho, const Functional& phi, const LabeledGraph& g,
                         int n) {
  const auto cycles = enumerate_cycles(g, n);
  if (cycles.empty()) throw std::invalid_argument("periodic_exponent: no cycles of that length");
  std::vector<std::pair<double, double>> terms;  // (multiplicity, length)
  for (const Cycle& c : cycles) {
    const GroupWord w = evaluate_path(g, c.edge_ids);
    const double len = phi(evaluate_state(rho, w).lambda());
    if (!(len > 0.0)) throw std::runtime_error("periodic_exponent: non-positive cycle length");
    terms.push_back({static_cast<double>(c.rotations), len});
  }
  const auto f = [&](double s) {
    double sum = 0.0;
    for (const auto& [mult, len] : terms) sum += mult * std::exp(-s * len);
    return std::log(sum) / static_cast<double>(n);
  };
  return bisect_decreasing(f, 1e-10);
}

double busemann_depth_k_exponent(const Representation& rho, const Functional& phi,
                                 const LabeledGraph& g, int k, int node_budget) {
  if (k < 1) throw std::invalid_argument("busemann_depth_k_exponent: k must be >= 1");
  std::map<std::vector<std::string>, double> cache;
  const auto potential = [&](const std::vector<std::string>& labels) -> double {
    const auto it = cache.find(labels);
    if (it != cache.end()) return it->second;
    Mat tail = identity(rho.n);
    for (std::size_t i = 1; i < labels.size(); ++i) tail = tail * rho.matrix(labels[i]);
    const Mat& head = rho.matrix(labels[0]);
    double value;
    if (rho.n == 3) {
      value = phi(iwasawa_value_sl3(head, attracting_flag(tail)));
    } else {
      const Svd s = svd(tail);
      const Vec3 p{s.u(0, 0), s.u(1, 0), 0.0};
      const double logdet = 0.5 * std::log(std::abs(det(head)));
      const Vec3 image = apply(head, p);
      const double omega1 = std::log(norm(image, 2)) - logdet;
      value = phi(cartan_vector(omega1, -omega1));
    }
    cache[labels] = value;
    return value;
  };
  const auto f = [&](double s) {
    return block_recoded_pressure(
               g, k + 1, [&](const std::vector<std::string>& labels) { return -s * potential(labels); },
               node_budget)
        .value;
  };
  return bisect_decreasing(f, 1e-10);
}

double brute_force_exponent(const Representation& rho, const Functional& phi,
                            const LabeledGraph& g, double t_max, long long budget) {
  const auto out = g.out_edges();
  std::vector<double> values;
  struct Frame {
    int vertex;
    WordState state;
  };
  std::vector<Frame> stack;
  stack.push_back({g.start, WordState::start(rho.n)});
  while (!stack.empty()) {
    const Frame fr = std::move(stack.back());
    stack.pop_back();
    for (int eid : out[static_cast<std::size_t>(fr.vertex)]) {
      const Edge& e = g.edges[static_cast<std::size_t>(eid)];
      WordState next = fr.state.extend(rho.matrix(e.label));
      const double t = phi(next.kappa());
      if (t > t_max) continue;
      values.push_back(t);
      if (static_cast<long long>(values.size()) > budget)
        throw std::runtime_error("brute_force_exponent: element budget exceeded");
      stack.push_back({e.to, std::move(next)});
    }
  }
  if (values.size() < 2) throw std::runtime_error("brute_force_exponent: too few elements");
  std::sort(values.begin(), values.end());

  const int samples = 25;
  const double lo = 0.5 * t_max;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int used = 0;
  for (int j = 0; j < samples; ++j) {
    const double t = lo + (t_max - lo) * static_cast<double>(j) / (samples - 1);
    const auto count = std::upper_bound(values.begin(), values.end(), t) - values.begin();
    if (count < 1) continue;
    const double y = std::log(static_cast<double>(count));
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
    ++used;
  }
  if (used < 2) throw std::runtime_error("brute_force_exponent: degenerate fit");
  return (used * sxy - sx * sy) / (used * sxx - sx * sx);
}

double limit_cone_deviation(const Representation& rho, const LabeledGraph& g, int n) {
  if (n < 1) throw std::invalid_argument("limit_cone_deviation: n must be >= 1");
  // Orthonormal basis of the trace-zero subspace; Cartan vectors reduce to
  // planar angles.
  const auto angle = [&](const CartanVector& v) {
    double x, y;
    if (rho.n == 3) {
      x = (v[0] - v[2]) / std::sqrt(2.0);
      y = (v[0] - 2.0 * v[1] + v[2]) / std::sqrt(6.0);
    } else {
      x = (v[0] - v[1]) / std::sqrt(2.0);
      y = 0.0;
    }
    return std::atan2(y, x);
  };
  std::vector<double> gen_angles;
  for (const std::string& s : recurrent_labels(g))
    gen_angles.push_back(angle(cartan_projection(rho.matrix(s))));
  if (gen_angles.empty()) throw std::invalid_argument("limit_cone_deviation: empty recurrent part");
  const double ref = gen_angles.front();
  const auto rebase = [&](double a) {
    while (a > ref + M_PI) a -= 2.0 * M_PI;
    while (a <= ref - M_PI) a += 2.0 * M_PI;
    return a;
  };
  double cone_lo = rebase(gen_angles.front()), cone_hi = cone_lo;
  for (double a : gen_angles) {
    const double b = rebase(a);
    cone_lo = std::min(cone_lo, b);
    cone_hi = std::max(cone_hi, b);
  }
  double worst = 0.0;
  for (int len = 1; len <= n; ++len) {
    for (const Cycle& c : enumerate_cycles(g, len)) {
      const GroupWord w = evaluate_path(g, c.edge_ids);
      const double a = rebase(angle(evaluate_state(rho, w).lambda()));
      if (a < cone_lo) worst = std::max(worst, cone_lo - a);
      if (a > cone_hi) worst = std::max(worst, a - cone_hi);
    }
  }
  return worst;
}

ThurstonEstimate thurston_estimate(const Representation& rho1, const Representation& rho2,
                                   const Functional& phi, const LabeledGraph& g, int max_len,
                                   int depth_k) {
  ThurstonEstimate est;
  est.depth_k = depth_k;
  est.h1 = busemann_depth_k_exponent(rho1, phi, g, depth_k);
  est.h2 = busemann_depth_k_exponent(rho2, phi, g, depth_k);
  double best = 0.0;
  bool found = false;
  for (int len = 1; len <= max_len; ++len) {
    for (const Cycle& c : enumerate_cycles(g, len)) {
      if (!c.primitive) continue;
      const GroupWord w = evaluate_path(g, c.edge_ids);
      const double l1 = phi(evaluate_state(rho1, w).lambda());
      const double l2 = phi(evaluate_state(rho2, w).lambda());
      if (!(l1 > 0.0) || !(l2 > 0.0))
        throw std::runtime_error("thurston_estimate: non-positive cycle length");
      const double ratio = (est.h2 * l2) / (est.h1 * l1);
      if (!found || ratio > best) {
        best = ratio;
        est.best_cycle = w;
        found = true;
      }
    }
  }
  if (!found) throw std::invalid_argument("thurston_estimate: no primitive cycles");
  est.value = std::log(best);
  return est;
}

}  // namespace critex
