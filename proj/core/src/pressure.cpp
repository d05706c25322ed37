#include "critex/pressure.hpp"

#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

namespace critex {

namespace {

bool reaches_all(const std::vector<std::vector<double>>& m, bool transposed) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> bfs;
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    const std::size_t v = bfs.front();
    bfs.pop();
    for (std::size_t w = 0; w < n; ++w) {
      const double entry = transposed ? m[w][v] : m[v][w];
      if (entry > 0.0 && !seen[w]) {
        seen[w] = true;
        bfs.push(w);
      }
    }
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

}  // namespace

PerronResult perron_root(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("perron_root: empty matrix");
  double max_entry = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("perron_root: matrix not square");
    for (double x : m[i]) {
      if (x < 0.0) throw std::invalid_argument("perron_root: negative entry");
      max_entry = std::max(max_entry, x);
    }
  }
  if (max_entry == 0.0) throw std::invalid_argument("perron_root: zero matrix");
  if (!reaches_all(m, false) || !reaches_all(m, true))
    throw std::invalid_argument("perron_root: reducible matrix");

  const double delta = 1e-3 * max_entry;
  std::vector<std::vector<double>> a = m;
  for (std::size_t i = 0; i < n; ++i) a[i][i] += delta;

  std::vector<double> u(n, 1.0), v(n, 0.0);
  double rho = 0.0;
  int iterations = 0;
  for (; iterations < 100000; ++iterations) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * u[j];
      v[i] = s;
      norm = std::max(norm, s);
    }
    for (std::size_t i = 0; i < n; ++i) v[i] /= norm;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += v[i] * u[i] * norm;
      den += u[i] * u[i];
    }
    const double next_rho = num / den;
    const bool done = iterations > 0 && std::abs(next_rho - rho) <= 1e-12 * std::abs(next_rho);
    rho = next_rho;
    u = v;
    if (done) break;
  }

  double residual = 0.0, umax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a[i][j] * u[j];
    residual = std::max(residual, std::abs(s - rho * u[i]));
    umax = std::max(umax, std::abs(u[i]));
  }

  PerronResult r;
  r.root = rho - delta;
  r.eigenvector = u;
  r.iterations = iterations;
  r.residual = residual / umax;
  return r;
}

PressureResult pressure_edge_weighted(const LabeledGraph& g, const EdgeWeight& w) {
  const LabeledGraph r = recurrent_subgraph(g);
  if (r.edges.empty()) throw std::invalid_argument("pressure_edge_weighted: no recurrent edges");
  std::map<int, std::size_t> pos;
  for (const Edge& e : r.edges) pos.emplace(e.id, pos.size());
  const std::size_t n = r.edges.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (const Edge& e : r.edges) {
    const double we = std::exp(w(e));
    for (const Edge& f : r.edges)
      if (e.to == f.from) m[pos[e.id]][pos[f.id]] = we;
  }
  PressureResult res;
  res.perron = perron_root(m);
  res.value = std::log(res.perron.root);
  return res;
}

double solve_exponent(const LabeledGraph& g, const EdgeWeight& w, double tol) {
  const LabeledGraph r = recurrent_subgraph(g);
  for (const Edge& e : r.edges)
    if (!(w(e) > 0.0)) throw std::invalid_argument("solve_exponent: weights must be positive");
  const auto pressure_at = [&](double s) {
    return pressure_edge_weighted(g, [&](const Edge& e) { return -s * w(e); }).value;
  };
  if (pressure_at(0.0) <= 0.0) return 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (pressure_at(hi) > 0.0) {
    hi *= 2.0;
    if (++doublings > 60) throw std::runtime_error("solve_exponent: bracket failure");
  }
  double lo = 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (pressure_at(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

PressureResult block_recoded_pressure(const LabeledGraph& g, int k, const CylinderWeight& w,
                                      int node_budget) {
  if (k < 1) throw std::invalid_argument("block_recoded_pressure: k must be >= 1");
  const LabeledGraph r = recurrent_subgraph(g);
  if (r.edges.empty()) throw std::invalid_argument("block_recoded_pressure: no recurrent edges");
  std::map<int, Edge> by_id;
  for (const Edge& e : r.edges) by_id[e.id] = e;
  const auto out = r.out_edges();

  // Blocks = admissible edge paths of length k, grown one edge at a time.
  std::vector<std::vector<int>> blocks;
  for (const Edge& e : r.edges) blocks.push_back({e.id});
  for (int step = 1; step < k; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto& b : blocks) {
      const int tail = by_id[b.back()].to;
      for (int eid : out[static_cast<std::size_t>(tail)]) {
        next.push_back(b);
        next.back().push_back(eid);
        if (static_cast<int>(next.size()) > node_budget)
          throw std::runtime_error("block_recoded_pressure: node budget exceeded");
      }
    }
    blocks = std::move(next);
  }
  if (static_cast<int>(blocks.size()) > node_budget)
    throw std::runtime_error("block_recoded_pressure: node budget exceeded");

  std::map<std::vector<int>, std::size_t> pos;
  for (const auto& b : blocks) pos.emplace(b, pos.size());
  const std::size_t n = blocks.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (const auto& b : blocks) {
    std::vector<std::string> labels;
    for (int eid : b) labels.push_back(by_id[eid].label);
    const double wb = std::exp(w(labels));
    const int tail = by_id[b.back()].to;
    for (int eid : out[static_cast<std::size_t>(tail)]) {
      std::vector<int> succ(b.begin() + 1, b.end());
      succ.push_back(eid);
      m[pos[b]][pos[succ]] = wb;
    }
  }
  PressureResult res;
  res.perron = perron_root(m);
  res.value = std::log(res.perron.root);
  return res;
}

}  // namespace critex
