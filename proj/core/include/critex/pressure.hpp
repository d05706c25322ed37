#pragma once

#include <functional>
#include <string>
#include <vector>

#include "critex/automaton.hpp"

// Pressure of locally constant potentials on finite-type shifts, via Perron
// roots of weighted adjacency matrices, plus bisection for exponent
// equations P(-s w) = 0.

namespace critex {

struct PerronResult {
  double root = 0.0;
  std::vector<double> eigenvector;  // strictly positive, max entry 1
  int iterations = 0;
  double residual = 0.0;  // ||A u - root u||_inf / ||u||_inf
};

// Spectral radius of an irreducible non-negative matrix by power iteration
// (all-ones start, 1e-12 relative stop). Periodic matrices are shifted by
// delta = 1e-3 * maxentry on the diagonal, the shift subtracted back.
// Throws std::invalid_argument on non-square, zero, or reducible input.
PerronResult perron_root(const std::vector<std::vector<double>>& m);

struct PressureResult {
  double value = 0.0;  // log of the Perron root
  PerronResult perron;
};

using EdgeWeight = std::function<double(const Edge&)>;

// Pressure over the edge shift of the recurrent subgraph: Perron root of the
// edge-adjacency matrix carrying e^{w(e)} on every transition out of e.
PressureResult pressure_edge_weighted(const LabeledGraph& g, const EdgeWeight& w);

// Unique s >= 0 with pressure(-s w) = 0, by bisection on the decreasing map
// s -> P(-s w). Requires all weights > 0.
double solve_exponent(const LabeledGraph& g, const EdgeWeight& w, double tol = 1e-10);

using CylinderWeight = std::function<double(const std::vector<std::string>&)>;

// Pressure of a potential constant on k-cylinders: vertices of the recoded
// graph are admissible label paths of length k, edges are one-step overlaps,
// and each transition out of a block carries e^{w(block labels)}.
PressureResult block_recoded_pressure(const LabeledGraph& g, int k, const CylinderWeight& w,
                                      int node_budget = 200000);

}  // namespace critex
