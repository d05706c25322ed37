#include "doctest.h"

#include <cmath>

#include "critex/pressure.hpp"

using namespace critex;

TEST_CASE("perron root goldens") {
  const AdjacencyMatrix abc = vertex_adjacency(builtin_f2_abc());
  CHECK(perron_root(abc.a).root == doctest::Approx(4.0).epsilon(1e-10));
  const AdjacencyMatrix std4 = vertex_adjacency(builtin_f2_standard());
  CHECK(perron_root(std4.a).root == doctest::Approx(3.0).epsilon(1e-10));
  // periodic permutation matrix, handled by the diagonal shift
  CHECK(perron_root({{0.0, 1.0}, {1.0, 0.0}}).root == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("perron root residual and positivity") {
  const PerronResult r = perron_root(vertex_adjacency(builtin_f2_abc()).a);
  CHECK(r.residual <= 1e-10);
  for (double x : r.eigenvector) CHECK(x > 0.0);
}

TEST_CASE("perron root input validation") {
  CHECK_THROWS(perron_root({}));
  CHECK_THROWS(perron_root({{0.0, 0.0}, {0.0, 0.0}}));
  CHECK_THROWS(perron_root({{1.0, 1.0}, {0.0, 1.0}}));  // reducible
  CHECK_THROWS(perron_root({{1.0, -1.0}, {1.0, 1.0}}));
}

TEST_CASE("pressure of constant potentials") {
  const LabeledGraph abc = builtin_f2_abc();
  CHECK(pressure_edge_weighted(abc, [](const Edge&) { return 0.0; }).value ==
        doctest::Approx(std::log(4.0)).epsilon(1e-10));
  CHECK(pressure_edge_weighted(builtin_f2_standard(), [](const Edge&) { return 0.0; }).value ==
        doctest::Approx(std::log(3.0)).epsilon(1e-10));
  // a constant shifts the pressure by itself
  CHECK(pressure_edge_weighted(abc, [](const Edge&) { return 0.7; }).value ==
        doctest::Approx(std::log(4.0) + 0.7).epsilon(1e-9));
}

TEST_CASE("full shift on k self-loops") {
  LabeledGraph g;
  g.vertices = {"v"};
  g.start = 0;
  for (int i = 0; i < 5; ++i) g.edges.push_back({i, 0, 0, std::string(1, static_cast<char>('a' + i))});
  CHECK(pressure_edge_weighted(g, [](const Edge&) { return 0.0; }).value ==
        doctest::Approx(std::log(5.0)).epsilon(1e-10));
}

TEST_CASE("pressure monotonicity in the weights") {
  const LabeledGraph abc = builtin_f2_abc();
  const double p1 = pressure_edge_weighted(abc, [](const Edge& e) { return e.label == "a" ? 0.1 : 0.0; }).value;
  const double p2 = pressure_edge_weighted(abc, [](const Edge& e) { return e.label == "a" ? 0.3 : 0.1; }).value;
  CHECK(p1 <= p2);
}

TEST_CASE("solve_exponent constant weights") {
  const LabeledGraph abc = builtin_f2_abc();
  for (double m : {0.5, 1.0, 10.0}) {
    CHECK(solve_exponent(abc, [m](const Edge&) { return m; }) ==
          doctest::Approx(2.0 * std::log(2.0) / m).epsilon(1e-9));
  }
  CHECK(solve_exponent(builtin_f2_standard(), [](const Edge&) { return 1.0; }) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-9));
}

TEST_CASE("solve_exponent scaling and residual") {
  const LabeledGraph abc = builtin_f2_abc();
  const auto w = [](const Edge& e) { return e.label.size() == 1 ? 1.0 : 1.5; };
  const double s = solve_exponent(abc, w);
  const double s2 = solve_exponent(abc, [&](const Edge& e) { return 2.0 * w(e); });
  CHECK(s2 == doctest::Approx(s / 2.0).epsilon(1e-8));
  CHECK(std::abs(pressure_edge_weighted(abc, [&](const Edge& e) { return -s * w(e); }).value) <=
        1e-9);
}

TEST_CASE("solve_exponent rejects nonpositive weights") {
  CHECK_THROWS(solve_exponent(builtin_f2_abc(), [](const Edge& e) { return e.label == "a" ? -1.0 : 1.0; }));
}

TEST_CASE("block recoding refinement invariance") {
  const LabeledGraph abc = builtin_f2_abc();
  const auto first_symbol = [](const std::vector<std::string>& labels) {
    return labels.front() == "a" ? 0.4 : -0.2;
  };
  const double p1 = block_recoded_pressure(abc, 1, first_symbol).value;
  const double p2 = block_recoded_pressure(abc, 2, first_symbol).value;
  const double p3 = block_recoded_pressure(abc, 3, first_symbol).value;
  CHECK(p2 == doctest::Approx(p1).epsilon(1e-10));
  CHECK(p3 == doctest::Approx(p1).epsilon(1e-10));
  // and k = 1 agrees with the edge-weighted pressure
  const double pe = pressure_edge_weighted(abc, [&](const Edge& e) {
                      return first_symbol({e.label});
                    }).value;
  CHECK(p1 == doctest::Approx(pe).epsilon(1e-12));
}

TEST_CASE("full 2-shift with a diagonal 2-cylinder potential") {
  LabeledGraph g;
  g.vertices = {"v"};
  g.start = 0;
  g.edges = {{0, 0, 0, "x"}, {1, 0, 0, "y"}};
  const double a = 0.3, b = -0.5;
  const double p = block_recoded_pressure(g, 2, [&](const std::vector<std::string>& l) {
                     return l[0] == l[1] ? a : b;
                   }).value;
  CHECK(p == doctest::Approx(std::log(std::exp(a) + std::exp(b))).epsilon(1e-10));
}

TEST_CASE("block recoding budget") {
  CHECK_THROWS(block_recoded_pressure(
      builtin_f2_abc(), 6, [](const std::vector<std::string>&) { return 0.0; }, 100));
}

TEST_CASE("perron root of a power") {
  const auto a = vertex_adjacency(builtin_f2_abc()).a;
  const std::size_t n = a.size();
  std::vector<std::vector<double>> sq(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) sq[i][j] += a[i][k] * a[k][j];
  CHECK(perron_root(sq).root == doctest::Approx(16.0).epsilon(1e-9));
}
