#include "critex/io.hpp"

#include <fstream>
#include <stdexcept>

namespace critex {

Functional parse_functional(const nlohmann::json& j) {
  const std::string basis = j.value("basis", "raw");
  const auto coeffs = j.at("coeffs").get<std::vector<double>>();
  if (basis == "roots") {
    if (coeffs.size() != 2) throw std::invalid_argument("functional: roots basis needs 2 coeffs");
    return functional_from_roots(coeffs[0], coeffs[1]);
  }
  if (basis == "weights") {
    if (coeffs.size() != 2) throw std::invalid_argument("functional: weights basis needs 2 coeffs");
    return functional_from_weights(coeffs[0], coeffs[1]);
  }
  if (basis == "raw") {
    if (coeffs.size() != 2 && coeffs.size() != 3)
      throw std::invalid_argument("functional: raw basis needs 2 or 3 coeffs");
    std::array<double, 3> c{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
    return functional_raw(static_cast<int>(coeffs.size()), c);
  }
  throw std::invalid_argument("functional: unknown basis '" + basis + "'");
}

LabeledGraph parse_graph(const nlohmann::json& j) {
  LabeledGraph g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  g.start = j.at("start").get<int>();
  if (g.start < 0 || g.start >= g.vertex_count())
    throw std::invalid_argument("graph: start out of range");
  int id = 0;
  for (const auto& je : j.at("edges")) {
    Edge e;
    e.id = id++;
    e.from = je.at("from").get<int>();
    e.to = je.at("to").get<int>();
    e.label = je.at("label").get<std::string>();
    if (e.from < 0 || e.from >= g.vertex_count() || e.to < 0 || e.to >= g.vertex_count())
      throw std::invalid_argument("graph: edge endpoint out of range");
    g.edges.push_back(e);
  }
  return g;
}

Representation parse_representation(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  if (n != 2 && n != 3) throw std::invalid_argument("representation: n must be 2 or 3");
  std::map<std::string, Mat> gens;
  for (const auto& [name, rows] : j.at("generators").items()) {
    const auto entries = rows.get<std::vector<std::vector<double>>>();
    if (static_cast<int>(entries.size()) != n)
      throw std::invalid_argument("representation: row count mismatch at '" + name + "'");
    Mat m = identity(n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(entries[static_cast<std::size_t>(r)].size()) != n)
        throw std::invalid_argument("representation: column count mismatch at '" + name + "'");
      for (int c = 0; c < n; ++c)
        m(r, c) = entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    gens[name] = m;
  }
  return make_representation(n, gens);
}

FGParams parse_fg_params(const nlohmann::json& j) {
  FGParams p;
  const auto x = j.at("X").get<std::vector<double>>();
  const auto z = j.at("Z").get<std::vector<double>>();
  const auto w = j.at("W").get<std::vector<double>>();
  if (x.size() != 2 || z.size() != 3 || w.size() != 3)
    throw std::invalid_argument("fg params: need X[2], Z[3], W[3]");
  p.x1 = x[0];
  p.x2 = x[1];
  for (std::size_t i = 0; i < 3; ++i) {
    p.z[i] = z[i];
    p.w[i] = w[i];
  }
  if (j.value("mode", "") == "shear") p = shear_family(j.at("t").get<double>(), p);
  return p;
}

nlohmann::json to_json(const SeparationCertificate& cert) {
  nlohmann::json j;
  j["epsilon"] = cert.epsilon;
  j["pass"] = cert.pass;
  j["failure"] = cert.failure;
  j["min_margin"] = cert.min_margin;
  j["min_distance"] = cert.min_distance;
  nlohmann::json margins = nlohmann::json::array();
  for (const auto& m : cert.margins)
    margins.push_back({{"symbol", m.symbol}, {"proximal", m.proximal}, {"margin", m.margin}});
  j["margins"] = margins;
  nlohmann::json transitions = nlohmann::json::array();
  for (const auto& t : cert.transitions)
    transitions.push_back(
        {{"from", t.from}, {"to", t.to}, {"dist_std", t.dist_std}, {"dist_dual", t.dist_dual}});
  j["transitions"] = transitions;
  return j;
}

nlohmann::json to_json(const ExponentReport& report) {
  return {{"h_kappa", report.h_kappa},
          {"h_lambda", report.h_lambda},
          {"lower", report.lower},
          {"upper", report.upper},
          {"upper_lambda", report.upper_lambda},
          {"m_kappa", report.m_kappa},
          {"m_lambda", report.m_lambda},
          {"phi_r_eps", report.phi_r_eps},
          {"certified", report.certified},
          {"valid_upper", report.valid_upper},
          {"valid_upper_lambda", report.valid_upper_lambda}};
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace critex
