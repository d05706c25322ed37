#include "cli_lib.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "critex/automaton.hpp"
#include "critex/io.hpp"
#include "critex/pants.hpp"
#include "critex/pressure.hpp"
#include "critex/rep.hpp"
#include "critex/weyl.hpp"

namespace critex {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

LabeledGraph graph_from_spec(const json& spec) {
  if (spec.is_string()) {
    const std::string s = spec.get<std::string>();
    if (s == "builtin:abc") return builtin_f2_abc();
    if (s == "builtin:standard") return builtin_f2_standard();
    throw std::invalid_argument("unknown builtin graph: " + s);
  }
  return parse_graph(spec);
}

Functional phi_from_flag(const std::string& flag) {
  const auto colon = flag.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("phi flag must be basis:coeffs");
  const std::string basis = flag.substr(0, colon);
  std::vector<double> coeffs;
  std::stringstream ss(flag.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(std::stod(item));
  json j = {{"basis", basis}, {"coeffs", coeffs}};
  return parse_functional(j);
}

struct Options {
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format;
  double epsilon = -1.0;  // unset
  std::string phi_flag;
  long long budget = -1;  // unset
  long long seed = 0;
};

Functional resolve_phi(const Options& opt, const json& config) {
  if (!opt.phi_flag.empty()) return phi_from_flag(opt.phi_flag);
  if (config.contains("phi")) return parse_functional(config.at("phi"));
  return functional_from_roots(1.0, 1.0);
}

double resolve_epsilon(const Options& opt, const json& config, double fallback) {
  if (opt.epsilon >= 0.0) return opt.epsilon;
  return config.value("epsilon", fallback);
}

json pants_record(const FGParams& p, const Functional& phi, double eps, int depth_k,
                  int periodic_n) {
  const LabeledGraph g = builtin_f2_abc();
  const Admissibility adm = is_admissible(p);
  json rec;
  rec["admissible"] = adm.pass;
  rec["min_slack"] = adm.min_slack;
  const PantsHolonomy h = holonomy(p);
  // degenerate parameter points (nonpositive potentials, non-proximal
  // generators) keep the record but drop the affected fields
  try {
    const double root = sl3_transfer_root(p, phi);
    rec["transfer_root"] = root;
    rec["scalar_residual"] = sl3_scalar_residual(root, p, phi);
  } catch (const std::exception& ex) {
    rec["transfer_error"] = ex.what();
  }
  try {
    const ExponentReport bounds = exponent_bounds(h.rep, phi, g, eps);
    rec["bounds"] = to_json(bounds);
    rec["h_kappa"] = bounds.h_kappa;
    rec["h_lambda"] = bounds.h_lambda;
    rec["depth_k"] = depth_k;
    rec["depth_k_value"] = busemann_depth_k_exponent(h.rep, phi, g, depth_k);
    rec["periodic_n"] = periodic_n;
    rec["periodic_value"] = periodic_exponent(h.rep, phi, g, periodic_n);
  } catch (const std::exception& ex) {
    rec["exponent_error"] = ex.what();
  }
  const SeparationCertificate cert = certify_separation(h.rep, g, eps);
  rec["certificate"] = to_json(cert);
  if (adm.pass) {
    json cf;
    const VWVectors vw = vw_vectors(p);
    json vs = json::array(), ws = json::array();
    for (int i = 0; i < 3; ++i) {
      vs.push_back(phi(vw.v[static_cast<std::size_t>(i)]));
      ws.push_back(phi(vw.w[static_cast<std::size_t>(i)]));
    }
    cf["phi_v"] = vs;
    cf["phi_w"] = ws;
    rec["closed_forms"] = cf;
  }
  return rec;
}

int cmd_pressure(const Options& opt, const json& config, std::ostream& out) {
  const LabeledGraph g = graph_from_spec(config.value("graph", json("builtin:abc")));
  std::map<std::string, double> weights;
  if (config.contains("weights"))
    weights = config.at("weights").get<std::map<std::string, double>>();
  const PressureResult res = pressure_edge_weighted(g, [&](const Edge& e) {
    const auto it = weights.find(e.label);
    return it == weights.end() ? 0.0 : it->second;
  });
  json j;
  j["pressure"] = res.value;
  j["perron_root"] = res.perron.root;
  j["residual"] = res.perron.residual;
  j["iterations"] = res.perron.iterations;
  j["seed"] = opt.seed;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_pants_exponent(const Options& opt, const json& config, std::ostream& out) {
  const FGParams p = parse_fg_params(config.at("params"));
  const Functional phi = resolve_phi(opt, config);
  const double eps = resolve_epsilon(opt, config, 0.1);
  const int depth_k = config.value("depth_k", 2);
  const int periodic_n = config.value("periodic_n", 4);
  json rec = pants_record(p, phi, eps, depth_k, periodic_n);
  rec["seed"] = opt.seed;
  out << rec.dump(2) << "\n";
  return 0;
}

int cmd_certify(const Options& opt, const json& config, std::ostream& out) {
  const double eps = resolve_epsilon(opt, config, 0.1);
  Representation rho;
  LabeledGraph g;
  if (config.contains("params")) {
    rho = holonomy(parse_fg_params(config.at("params"))).rep;
    g = graph_from_spec(config.value("graph", json("builtin:abc")));
  } else {
    rho = parse_representation(config.at("representation"));
    g = graph_from_spec(config.at("graph"));
  }
  json j = to_json(certify_separation(rho, g, eps));
  j["separation_sup"] = separation_sup(rho, g);
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_thurston(const Options& opt, const json& config, std::ostream& out) {
  const Functional phi = resolve_phi(opt, config);
  const Representation r1 = holonomy(parse_fg_params(config.at("params1"))).rep;
  const Representation r2 = holonomy(parse_fg_params(config.at("params2"))).rep;
  const int max_len = config.value("max_len", 5);
  const int depth_k = config.value("depth_k", 2);
  const ThurstonEstimate est =
      thurston_estimate(r1, r2, phi, builtin_f2_abc(), max_len, depth_k);
  json j;
  j["estimate"] = est.value;
  j["is_lower_estimate_of_sup"] = true;
  j["h1"] = est.h1;
  j["h2"] = est.h2;
  j["depth_k"] = est.depth_k;
  j["max_len"] = max_len;
  j["best_cycle"] = est.best_cycle.symbols;
  j["seed"] = opt.seed;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_validate_coding(const Options&, const json& config, std::ostream& out) {
  const LabeledGraph g = graph_from_spec(config.value("graph", json("builtin:abc")));
  const int depth = config.value("depth", 8);
  const ValidationReport rep = validate_strong_markov(g, depth);
  json j;
  j["ok"] = rep.ok;
  j["message"] = rep.message;
  j["depth"] = depth;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const Options& opt, const json& config, std::ostream& out) {
  const json grid = config.at("grid");
  const double t0 = grid.at("t0").get<double>();
  const double t1 = grid.at("t1").get<double>();
  const int steps = grid.at("steps").get<int>();
  if (steps < 1) throw std::invalid_argument("sweep: grid must be nonempty");
  FGParams base;
  if (config.contains("base")) base = parse_fg_params(config.at("base"));
  const Functional phi = resolve_phi(opt, config);
  const int periodic_n = config.value("periodic_n", 4);
  const int depth_k = config.value("depth_k", 2);
  long long brute_budget = config.value("brute_budget", 0LL);
  if (opt.budget >= 0) brute_budget = opt.budget;
  const double brute_t_factor = config.value("brute_t_factor", 8.2);
  const bool has_compare = config.contains("compare_base");
  FGParams compare_base;
  if (has_compare) compare_base = parse_fg_params(config.at("compare_base"));

  const LabeledGraph g = builtin_f2_abc();
  std::ostringstream csv;
  csv << "t,h_kappa,h_lambda,transfer_root,periodic_n,depth_k,brute_force,cert_epsilon,"
         "thurston_vs_base,error\n";
  int ok_rows = 0;
  for (int i = 0; i < steps; ++i) {
    const double t = (steps == 1) ? t0 : t0 + (t1 - t0) * static_cast<double>(i) / (steps - 1);
    std::string row = fmt17(t);
    try {
      const FGParams p = shear_family(t, base);
      const PantsHolonomy h = holonomy(p);
      const auto [hk, hl] = approximating_exponents(h.rep, phi, g);
      const double root = sl3_transfer_root(p, phi);
      const double per = periodic_exponent(h.rep, phi, g, periodic_n);
      const double depth = busemann_depth_k_exponent(h.rep, phi, g, depth_k);
      std::string brute = "";
      if (brute_budget > 0) {
        const auto wk = generator_weights(h.rep, phi, g, WeightKind::kappa);
        double m = wk.begin()->second;
        for (const auto& [s, v] : wk) m = std::min(m, v);
        brute = fmt17(brute_force_exponent(h.rep, phi, g, brute_t_factor * m, brute_budget));
      }
      const double cert_eps = separation_sup(h.rep, g);
      std::string thurston = "";
      if (has_compare) {
        const FGParams q = shear_family(t, compare_base);
        const Representation r2 = holonomy(q).rep;
        thurston = fmt17(thurston_estimate(h.rep, r2, phi, g, 5, depth_k).value);
      }
      for (double v : {hk, hl, root, per, depth})
        if (!std::isfinite(v)) throw std::runtime_error("non-finite value");
      row += "," + fmt17(hk) + "," + fmt17(hl) + "," + fmt17(root) + "," + fmt17(per) + "," +
             fmt17(depth) + "," + brute + "," + fmt17(cert_eps) + "," + thurston + ",";
      ++ok_rows;
    } catch (const std::exception& ex) {
      row += ",,,,,,,,," + std::string(ex.what());
    }
    csv << row << "\n";
  }
  out << csv.str();
  return ok_rows > 0 ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"critical exponent toolkit"};
  app.add_option("command", opt.command, "pressure | pants-exponent | sweep | certify | thurston | validate-coding")
      ->required();
  app.add_option("--config", opt.config_path, "path to a JSON config");
  app.add_option("--out", opt.out_path, "output path (default stdout)");
  app.add_option("--format", opt.format, "csv | json");
  app.add_option("--epsilon", opt.epsilon, "separation parameter override");
  app.add_option("--phi", opt.phi_flag, "functional override, e.g. roots:1,1");
  app.add_option("--budget", opt.budget, "element budget override");
  app.add_option("--seed", opt.seed, "seed recorded in output");

  std::vector<const char*> argv;
  argv.push_back("critex");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << "\n";
    return 2;
  }
  if (opt.format != "" && opt.format != "csv" && opt.format != "json") {
    err << "unknown format: " << opt.format << "\n";
    return 2;
  }

  json config = json::object();
  std::ostringstream buffer;
  int code;
  try {
    if (!opt.config_path.empty()) config = load_json_file(opt.config_path);
    if (opt.command == "pressure")
      code = cmd_pressure(opt, config, buffer);
    else if (opt.command == "pants-exponent")
      code = cmd_pants_exponent(opt, config, buffer);
    else if (opt.command == "sweep")
      code = cmd_sweep(opt, config, buffer);
    else if (opt.command == "certify")
      code = cmd_certify(opt, config, buffer);
    else if (opt.command == "thurston")
      code = cmd_thurston(opt, config, buffer);
    else if (opt.command == "validate-coding")
      code = cmd_validate_coding(opt, config, buffer);
    else {
      err << "unknown command: " << opt.command << "\n";
      return 2;
    }
  } catch (const json::exception& ex) {
    err << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "numeric error: " << ex.what() << "\n";
    return 3;
  }

  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) {
      err << "cannot open output path: " << opt.out_path << "\n";
      return 2;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace critex
