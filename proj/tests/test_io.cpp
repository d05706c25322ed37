#include "doctest.h"

#include "critex/io.hpp"

using namespace critex;
using nlohmann::json;

TEST_CASE("functional parsing") {
  const Functional roots = parse_functional(json::parse(R"({"basis":"roots","coeffs":[1,1]})"));
  CHECK(roots.coeffs[0] == doctest::Approx(1.0));
  CHECK(roots.coeffs[1] == doctest::Approx(0.0));
  CHECK(roots.coeffs[2] == doctest::Approx(-1.0));

  const Functional weights = parse_functional(json::parse(R"({"basis":"weights","coeffs":[1,0]})"));
  CHECK(weights(cartan_vector(3.0, 1.0, -4.0)) == doctest::Approx(3.0));

  const Functional raw = parse_functional(json::parse(R"({"basis":"raw","coeffs":[1,-1]})"));
  CHECK(raw.n == 2);

  CHECK_THROWS(parse_functional(json::parse(R"({"basis":"spectral","coeffs":[1,1]})")));
  CHECK_THROWS(parse_functional(json::parse(R"({"basis":"roots","coeffs":[1,2,3]})")));
}

TEST_CASE("graph parsing") {
  const json j = json::parse(R"({
    "vertices": ["*", "u", "v"],
    "start": 0,
    "edges": [
      {"from": 0, "to": 1, "label": "a"},
      {"from": 1, "to": 2, "label": "b"},
      {"from": 2, "to": 1, "label": "a"}
    ]})");
  const LabeledGraph g = parse_graph(j);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.edges[1].label == "b");

  json bad = j;
  bad["start"] = 7;
  CHECK_THROWS(parse_graph(bad));
  bad = j;
  bad["edges"][0]["to"] = -1;
  CHECK_THROWS(parse_graph(bad));
}

TEST_CASE("representation parsing") {
  const json j = json::parse(R"({
    "n": 2,
    "generators": {"a": [[2.0, 0.0], [0.0, 0.5]]}})");
  const Representation rho = parse_representation(j);
  CHECK(rho.matrix("a")(0, 0) == doctest::Approx(2.0));
  CHECK(rho.matrix("a'")(0, 0) == doctest::Approx(0.5));

  CHECK_THROWS(parse_representation(json::parse(R"({"n":4,"generators":{}})")));
  CHECK_THROWS(parse_representation(json::parse(R"({"n":2,"generators":{"a":[[1,0]]}})")));
}

TEST_CASE("fg params parsing") {
  const json j = json::parse(R"({"X":[1,2],"Z":[3,4,5],"W":[6,7,8]})");
  const FGParams p = parse_fg_params(j);
  CHECK(p.x2 == doctest::Approx(2.0));
  CHECK(p.z[2] == doctest::Approx(5.0));
  CHECK(p.w[0] == doctest::Approx(6.0));

  json fam = j;
  fam["mode"] = "shear";
  fam["t"] = 1.0;
  const FGParams sheared = parse_fg_params(fam);
  CHECK(sheared.z[0] == doctest::Approx(3.0 * std::exp(1.0)));
  CHECK(sheared.x1 == doctest::Approx(1.0));

  CHECK_THROWS(parse_fg_params(json::parse(R"({"X":[1],"Z":[1,1,1],"W":[1,1,1]})")));
}

TEST_CASE("certificate serialization") {
  const Representation rho = holonomy(shear_family(4.0, FGParams{})).rep;
  const json j = to_json(certify_separation(rho, builtin_f2_abc(), 0.1));
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("margins").size() == 6);
  CHECK(j.at("transitions").size() == 24);
}

TEST_CASE("report serialization") {
  ExponentReport r;
  r.h_kappa = 0.5;
  r.valid_upper = true;
  const json j = to_json(r);
  CHECK(j.at("h_kappa").get<double>() == doctest::Approx(0.5));
  CHECK(j.at("valid_upper").get<bool>());
}

TEST_CASE("missing file") { CHECK_THROWS(load_json_file("/nonexistent/p.json")); }
