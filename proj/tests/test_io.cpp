#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "entmono/cones.hpp"
#include "entmono/io.hpp"
#include "entmono/monotones.hpp"
#include "entmono/states.hpp"

using namespace entmono;
using nlohmann::json;

TEST_CASE("operator json round trip") {
  const HermitianOperator s = random_state(2, 3, 77);
  const HermitianOperator back = operator_from_json(operator_to_json(s));
  CHECK(back.dim_a() == 2);
  CHECK(back.dim_b() == 3);
  CHECK((back - s).frobenius_norm() < 1e-14);
}

TEST_CASE("operator parser rejects malformed documents") {
  CHECK_THROWS_AS(operator_from_json(json{{"dim_a", 2}, {"dim_b", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(operator_from_json(json{{"dim_a", 0}, {"dim_b", 2}, {"entries", json::array()}}),
                  std::invalid_argument);

  json j = operator_to_json(max_entangled(2));
  j["entries"][0].erase(3);
  CHECK_THROWS_AS(operator_from_json(j), std::invalid_argument);

  // Dimension cap: 7x7 = 49 > 36.
  json big{{"dim_a", 7}, {"dim_b", 7}, {"entries", json::array()}};
  CHECK_THROWS_AS(operator_from_json(big), std::length_error);
}

TEST_CASE("hermiticity policy at parse time") {
  json j = operator_to_json(max_entangled(2));
  j["entries"][0][1] = json::array({0.3, 0.0});  // break symmetry hard
  CHECK_THROWS_AS(operator_from_json(j, false), std::invalid_argument);
  const HermitianOperator fixed = operator_from_json(j, true);  // --symmetrize path
  CHECK(std::abs(fixed.entry(0, 1) - std::conj(fixed.entry(1, 0))) == 0.0);
}

TEST_CASE("operator file round trip") {
  const std::string path = "/tmp/entmono_test_op.json";
  const HermitianOperator s = isotropic(2, 0.7).state;
  write_operator_file(path, s);
  const HermitianOperator back = read_operator_file(path);
  CHECK((back - s).frobenius_norm() < 1e-12);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_operator_file("/tmp/definitely_missing_entmono.json"),
                  std::invalid_argument);
}

TEST_CASE("result serialization carries bracket and flags") {
  MonotoneConfig cfg;
  cfg.solver.restarts = 12;
  const MonotoneResult r = m1(isotropic(2, 0.75).state, cfg);
  const json j = result_to_json(r);
  CHECK(j.at("kind") == "m1");
  CHECK(j.at("lo").get<double>() <= j.at("hi").get<double>());
  CHECK(j.at("value").get<double>() == doctest::Approx(0.6).epsilon(1e-3));
  CHECK(j.at("flags").contains("heuristic"));
  CHECK(j.at("diagnostics").contains("probes"));
}

TEST_CASE("cone verdicts serialize") {
  SolverConfig scfg;
  scfg.restarts = 12;
  const ConeVerdict v = is_decomposable(max_entangled(2).partial_transpose(), scfg);
  const json j = verdict_to_json(v);
  CHECK(j.at("status") == "member");  // Gamma(PSD) route
  CHECK(j.at("converged").get<bool>());
  CHECK(j.at("has_decomposition").get<bool>());

  const ConeVerdict bad = is_psd(max_entangled(2).partial_transpose());
  CHECK(verdict_to_json(bad).at("status") == "non_member");
}

TEST_CASE("csv formatting is stable") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3) == "0.333333333333");
  CHECK(format_double(-0.0001) == "-0.0001");

  HarnessReport rep;
  rep.m_in = 0.25;
  rep.rows.push_back(HarnessRow{"f", 2, 0.5, 0.25, 0.125, -0.125});
  const std::string csv = harness_to_csv(rep);
  CHECK(csv.find("# entmono harness v1") == 0);
  CHECK(csv.find("f,2,0.5,0.25,0.125,-0.125") != std::string::npos);
}
