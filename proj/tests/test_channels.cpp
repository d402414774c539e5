#include <doctest.h>

#include <cmath>

#include "entmono/channels.hpp"
#include "entmono/closed_forms.hpp"
#include "entmono/eig.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

using namespace entmono;

TEST_CASE("apply: identity and depolarizing maps") {
  const HermitianOperator s = random_state(2, 2, 7);
  CHECK((apply(identity_map(2, 2), s) - s).frobenius_norm() < 1e-12);

  const HermitianOperator out = apply(depolarize_map(2, 2), s);
  CHECK((out - 0.25 * HermitianOperator::identity(2, 2)).frobenius_norm() < 1e-12);
}

TEST_CASE("apply is linear") {
  const KrausMap map = random_local_instrument(2, 2, 2, 2, 9);
  const HermitianOperator a = random_state(2, 2, 10);
  const HermitianOperator b = random_state(2, 2, 11);
  const HermitianOperator lhs = apply(map, 0.3 * a + 0.7 * b);
  const HermitianOperator rhs = 0.3 * apply(map, a) + 0.7 * apply(map, b);
  CHECK((lhs - rhs).frobenius_norm() < 1e-10);
}

TEST_CASE("local filter reshapes the schmidt spectrum") {
  // (diag(1, 1/2) (x) I) on P2+ gives schmidt weights (4/5, 1/5).
  CMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 0.5;
  const KrausMap f = local_filter_map(a, CMatrix::identity(2));
  const auto branches = branch_outcomes(f, max_entangled(2));
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].probability == doctest::Approx(0.625));  // (1 + 1/4)/2
  CHECK((branches[0].state - pure_schmidt({0.8, 0.2})).frobenius_norm() < 1e-10);
  CHECK(negativity(branches[0].state) == doctest::Approx(0.4).epsilon(1e-9));
}

TEST_CASE("kraus flag validation") {
  KrausMap ok = random_local_instrument(2, 2, 3, 2, 13);
  CHECK_NOTHROW(validate_kraus(ok));

  KrausMap broken = ok;
  broken.terms.pop_back();  // completeness now fails
  CHECK_THROWS_AS(validate_kraus(broken), std::invalid_argument);

  // A CNOT is unitary but not a product of local operators.
  CMatrix cnot(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  KrausMap entangling;
  entangling.id = "cnot";
  entangling.terms = {cnot};
  entangling.in_dim_a = entangling.out_dim_a = 2;
  entangling.in_dim_b = entangling.out_dim_b = 2;
  entangling.trace_preserving = true;
  CHECK_NOTHROW(validate_kraus(entangling));
  entangling.local_product = true;
  CHECK_THROWS_AS(validate_kraus(entangling), std::invalid_argument);
}

TEST_CASE("branch probabilities of a trace-preserving map sum to one") {
  const KrausMap map = random_local_instrument(2, 3, 3, 3, 17);
  const HermitianOperator s = random_state(2, 3, 18);
  double total = 0.0;
  for (const Branch& b : branch_outcomes(map, s, 0.0)) {
    total += b.probability;
    CHECK(b.state.trace() == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("local product maps preserve PPT inputs") {
  for (int t = 0; t < 20; ++t) {
    const KrausMap map = random_local_instrument(2, 2, 2, 2, 100 + t);
    const HermitianOperator s = random_separable(2, 2, 0, 200 + t);
    for (const Branch& b : branch_outcomes(map, s)) {
      CHECK(min_eigenvalue(b.state.partial_transpose()) >= -1e-9);
    }
  }
}

TEST_CASE("werner to isotropic conversion reproduces the parameter relation") {
  const int d = 3;
  const double mu = 6.0 / 7;
  const HermitianOperator out = normalize_state(werner_to_iso(werner(d, mu).state));
  const double eta = pairing(out, max_entangled(d));
  CHECK(eta == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(eta == doctest::Approx(iso_eta_from_werner_mu(d, mu)).epsilon(1e-12));
  CHECK((out - isotropic(d, eta).state).frobenius_norm() < 1e-10);

  // Round trip preserves the werner parameter.
  const HermitianOperator back = normalize_state(iso_to_werner(out));
  CHECK(pairing(back, antisymmetric_projector(d)) == doctest::Approx(mu).epsilon(1e-9));
}

TEST_CASE("parameter relation across d") {
  for (int d = 2; d <= 4; ++d)
    for (double eta : {0.4, 0.6, 0.85}) {
      const double mu = werner_mu_from_iso_eta(d, eta);
      CHECK(iso_eta_from_werner_mu(d, mu) == doctest::Approx(eta).epsilon(1e-12));
    }
}

TEST_CASE("twirls") {
  const HermitianOperator iso = isotropic(2, 0.6).state;
  CHECK((twirl_to_isotropic(iso) - iso).frobenius_norm() < 1e-10);  // fixed point
  CHECK((twirl_to_isotropic(max_entangled(2)) - isotropic(2, 1.0).state).frobenius_norm() <
        1e-10);
  // The mu = 1 Werner state is orthogonal to P2+, so it lands on eta = 0.
  CHECK((twirl_to_isotropic(werner(2, 1.0).state) - isotropic(2, 0.0).state).frobenius_norm() <
        1e-10);

  const HermitianOperator s = random_state(2, 3, 23);
  CHECK((twirl_full(s) - (1.0 / 6) * HermitianOperator::identity(2, 3)).frobenius_norm() < 1e-12);
}

TEST_CASE("monotonicity harness mechanics and invariance-safe maps") {
  MonotoneConfig cfg;
  cfg.solver.restarts = 12;
  const HermitianOperator s = random_state(2, 2, 31);

  // Local unitaries leave the program value invariant; depolarizing lands on
  // a separable state, so neither can raise the monotone.
  const KrausMap ua = random_local_instrument(2, 2, 1, 1, 33);  // single-branch unitary pair
  std::vector<NamedMap> maps = {as_named(ua), as_named(depolarize_map(2, 2))};
  const HarnessReport rep = monotonicity_harness(s, maps, MonotoneKind::m1, cfg);
  REQUIRE(rep.rows.size() >= 2);
  CHECK(rep.max_violation <= 1e-3);
  for (const HarnessRow& row : rep.rows) {
    CHECK(row.probability > 1e-6);
    CHECK(row.delta == doctest::Approx(row.m_out - row.m_in));
    CHECK(row.m_in == doctest::Approx(rep.m_in));
    // Every depolarizing branch lands on a basis product state.
    if (row.map_id == "depolarize") CHECK(row.m_out <= 1e-6);
  }
  CHECK(std::abs(rep.rows[0].delta) <= 1e-3);  // local unitary branch: invariant

  // Branches below the probability floor are skipped.
  KrausMap faint;
  faint.id = "faint_filter";
  CMatrix tiny(4, 4);
  tiny(0, 0) = 1e-5;
  faint.terms = {tiny};
  faint.in_dim_a = faint.out_dim_a = 2;
  faint.in_dim_b = faint.out_dim_b = 2;
  CHECK(branch_outcomes(faint, s).empty());
}

TEST_CASE("bell-diagonal formula value caps safe-map branches") {
  MonotoneConfig cfg;
  cfg.solver.restarts = 12;
  const std::array<double, 4> p{0.6, 0.2, 0.15, 0.05};
  const HermitianOperator s = bell_diagonal(p).state;
  const double formula = m1_bell_closed_form(p);
  const std::vector<NamedMap> maps = {as_named(random_local_instrument(2, 2, 1, 1, 51)),
                                      as_named(depolarize_map(2, 2))};
  const HarnessReport rep = monotonicity_harness(s, maps, MonotoneKind::m1, cfg);
  CHECK(rep.m_in == doctest::Approx(formula).epsilon(1e-3));
  for (const HarnessRow& row : rep.rows) CHECK(row.m_out <= formula + 1e-3);
}

TEST_CASE("harness treats the conversion pair as reversible") {
  MonotoneConfig cfg;
  cfg.solver.restarts = 12;
  const HermitianOperator w = werner(3, 6.0 / 7).state;
  const std::vector<NamedMap> maps = {named_conversion("werner_to_iso", werner_to_iso)};
  const HarnessReport rep = monotonicity_harness(w, maps, MonotoneKind::m1, cfg);
  REQUIRE(rep.rows.size() == 1);
  CHECK(std::abs(rep.rows[0].delta) <= 1e-3);  // reversible, equality
}
