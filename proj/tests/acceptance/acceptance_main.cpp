/* Acceptance suite: every criterion prints one PASS/FAIL line with its worst
 * margin and wall time; the process exits nonzero when any criterion fails. */

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "entmono/channels.hpp"
#include "entmono/closed_forms.hpp"
#include "entmono/cones.hpp"
#include "entmono/eig.hpp"
#include "entmono/monotones.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

using namespace entmono;

namespace {

int g_failures = 0;
using clock_type = std::chrono::steady_clock;

void report(int criterion, const std::string& what, bool pass, double margin, double seconds) {
  std::printf("%s criterion %2d: %s (worst %.3g, %.1f s)\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), margin, seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

struct Timer {
  clock_type::time_point start = clock_type::now();
  double elapsed() const { return std::chrono::duration<double>(clock_type::now() - start).count(); }
};

MonotoneConfig config() {
  MonotoneConfig cfg;  // spec defaults: x_tol 1e-4, feas_tol 1e-7, 64 restarts
  return cfg;
}

// ---------------------------------------------------------------------------

void criterion_1_isotropic() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = 0.0;
  for (int d : {2, 3}) {
    for (int k = 1; k <= 10; ++k) {
      const double eta = 1.0 / d + (k / 10.0) * (1.0 - 1.0 / d);
      const double got = m1(isotropic(d, eta).state, cfg).value();
      worst = std::max(worst, std::abs(got - m1_isotropic_closed_form(d, eta)));
    }
  }
  report(1, "isotropic closed form, d in {2,3}, 10-point eta grids", worst <= 1e-3, worst,
         t.elapsed());
}

void criterion_2_werner() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = 0.0;
  for (int d : {2, 3}) {
    for (int k = 1; k <= 10; ++k) {
      const double mu = 0.5 + 0.05 * k;
      const double got = m1(werner(d, mu).state, cfg).value();
      worst = std::max(worst, std::abs(got - m1_werner_closed_form(d, mu)));
    }
  }
  report(2, "werner closed form, d in {2,3}, 10-point mu grids", worst <= 1e-3, worst,
         t.elapsed());
}

void criterion_3_bell() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = 0.0;
  Rng rng(303);
  int points = 0;
  while (points < 50) {
    const std::vector<double> q = rng.simplex(4);
    std::array<double, 4> p{q[0], q[1], q[2], q[3]};
    std::sort(p.begin(), p.end(), std::greater<double>());
    if (p[0] <= 0.5) continue;
    ++points;
    const double got = m1(bell_diagonal(p).state, cfg).value();
    worst = std::max(worst, std::abs(got - m1_bell_closed_form(p)));
  }

  // Lemma agreement sweep on 1000 coefficient vectors.
  int disagreements = 0, tested = 0;
  Rng crng(304);
  ConeOracle oracle(cfg.solver);
  for (int k = 0; k < 1000; ++k) {
    std::array<double, 4> a;
    for (double& x : a) x = 2.0 * crng.uniform() - 1.0;
    std::array<double, 4> s = a;
    std::sort(s.begin(), s.end(), std::greater<double>());
    if (std::abs(s[2] + s[3]) <= 1e-6) continue;
    ++tested;
    const bool expected = bell_diag_check(a);
    const HermitianOperator z = bell_diagonal_operator(a);
    const bool dec = oracle.decomposable(z).status == Membership::member;
    const bool bp = is_block_positive(z, cfg.solver).status == Membership::member;
    if (dec != expected || bp != expected) ++disagreements;
  }
  const bool pass = worst <= 1e-3 && disagreements == 0;
  report(3,
         "bell closed form on 50 points; fast-path agreement on " + std::to_string(tested) +
             " operators (" + std::to_string(disagreements) + " disagree)",
         pass, worst, t.elapsed());
}

void criterion_4_separable_zeroing() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const HermitianOperator s = random_separable(2, (k % 2) ? 3 : 2, 0, 400 + k);
    worst = std::max(worst, m1(s, cfg).value());
    worst = std::max(worst, m1_sep(s, cfg).value());
    worst = std::max(worst, m1_primal(s, cfg).value());
    worst = std::max(worst, m2_ppt_lower(s, cfg).value());
    worst = std::max(worst, m2_sep_upper(s, {}, cfg).value());
    worst = std::max(worst, r_g_ppt(s, cfg).value());
  }
  report(4, "all monotones vanish on 100 random separable states", worst <= 1e-6, worst,
         t.elapsed());
}

void criterion_5_pure_saturation() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = 1.0;
  worst = std::min(worst, m1(max_entangled(2), cfg).value());
  worst = std::min(worst, m1(max_entangled(3), cfg).value());
  int found = 0;
  for (uint64_t seed = 0; found < 20; ++seed) {
    const HermitianOperator psi = random_pure(2, 2, 500 + seed);
    if (negativity(psi) <= 1e-3) continue;  // essentially product; skip
    ++found;
    worst = std::min(worst, m1(psi, cfg).value());
  }
  worst = std::min(worst, m1(bell_diagonal({0.7, 0.3, 0.0, 0.0}).state, cfg).value());
  report(5, "m1 = 1 on pure entangled states and the rank-2 bell mixture", worst >= 1.0 - 1e-3,
         worst, t.elapsed());
}

void criterion_6_bound_chains() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const HermitianOperator s = random_state(2, (k % 2) ? 3 : 2, 600 + k);
    const double n = negativity(s);
    const double msep = m1_sep(s, cfg).value();
    const double mm = m1(s, cfg).value();
    worst = std::max(worst, n / (1.0 + n) - msep);
    worst = std::max(worst, msep - mm);
  }
  double worst2 = 0.0;
  for (int k = 0; k < 100; ++k) {
    const HermitianOperator s = random_state(2, 2, 6600 + k);
    const MonotoneResult rg = r_g_ppt(s, cfg);
    const MonotoneResult up = m2_sep_upper(s, {}, cfg);
    worst2 = std::max(worst2, rg.robustness_bound - up.value());
  }
  const bool pass = worst <= 2e-3 && worst2 <= 2e-3;
  report(6, "bound chains: negativity on 200 states, robustness on 100 states", pass,
         std::max(worst, worst2), t.elapsed());
}

void criterion_7_duality() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const HermitianOperator s = random_state(2, 2, 700 + k);
    worst = std::max(worst, std::abs(m1(s, cfg).value() - m1_primal(s, cfg).value()));
  }
  report(7, "duality gap |m1 - m1_primal| on 50 two-qubit states", worst <= 5e-3, worst,
         t.elapsed());
}

void criterion_8_conversion() {
  Timer t;
  const MonotoneConfig cfg = config();
  const double target = 10.0 / 13;
  const double mw = m1(werner(3, 6.0 / 7).state, cfg).value();
  const double mi = m1(isotropic(3, 0.75).state, cfg).value();
  double worst = std::max(std::abs(mw - target), std::abs(mi - target));

  // The conversion pair reproduces mu = (d-1) eta / ((d-2) eta + 1).
  double relation = 0.0;
  for (int d : {2, 3}) {
    for (double mu : {0.6, 6.0 / 7, 0.95}) {
      const HermitianOperator iso = normalize_state(werner_to_iso(werner(d, mu).state));
      const double eta = pairing(iso, max_entangled(d));
      relation = std::max(relation, std::abs(mu - werner_mu_from_iso_eta(d, eta)));
      const HermitianOperator back = normalize_state(iso_to_werner(iso));
      relation = std::max(relation, std::abs(pairing(back, antisymmetric_projector(d)) - mu));
    }
  }
  const bool pass = worst <= 1e-3 && relation <= 1e-9;
  report(8, "conversion invariance at m1 = 10/13 and the mu-eta relation", pass,
         std::max(worst, relation), t.elapsed());
}

void criterion_9_strong_monotonicity() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = -1.0;
  int branches = 0;
  for (uint64_t k = 0; branches < 100; ++k) {
    const HermitianOperator s = random_state(2, 2, 900 + k);
    const std::vector<NamedMap> maps = {as_named(random_local_instrument(2, 2, 2, 2, 9900 + k))};
    const HarnessReport rep = monotonicity_harness(s, maps, MonotoneKind::m1, cfg);
    branches += static_cast<int>(rep.rows.size());
    worst = std::max(worst, rep.max_violation);
  }
  report(9,
         "strong monotonicity of m1 across " + std::to_string(branches) + " stochastic branches",
         worst <= 1e-3, worst, t.elapsed());
}

void criterion_10_scaling() {
  Timer t;
  const MonotoneConfig cfg = config();
  double worst = 0.0;
  Rng rng(1001);
  for (int k = 0; k < 20; ++k) {
    const HermitianOperator s0 = random_state(2, 2, 1000 + k);
    const double lambda = 2.0 * rng.uniform();
    const auto [lhs, rhs] = m1_scaling_check(s0, lambda, cfg);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  report(10, "scaling law on 20 random (state, lambda) pairs", worst <= 2e-3, worst, t.elapsed());
}

void criterion_11_robustness_anchor() {
  Timer t;
  const MonotoneConfig cfg = config();
  const HermitianOperator p2 = max_entangled(2);
  const MonotoneResult r = r_g_ppt(p2, cfg);
  const double dev = std::abs(r.value() - 1.0);

  // The explicit feasible point (I - P2+)/3 certifies r <= 1.
  const HermitianOperator sm = (1.0 / 3) * (HermitianOperator::identity(2, 2) - p2);
  const bool feasible = min_eigenvalue(sm) >= -1e-12 &&
                        min_eigenvalue((p2 + sm).partial_transpose()) >= -1e-9 &&
                        std::abs(sm.trace() - 1.0) <= 1e-12;
  report(11, "r_g_ppt anchor at the maximally entangled pair", dev <= 1e-4 && feasible, dev,
         t.elapsed());
}

void criterion_12_two_copy() {
  Timer t;
  const MonotoneConfig cfg = config();
  const HermitianOperator iso = isotropic(2, 0.75).state;
  const double got = m1(iso.tensor(iso), cfg).value();
  report(12, "two-copy isotropic m1 under the grouped cut", got >= 0.6 - 2e-3, got, t.elapsed());
}

}  // namespace

int main() {
  criterion_1_isotropic();
  criterion_2_werner();
  criterion_3_bell();
  criterion_4_separable_zeroing();
  criterion_5_pure_saturation();
  criterion_6_bound_chains();
  criterion_7_duality();
  criterion_8_conversion();
  criterion_9_strong_monotonicity();
  criterion_10_scaling();
  criterion_11_robustness_anchor();
  criterion_12_two_copy();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
