/* Strong-monotone computations. Every value is reported as a bracket [lo, hi]
 * with verifiable certificates at both ends: a cone decomposition certifies
 * the upper end, a PPT (or product) witness certifies the lower end through
 * the exact crossing point of its affine violation. Feasibility tolerance is
 * never allowed to masquerade as precision. */

#ifndef ENTMONO_MONOTONES_HPP
#define ENTMONO_MONOTONES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entmono/cones.hpp"
#include "entmono/operator.hpp"

namespace entmono {

enum class MonotoneKind { m1, m1_sep, m1_primal, m2_ppt_lower, m2_sep_upper, r_g_ppt };

std::string kind_name(MonotoneKind k);
std::optional<MonotoneKind> kind_from_name(const std::string& name);

struct MonotoneConfig {
  double x_tol = 1e-4;
  SolverConfig solver{};
};

struct MonotoneDiagnostics {
  int probes = 0;
  int member_probes = 0;
  int nonmember_probes = 0;
  int undecided_probes = 0;
  long iterations = 0;
};

struct MonotoneResult {
  MonotoneKind kind = MonotoneKind::m1;
  double lo = 0.0;
  double hi = 1.0;
  bool heuristic = false;            // some subproblem decided only heuristically
  bool undecided_band = false;       // bracket limited by undecided subproblems
  bool infeasible_dictionary = false;
  // r_g_ppt only: certified lower bound lo/(1+lo) on the monotone chain.
  double robustness_bound = 0.0;

  std::optional<Decomposition> upper_certificate;   // at x = hi
  std::optional<HermitianOperator> witness;         // PPT witness behind lo
  std::optional<HermitianOperator> primal_point;    // A, sigma_minus or sigma_plus

  MonotoneDiagnostics diag;

  double value() const { return 0.5 * (lo + hi); }
};

// Minimal x such that sigma - (1-x) Gamma(P) is decomposable, P the positive
// Jordan part of Gamma(sigma). Scale invariant; inputs with Gamma(sigma) >= 0
// short-circuit to zero before any solver runs.
MonotoneResult m1(const HermitianOperator& sigma, const MonotoneConfig& cfg = {});

// Same program over the 1-positive cone. Exact when dim_a*dim_b <= 6; beyond
// that membership rests on see-saw non-violation and the result is flagged
// heuristic (a missed violation can only shrink the reported x).
MonotoneResult m1_sep(const HermitianOperator& sigma, const MonotoneConfig& cfg = {});

// max tr(Gamma(Q) A) over A >= 0, Gamma(A) >= 0, tr(Gamma(P) A) = 1 by
// projected ascent; any feasible A certifies, so the result is a true lower
// bound and serves as the duality cross-check against m1.
MonotoneResult m1_primal(const HermitianOperator& sigma, const MonotoneConfig& cfg = {});

// (m1(sigma0 + lambda Gamma(P0)), m1(sigma0)/(1+lambda)) for comparison.
std::pair<double, double> m1_scaling_check(const HermitianOperator& sigma0, double lambda,
                                           const MonotoneConfig& cfg = {});

// PPT-relaxed lower bound for the M2 family: lo is the certified robustness
// anchor r/(1+r), hi the best x with a verified dominating PPT decomposition.
MonotoneResult m2_ppt_lower(const HermitianOperator& sigma, const MonotoneConfig& cfg = {});

// Product-ansatz upper bound: sigma_plus restricted to the conic hull of a
// product-state dictionary, decomposability as the 1-positivity surrogate
// (exact for dim_a*dim_b <= 6, flagged heuristic beyond).
MonotoneResult m2_sep_upper(const HermitianOperator& sigma,
                            const std::vector<HermitianOperator>& dictionary,
                            const MonotoneConfig& cfg = {});

// Default dictionary: the computational product basis plus `haar_count`
// seeded Haar product projectors.
std::vector<HermitianOperator> product_dictionary(int dim_a, int dim_b, int haar_count,
                                                  uint64_t seed);

// PPT relaxation of the generalized robustness: min tr(sigma_minus) with
// sigma_minus >= 0 and Gamma(sigma + sigma_minus) >= 0. lo comes from the
// dual ascent (certified), hi from a verified feasible point.
MonotoneResult r_g_ppt(const HermitianOperator& sigma, const MonotoneConfig& cfg = {});

// (m1 value, N/(1+N)); the caller asserts the ordering.
std::pair<double, double> bound_check_negativity(const HermitianOperator& sigma,
                                                 const MonotoneConfig& cfg = {});

}  // namespace entmono

#endif
