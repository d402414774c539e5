/* Completely positive maps in Kraus form, the trace-functional conversions
 * between the Werner and isotropic families, twirls, and the harness that
 * checks monotone values never increase along stochastic branches. */

#ifndef ENTMONO_CHANNELS_HPP
#define ENTMONO_CHANNELS_HPP

#include <functional>
#include <string>
#include <vector>

#include "entmono/monotones.hpp"
#include "entmono/operator.hpp"

namespace entmono {

struct KrausMap {
  std::string id;
  std::vector<CMatrix> terms;  // each (out_a*out_b) x (in_a*in_b)
  int in_dim_a = 1, in_dim_b = 1;
  int out_dim_a = 1, out_dim_b = 1;
  bool local_product = false;        // each term factors as A_i (x) B_i
  bool trace_preserving = false;     // sum K^dagger K = I
  bool ppt_preserving_claimed = false;
};

// Enforces the flag invariants: completeness of the Kraus sum when
// trace_preserving, rank-1 realignment of every term when local_product.
void validate_kraus(const KrausMap& map, double tol = 1e-9);

// sum_i K_i sigma K_i^dagger on the output cut.
HermitianOperator apply(const KrausMap& map, const HermitianOperator& sigma);

struct Branch {
  int index = 0;
  double probability = 0.0;
  HermitianOperator state;  // normalized outcome
};

// Stochastic outcomes K_i sigma K_i^dagger / p_i with p_i above the floor;
// branches below it are numerically meaningless and skipped.
std::vector<Branch> branch_outcomes(const KrausMap& map, const HermitianOperator& sigma,
                                    double p_floor = 1e-6);

KrausMap identity_map(int dim_a, int dim_b);
KrausMap depolarize_map(int dim_a, int dim_b);  // everything to I/(dim_a*dim_b)
KrausMap local_unitary_map(const CMatrix& ua, const CMatrix& ub);
// Single-term filter (A (x) B), rescaled so K^dagger K <= I.
KrausMap local_filter_map(const CMatrix& a, const CMatrix& b);
// Product of independent local instruments {A_i (x) B_j} with
// sum A^dagger A = I and sum B^dagger B = I; one branch per side gives a
// Haar-ish local unitary.
KrausMap random_local_instrument(int dim_a, int dim_b, int branches_a, int branches_b,
                                 uint64_t seed);

// Trace non-preserving conversion functionals on a d (x) d cut:
//   werner -> iso:  (tr X P_A) P+ + (tr X P_S)(I - P+)/(d+1)
//   iso -> werner:  (tr X P+) P_A + (tr X (I - P+)) P_S/(d+1)
// Outputs are unnormalized by construction; normalize_state for states.
HermitianOperator werner_to_iso(const HermitianOperator& x);
HermitianOperator iso_to_werner(const HermitianOperator& x);

// U (x) U* twirl: isotropic(d, tr(sigma P+)) for a d (x) d state.
HermitianOperator twirl_to_isotropic(const HermitianOperator& sigma);
// Independent U (x) V twirl: maps every state to I/(dim_a*dim_b).
HermitianOperator twirl_full(const HermitianOperator& sigma);

HermitianOperator normalize_state(const HermitianOperator& h);

// A map presented to the harness: any function from a state to stochastic
// branches (Kraus maps and the named conversions both fit).
struct NamedMap {
  std::string id;
  std::function<std::vector<Branch>(const HermitianOperator&)> branches;
};

NamedMap as_named(const KrausMap& map, double p_floor = 1e-6);
NamedMap named_conversion(const std::string& id,
                          std::function<HermitianOperator(const HermitianOperator&)> fn);

struct HarnessRow {
  std::string map_id;
  int branch = 0;
  double probability = 0.0;
  double m_in = 0.0;
  double m_out = 0.0;
  double delta = 0.0;  // m_out - m_in; positive means a violation
};

struct HarnessReport {
  double m_in = 0.0;
  double max_violation = 0.0;  // max delta over rows (0 when no rows)
  std::vector<HarnessRow> rows;
};

HarnessReport monotonicity_harness(const HermitianOperator& sigma,
                                   const std::vector<NamedMap>& maps, MonotoneKind kind,
                                   const MonotoneConfig& cfg = {});

}  // namespace entmono

#endif
