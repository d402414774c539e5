/* Membership tests for the three nested operator cones -- PSD, decomposable
 * {X + Gamma(Y) : X, Y >= 0}, and 1-positive (nonnegative on product vectors)
 * -- with verifiable certificates on both sides. Near the cone boundary the
 * feasibility problems are ill-conditioned, so `undecided` is a legal verdict
 * and surfaces in results. */

#ifndef ENTMONO_CONES_HPP
#define ENTMONO_CONES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "entmono/operator.hpp"
#include "entmono/projections.hpp"

namespace entmono {

struct SolverConfig {
  double feas_tol = 1e-7;
  int max_iters = 5000;
  int restarts = 64;        // see-saw multistarts
  uint64_t seed = 0;
  int grid_resolution = 48; // points per angle in the 2x2 brute-force oracle

  void validate() const;
};

enum class Membership { member, non_member, undecided };

struct ProductWitness {
  std::vector<cplx> e, f;
};

struct Decomposition {
  HermitianOperator x_part, y_part;  // Z = x_part + Gamma(y_part) up to residual
  double residual;
};

struct ConeVerdict {
  Membership status = Membership::undecided;
  // Signed margin: >= 0 means member by that margin; for non-members this is
  // the (negative) certified witness value tr(Z W).
  double gap = 0.0;
  std::optional<HermitianOperator> ppt_witness;  // normalized, tr W = 1
  std::optional<ProductWitness> product_witness;
  std::optional<Decomposition> decomposition;
  int iterations = 0;
  bool converged = false;
  bool heuristic = false;  // membership claimed only by see-saw non-violation
};

// Re-derives the witness value; used to enforce the certificate contracts.
double product_witness_value(const HermitianOperator& z, const ProductWitness& w);
bool verify_ppt_witness(const HermitianOperator& z, const HermitianOperator& w,
                        double* gap_out = nullptr, double psd_tol = 1e-9);
bool verify_decomposition(const HermitianOperator& z, const Decomposition& d, double feas_tol,
                          double psd_tol = 1e-9);

struct SeeSawResult {
  double value = 0.0;
  std::vector<cplx> e, f;
  int iterations = 0;
};

// Multistart alternating minimization of <ef|Z|ef>: fixing one side makes the
// objective a small Hermitian form whose minimal eigenvector is the exact
// update for the other. Restart 0 always starts from (|0>,|0>); the rest are
// seeded from the config RNG. Objective values after each half-step can be
// captured through `half_step_trace`.
SeeSawResult see_saw_product_min(const HermitianOperator& z, const SolverConfig& cfg,
                                 const ProductWitness* warm = nullptr,
                                 std::vector<double>* half_step_trace = nullptr);

ConeVerdict is_psd(const HermitianOperator& z);
ConeVerdict is_decomposable(const HermitianOperator& z, const SolverConfig& cfg = {});
ConeVerdict is_block_positive(const HermitianOperator& z, const SolverConfig& cfg = {});

// Sorts descending and checks a2 + a3 >= 0: the exact decomposability (and
// 1-positivity) condition for operators diagonal in the phased Bell basis.
bool bell_diag_check(const std::array<double, 4>& a);

// Brute-force minimum of <ef|Z|ef> over a Bloch-angle product grid; ground
// truth for 2x2 tests, accurate to O(grid spacing^2).
double product_grid_oracle_2x2(const HermitianOperator& z, int resolution = 48);

// Reusable tester carrying warm starts across a family of nearby inputs
// (bisection steps reuse the previous certificate).
class ConeOracle {
 public:
  explicit ConeOracle(SolverConfig cfg);

  // iter_budget caps the alternating-split iterations for this call only
  // (0 = the config default); callers escalate it across retries.
  ConeVerdict decomposable(const HermitianOperator& z, int iter_budget = 0);
  ConeVerdict block_positive(const HermitianOperator& z, int iter_budget = 0);

  // Størmer–Woronowicz regime: 1-positivity and decomposability coincide.
  static bool exact_block_positivity_dim(int dim_a, int dim_b) { return dim_a * dim_b <= 6; }

 private:
  ConeVerdict decomposable_impl(const HermitianOperator& z, bool quick_seesaw, int iter_budget);
  bool seesaw_already_clean(const HermitianOperator& z) const;
  void remember_clean_seesaw(const HermitianOperator& z, double value);

  SolverConfig cfg_;
  std::optional<HermitianOperator> warm_y_;
  std::optional<ProductWitness> warm_pw_;
  // Budget-escalation retries re-test the same operator; remember when the
  // see-saw already came back clean so retries go straight to the split.
  std::optional<HermitianOperator> clean_z_;
  double clean_value_ = 0.0;
};

}  // namespace entmono

#endif
