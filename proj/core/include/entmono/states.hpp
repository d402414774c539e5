/* Constructors for the named state families and the random fixtures used by
 * the property suites. All constructors are pure; randomness is an explicit
 * seed. */

#ifndef ENTMONO_STATES_HPP
#define ENTMONO_STATES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "entmono/operator.hpp"

namespace entmono {

// Phased Bell basis on C^2 (x) C^2:
//   e0 = i|psi->, e1 = |psi+>, e2 = |phi->, e3 = i|phi+>
// with |phi+-> = (|00> +- |11>)/sqrt2, |psi+-> = (|01> +- |10>)/sqrt2.
// In these phases conjugation composed with sigma_y (x) sigma_y fixes every
// basis vector, which is what makes the product-state expansion argument work.
struct BellBasis {
  std::array<std::vector<cplx>, 4> vectors;
  static BellBasis standard();
};

struct ConstructedState {
  HermitianOperator state;
  bool entangled;
};

// |phi_d+><phi_d+| with |phi_d+> = (1/sqrt d) sum_i |ii>.
HermitianOperator max_entangled(int d);

HermitianOperator symmetric_projector(int d);      // (I + SWAP)/2
HermitianOperator antisymmetric_projector(int d);  // (I - SWAP)/2

// eta P+ + (1-eta)(I-P+)/(d^2-1); entangled iff eta > 1/d.
ConstructedState isotropic(int d, double eta);

// mu * P_A/tr(P_A) + (1-mu) * P_S/tr(P_S); entangled iff mu > 1/2.
// Each projector term is normalized explicitly so the state has unit trace.
ConstructedState werner(int d, double mu);

// sum_i p_i |e_i><e_i| over the phased Bell basis; entangled iff max p > 1/2.
ConstructedState bell_diagonal(const std::array<double, 4>& p);

// Same construction for arbitrary real coefficients (an operator, not a state).
HermitianOperator bell_diagonal_operator(const std::array<double, 4>& a);

// |psi><psi| with |psi> = sum_i sqrt(c_i) |ii>.
HermitianOperator pure_schmidt(const std::vector<double>& coeffs);

// Convex mixture of Haar-random product projectors; separable by construction.
// terms <= 0 selects the default (dA*dB)^2 mixture.
HermitianOperator random_separable(int dim_a, int dim_b, int terms, uint64_t seed);

// Normalized Wishart-random density matrix (full rank almost surely).
HermitianOperator random_state(int dim_a, int dim_b, uint64_t seed);

// Haar-random pure state projector.
HermitianOperator random_pure(int dim_a, int dim_b, uint64_t seed);

}  // namespace entmono

#endif
