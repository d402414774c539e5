/* Cyclic Jacobi eigensolver for dense Hermitian matrices, plus the spectral
 * helpers built on it: positive/negative parts, Jordan split, negativity.
 *
 * Jacobi is chosen over faster factorizations because it is unconditionally
 * stable at these sizes and bit-reproducible across runs.
 */

#ifndef ENTMONO_EIG_HPP
#define ENTMONO_EIG_HPP

#include <stdexcept>
#include <vector>

#include "entmono/matrix.hpp"
#include "entmono/operator.hpp"

namespace entmono {

struct Spectrum {
  std::vector<double> eigenvalues;  // sorted descending
  CMatrix eigenvectors;             // unitary, column k pairs with eigenvalues[k]
};

struct EigOptions {
  int max_sweeps = 100;
  double tol = 1e-14;  // relative off-diagonal norm target
};

class EigFailure : public std::runtime_error {
 public:
  EigFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

Spectrum jacobi_eig(const CMatrix& h, const EigOptions& opt = {});
Spectrum hermitian_eig(const HermitianOperator& h, const EigOptions& opt = {});

double min_eigenvalue(const HermitianOperator& h);
double max_eigenvalue(const HermitianOperator& h);

// Spectral clip: keep eigenvalues above `floor` (default 0), zero the rest.
HermitianOperator psd_part(const HermitianOperator& h);
// -(negative part): PSD, h = psd_part(h) - neg_part(h).
HermitianOperator neg_part(const HermitianOperator& h);

// Orthogonal split H = P - Q with P, Q >= 0 and PQ = 0. Eigenvalues within
// 1e-12 of zero are assigned to P with weight zero, so Q is strictly
// positive-weighted and P is the unique orthogonal positive part.
struct JordanPair {
  HermitianOperator positive_part;
  HermitianOperator negative_part;
};

inline constexpr double kJordanZeroTol = 1e-12;

JordanPair jordan_split(const HermitianOperator& h);

// (tr|sigma^Gamma| - 1)/2 for a state sigma (PSD, trace 1 within `state_tol`).
double negativity(const HermitianOperator& sigma, double state_tol = 1e-8);

// Throws std::invalid_argument unless sigma is PSD and trace-1 within tol.
void require_state(const HermitianOperator& sigma, double tol = 1e-8);

}  // namespace entmono

#endif
