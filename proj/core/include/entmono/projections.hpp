/* Frobenius projections onto the cones and slices the solvers iterate over. */

#ifndef ENTMONO_PROJECTIONS_HPP
#define ENTMONO_PROJECTIONS_HPP

#include <functional>
#include <vector>

#include "entmono/eig.hpp"
#include "entmono/operator.hpp"

namespace entmono {

using Projection = std::function<HermitianOperator(const HermitianOperator&)>;

// Dykstra's cyclic scheme for the intersection of closed convex sets. Exact
// for affine members too (their corrections stay zero).
HermitianOperator dykstra(HermitianOperator x, const std::vector<Projection>& sets,
                          int iterations);

inline HermitianOperator project_psd(const HermitianOperator& h) { return psd_part(h); }

// Projection onto {H : Gamma(H) >= 0}.
HermitianOperator project_gamma_psd(const HermitianOperator& h);

// Projection onto the PPT cone {W >= 0, Gamma(W) >= 0} by Dykstra between the
// two spectral clips.
HermitianOperator project_ppt(const HermitianOperator& h, int iterations = 50);

// Projection onto the affine slice {X : tr(A X) = c}.
HermitianOperator project_pairing(const HermitianOperator& x, const HermitianOperator& a,
                                  double c);

// Alternating split of Z against the decomposable cone {X + Gamma(Y) : X,Y >= 0}.
// Each full step is one exact block-minimization of |Z - X - Gamma(Y)|_F^2:
//   X <- psd_part(Z - Gamma(Y));  Y <- psd_part(Gamma(Z - X)).
// On a decomposable Z the residual goes to zero and (X, Y) is a certificate;
// otherwise the residual converges to the (negated) nearest-point gap, whose
// direction separates Z from the cone.
class DecomposableSplit {
 public:
  DecomposableSplit(const HermitianOperator& z, const HermitianOperator* y_warm = nullptr);

  void iterate(int steps);

  // Aitken-style acceleration: extrapolate Y through a reference iterate and
  // keep the candidate only when it lowers the residual.
  void try_extrapolate(const HermitianOperator& y_ref, double beta);

  const HermitianOperator& z() const { return z_; }
  const HermitianOperator& x_part() const { return x_; }
  const HermitianOperator& y_part() const { return y_; }
  HermitianOperator residual() const;  // Z - X - Gamma(Y)
  double residual_norm() const { return residual_norm_; }
  int iterations() const { return iterations_; }

 private:
  HermitianOperator z_;
  HermitianOperator x_, y_;
  double residual_norm_;
  int iterations_ = 0;
};

}  // namespace entmono

#endif
