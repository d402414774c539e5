#include "entmono/projections.hpp"

namespace entmono {

HermitianOperator dykstra(HermitianOperator x, const std::vector<Projection>& sets,
                          int iterations) {
  std::vector<HermitianOperator> corr(sets.size(), HermitianOperator(x.dim_a(), x.dim_b()));
  for (int it = 0; it < iterations; ++it) {
    for (size_t s = 0; s < sets.size(); ++s) {
      const HermitianOperator input = x + corr[s];
      x = sets[s](input);
      corr[s] = input - x;
    }
  }
  return x;
}

HermitianOperator project_gamma_psd(const HermitianOperator& h) {
  return psd_part(h.partial_transpose()).partial_transpose();
}

HermitianOperator project_ppt(const HermitianOperator& h, int iterations) {
  return dykstra(h, {project_psd, project_gamma_psd}, iterations);
}

HermitianOperator project_pairing(const HermitianOperator& x, const HermitianOperator& a,
                                  double c) {
  const double n2 = a.frobenius_norm() * a.frobenius_norm();
  if (n2 <= 0.0) return x;
  return x + ((c - pairing(a, x)) / n2) * a;
}

DecomposableSplit::DecomposableSplit(const HermitianOperator& z, const HermitianOperator* y_warm)
    : z_(z),
      x_(z.dim_a(), z.dim_b()),
      y_(y_warm ? *y_warm : psd_part(z.partial_transpose())) {
  x_ = psd_part(z_ - y_.partial_transpose());
  residual_norm_ = (z_ - x_ - y_.partial_transpose()).frobenius_norm();
}

HermitianOperator DecomposableSplit::residual() const {
  return z_ - x_ - y_.partial_transpose();
}

void DecomposableSplit::iterate(int steps) {
  for (int k = 0; k < steps; ++k) {
    y_ = psd_part((z_ - x_).partial_transpose());
    x_ = psd_part(z_ - y_.partial_transpose());
    ++iterations_;
  }
  residual_norm_ = (z_ - x_ - y_.partial_transpose()).frobenius_norm();
}

void DecomposableSplit::try_extrapolate(const HermitianOperator& y_ref, double beta) {
  const HermitianOperator y_cand = psd_part(y_ + beta * (y_ - y_ref));
  const HermitianOperator x_cand = psd_part(z_ - y_cand.partial_transpose());
  const double r_cand = (z_ - x_cand - y_cand.partial_transpose()).frobenius_norm();
  if (r_cand < residual_norm_) {
    y_ = y_cand;
    x_ = x_cand;
    residual_norm_ = r_cand;
  }
}

}  // namespace entmono
