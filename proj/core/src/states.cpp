#include "entmono/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entmono/rng.hpp"

namespace entmono {

namespace {

const cplx kI(0.0, 1.0);

void require_simplex(const std::vector<double>& p, double tol = 1e-12) {
  double sum = 0.0;
  for (double x : p) {
    if (x < -tol) throw std::invalid_argument("simplex point has a negative weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol)
    throw std::invalid_argument("simplex weights sum to " + std::to_string(sum) + ", expected 1");
}

}  // namespace

BellBasis BellBasis::standard() {
  const double r = 1.0 / std::sqrt(2.0);
  BellBasis b;
  b.vectors[0] = {0.0, kI * r, -kI * r, 0.0};  // i|psi->
  b.vectors[1] = {0.0, r, r, 0.0};             // |psi+>
  b.vectors[2] = {r, 0.0, 0.0, -r};            // |phi->
  b.vectors[3] = {kI * r, 0.0, 0.0, kI * r};   // i|phi+>
  return b;
}

HermitianOperator max_entangled(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled: d must be >= 2");
  std::vector<cplx> v(d * d, cplx(0.0));
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v[i * d + i] = a;
  return projector(d, d, v);
}

HermitianOperator symmetric_projector(int d) {
  if (d < 2) throw std::invalid_argument("symmetric_projector: d must be >= 2");
  return 0.5 * (HermitianOperator::identity(d, d) + HermitianOperator::swap_operator(d));
}

HermitianOperator antisymmetric_projector(int d) {
  if (d < 2) throw std::invalid_argument("antisymmetric_projector: d must be >= 2");
  return 0.5 * (HermitianOperator::identity(d, d) - HermitianOperator::swap_operator(d));
}

ConstructedState isotropic(int d, double eta) {
  if (d < 2) throw std::invalid_argument("isotropic: d must be >= 2");
  if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("isotropic: eta must lie in [0,1]");
  const HermitianOperator p = max_entangled(d);
  const HermitianOperator rest = HermitianOperator::identity(d, d) - p;
  return {eta * p + ((1.0 - eta) / (d * d - 1.0)) * rest, eta > 1.0 / d};
}

ConstructedState werner(int d, double mu) {
  if (d < 2) throw std::invalid_argument("werner: d must be >= 2");
  if (mu < 0.0 || mu > 1.0) throw std::invalid_argument("werner: mu must lie in [0,1]");
  const HermitianOperator pa = antisymmetric_projector(d);
  const HermitianOperator ps = symmetric_projector(d);
  return {(mu / pa.trace()) * pa + ((1.0 - mu) / ps.trace()) * ps, mu > 0.5};
}

HermitianOperator bell_diagonal_operator(const std::array<double, 4>& a) {
  const BellBasis b = BellBasis::standard();
  HermitianOperator z(2, 2);
  for (int i = 0; i < 4; ++i) {
    if (a[i] == 0.0) continue;
    z += a[i] * projector(2, 2, b.vectors[i]);
  }
  return z;
}

ConstructedState bell_diagonal(const std::array<double, 4>& p) {
  require_simplex({p.begin(), p.end()});
  double pmax = 0.0;
  for (double x : p) pmax = std::max(pmax, x);
  return {bell_diagonal_operator(p), pmax > 0.5};
}

HermitianOperator pure_schmidt(const std::vector<double>& coeffs) {
  require_simplex(coeffs);
  const int d = static_cast<int>(coeffs.size());
  if (d < 1) throw std::invalid_argument("pure_schmidt: need at least one coefficient");
  std::vector<cplx> v(d * d, cplx(0.0));
  for (int i = 0; i < d; ++i) v[i * d + i] = std::sqrt(std::max(0.0, coeffs[i]));
  return projector(d, d, v);
}

HermitianOperator random_separable(int dim_a, int dim_b, int terms, uint64_t seed) {
  if (terms <= 0) terms = (dim_a * dim_b) * (dim_a * dim_b);
  Rng rng(seed);
  const std::vector<double> w = rng.simplex(terms);
  HermitianOperator s(dim_a, dim_b);
  for (int t = 0; t < terms; ++t) {
    const auto e = rng.haar_vector(dim_a);
    const auto f = rng.haar_vector(dim_b);
    s += w[t] * product_projector(e, f);
  }
  return s;
}

HermitianOperator random_state(int dim_a, int dim_b, uint64_t seed) {
  Rng rng(seed);
  const int n = dim_a * dim_b;
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
  CMatrix w = g * g.adjoint();
  w *= cplx(1.0 / w.trace().real(), 0.0);
  return HermitianOperator(dim_a, dim_b, std::move(w), 1e-9);
}

HermitianOperator random_pure(int dim_a, int dim_b, uint64_t seed) {
  Rng rng(seed);
  return projector(dim_a, dim_b, rng.haar_vector(dim_a * dim_b));
}

}  // namespace entmono
