#include "entmono/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace entmono {

namespace {

double offdiag_norm(const CMatrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

}  // namespace

Spectrum jacobi_eig(const CMatrix& h, const EigOptions& opt) {
  if (!h.square()) throw std::invalid_argument("jacobi_eig: matrix must be square");
  const int n = h.rows();
  CMatrix a = h;
  a.symmetrize();
  CMatrix v = CMatrix::identity(n);

  const double fro = std::max(a.frobenius_norm(), 1e-300);
  const double stop = opt.tol * fro;
  const double skip = 1e-3 * stop / std::max(1, n);

  int sweep = 0;
  double prev_off = std::numeric_limits<double>::infinity();
  for (; sweep < opt.max_sweeps; ++sweep) {
    const double off = offdiag_norm(a);
    if (off <= stop) break;
    if (off >= 0.9 * prev_off) break;  // round-off floor reached
    prev_off = off;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double beta = std::abs(apq);
        if (beta <= skip) continue;
        const cplx phase = apq / beta;

        // 2x2 Schur rotation (Golub & Van Loan), phased for the complex case.
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * beta);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;             // right-multiply coefficient
        const cplx spc = s * std::conj(phase);

        // Columns p, q of A and V: col_p' = c*col_p - s*conj(phase)*col_q,
        // col_q' = s*col_p + c*conj(phase)*col_q.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - spc * akq;
          a(k, q) = s * akp + c * std::conj(phase) * akq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - spc * vkq;
          v(k, q) = s * vkp + c * std::conj(phase) * vkq;
        }
        // Rows p, q of A: row_p' = c*row_p - s*phase*row_q, row_q' = s*row_p + c*phase*row_q.
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
      }
    }
  }

  const double res = offdiag_norm(a);
  if (res > 1e4 * stop)
    throw EigFailure("jacobi_eig: no convergence after " + std::to_string(opt.max_sweeps) +
                         " sweeps, off-diagonal residual " + std::to_string(res),
                     res);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  Spectrum sp;
  sp.eigenvalues.resize(n);
  sp.eigenvectors = CMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    sp.eigenvalues[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) sp.eigenvectors(r, k) = v(r, order[k]);
  }
  return sp;
}

Spectrum hermitian_eig(const HermitianOperator& h, const EigOptions& opt) {
  return jacobi_eig(h.matrix(), opt);
}

double min_eigenvalue(const HermitianOperator& h) {
  return hermitian_eig(h).eigenvalues.back();
}

double max_eigenvalue(const HermitianOperator& h) {
  return hermitian_eig(h).eigenvalues.front();
}

namespace {

// Reassemble sum_k w(lambda_k) v_k v_k^dagger.
HermitianOperator filter_spectrum(const HermitianOperator& h, const Spectrum& sp,
                                  double (*weight)(double)) {
  const int n = h.dim();
  CMatrix r(n, n);
  for (int k = 0; k < n; ++k) {
    const double w = weight(sp.eigenvalues[k]);
    if (w == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const cplx vik = sp.eigenvectors(i, k);
      if (vik == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) r(i, j) += w * vik * std::conj(sp.eigenvectors(j, k));
    }
  }
  r.symmetrize();
  return HermitianOperator(h.dim_a(), h.dim_b(), std::move(r), 1e-9);
}

}  // namespace

HermitianOperator psd_part(const HermitianOperator& h) {
  const Spectrum sp = hermitian_eig(h);
  return filter_spectrum(h, sp, [](double l) { return l > 0.0 ? l : 0.0; });
}

HermitianOperator neg_part(const HermitianOperator& h) {
  const Spectrum sp = hermitian_eig(h);
  return filter_spectrum(h, sp, [](double l) { return l < 0.0 ? -l : 0.0; });
}

JordanPair jordan_split(const HermitianOperator& h) {
  const Spectrum sp = hermitian_eig(h);
  JordanPair jp{
      filter_spectrum(h, sp, [](double l) { return l > kJordanZeroTol ? l : 0.0; }),
      filter_spectrum(h, sp, [](double l) { return l < -kJordanZeroTol ? -l : 0.0; })};
  return jp;
}

void require_state(const HermitianOperator& sigma, double tol) {
  if (std::abs(sigma.trace() - 1.0) > tol)
    throw std::invalid_argument("expected a normalized state, trace = " +
                                std::to_string(sigma.trace()));
  const double lmin = min_eigenvalue(sigma);
  if (lmin < -tol)
    throw std::invalid_argument("expected a PSD state, min eigenvalue = " + std::to_string(lmin));
}

double negativity(const HermitianOperator& sigma, double state_tol) {
  require_state(sigma, state_tol);
  const JordanPair jp = jordan_split(sigma.partial_transpose());
  return 0.5 * (jp.positive_part.trace() + jp.negative_part.trace() - 1.0);
}

}  // namespace entmono
