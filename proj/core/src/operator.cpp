#include "entmono/operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace entmono {

HermitianOperator::HermitianOperator(int dim_a, int dim_b)
    : da_(dim_a), db_(dim_b), m_(dim_a * dim_b, dim_a * dim_b), herm_dev_(0.0) {
  if (dim_a < 1 || dim_b < 1) throw std::invalid_argument("HermitianOperator: dimensions must be positive");
}

HermitianOperator::HermitianOperator(int dim_a, int dim_b, CMatrix m, double tol)
    : da_(dim_a), db_(dim_b), m_(std::move(m)) {
  if (dim_a < 1 || dim_b < 1) throw std::invalid_argument("HermitianOperator: dimensions must be positive");
  if (m_.rows() != dim_a * dim_b || m_.cols() != dim_a * dim_b)
    throw std::invalid_argument("HermitianOperator: matrix side must equal dim_a*dim_b");
  herm_dev_ = m_.hermiticity_deviation();
  if (herm_dev_ > tol)
    throw std::invalid_argument("HermitianOperator: hermiticity deviation " +
                                std::to_string(herm_dev_) + " exceeds tolerance");
  m_.symmetrize();
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  HermitianOperator r = *this;
  r += o;
  return r;
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  HermitianOperator r = *this;
  r -= o;
  return r;
}

HermitianOperator HermitianOperator::operator-() const {
  return HermitianOperator(da_, db_, -m_, Unchecked{});
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(da_, db_, s * m_, Unchecked{});
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  if (da_ != o.da_ || db_ != o.db_)
    throw std::invalid_argument("HermitianOperator: bipartite cut mismatch in +=");
  m_ += o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
  if (da_ != o.da_ || db_ != o.db_)
    throw std::invalid_argument("HermitianOperator: bipartite cut mismatch in -=");
  m_ -= o.m_;
  return *this;
}

HermitianOperator HermitianOperator::partial_transpose() const {
  CMatrix r(dim(), dim());
  for (int i = 0; i < da_; ++i)
    for (int ip = 0; ip < da_; ++ip)
      for (int j = 0; j < db_; ++j)
        for (int jp = 0; jp < db_; ++jp)
          r(index(i, j), index(ip, jp)) = m_(index(i, jp), index(ip, j));
  return HermitianOperator(da_, db_, std::move(r), Unchecked{});
}

CMatrix HermitianOperator::trace_out_b() const {
  CMatrix r(da_, da_);
  for (int i = 0; i < da_; ++i)
    for (int ip = 0; ip < da_; ++ip)
      for (int j = 0; j < db_; ++j) r(i, ip) += m_(index(i, j), index(ip, j));
  return r;
}

CMatrix HermitianOperator::trace_out_a() const {
  CMatrix r(db_, db_);
  for (int j = 0; j < db_; ++j)
    for (int jp = 0; jp < db_; ++jp)
      for (int i = 0; i < da_; ++i) r(j, jp) += m_(index(i, j), index(i, jp));
  return r;
}

HermitianOperator HermitianOperator::tensor(const HermitianOperator& o) const {
  const int da = da_ * o.da_, db = db_ * o.db_;
  CMatrix r(da * db, da * db);
  for (int i1 = 0; i1 < da_; ++i1)
    for (int j1 = 0; j1 < db_; ++j1)
      for (int i1p = 0; i1p < da_; ++i1p)
        for (int j1p = 0; j1p < db_; ++j1p) {
          const cplx v1 = m_(index(i1, j1), index(i1p, j1p));
          if (v1 == cplx(0.0)) continue;
          for (int i2 = 0; i2 < o.da_; ++i2)
            for (int j2 = 0; j2 < o.db_; ++j2)
              for (int i2p = 0; i2p < o.da_; ++i2p)
                for (int j2p = 0; j2p < o.db_; ++j2p) {
                  const cplx v2 = o.m_(o.index(i2, j2), o.index(i2p, j2p));
                  if (v2 == cplx(0.0)) continue;
                  const int row = (i1 * o.da_ + i2) * db + (j1 * o.db_ + j2);
                  const int col = (i1p * o.da_ + i2p) * db + (j1p * o.db_ + j2p);
                  r(row, col) = v1 * v2;
                }
        }
  return HermitianOperator(da, db, std::move(r), Unchecked{});
}

HermitianOperator HermitianOperator::tensor_power(int n, int dim_cap) const {
  if (n < 1) throw std::invalid_argument("tensor_power: n must be positive");
  double total = 1.0;
  for (int k = 0; k < n; ++k) total *= dim();
  if (total > dim_cap)
    throw std::length_error("tensor_power: total dimension " + std::to_string(static_cast<long>(total)) +
                            " exceeds cap " + std::to_string(dim_cap));
  HermitianOperator r = *this;
  for (int k = 1; k < n; ++k) r = r.tensor(*this);
  return r;
}

double HermitianOperator::product_expectation(const std::vector<cplx>& e,
                                              const std::vector<cplx>& f) const {
  std::vector<cplx> v(dim());
  for (int i = 0; i < da_; ++i)
    for (int j = 0; j < db_; ++j) v[index(i, j)] = e[i] * f[j];
  return expectation(v);
}

double HermitianOperator::expectation(const std::vector<cplx>& v) const {
  return sandwich(v, m_, v).real();
}

CMatrix HermitianOperator::compress_b(const std::vector<cplx>& f) const {
  CMatrix r(da_, da_);
  for (int i = 0; i < da_; ++i)
    for (int ip = 0; ip < da_; ++ip) {
      cplx s = 0.0;
      for (int j = 0; j < db_; ++j)
        for (int jp = 0; jp < db_; ++jp)
          s += std::conj(f[j]) * m_(index(i, j), index(ip, jp)) * f[jp];
      r(i, ip) = s;
    }
  return r;
}

CMatrix HermitianOperator::compress_a(const std::vector<cplx>& e) const {
  CMatrix r(db_, db_);
  for (int j = 0; j < db_; ++j)
    for (int jp = 0; jp < db_; ++jp) {
      cplx s = 0.0;
      for (int i = 0; i < da_; ++i)
        for (int ip = 0; ip < da_; ++ip)
          s += std::conj(e[i]) * m_(index(i, j), index(ip, jp)) * e[ip];
      r(j, jp) = s;
    }
  return r;
}

HermitianOperator HermitianOperator::identity(int dim_a, int dim_b) {
  HermitianOperator h(dim_a, dim_b);
  return HermitianOperator(dim_a, dim_b, CMatrix::identity(dim_a * dim_b), Unchecked{});
}

HermitianOperator HermitianOperator::swap_operator(int d) {
  CMatrix r(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r(i * d + j, j * d + i) = 1.0;
  return HermitianOperator(d, d, std::move(r), Unchecked{});
}

HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

double pairing(const HermitianOperator& a, const HermitianOperator& b) {
  // Both arguments Hermitian, so tr(A B) = <A, B>_HS is real.
  return hs_inner(a.matrix(), b.matrix()).real();
}

HermitianOperator conjugate_by(const CMatrix& k, const HermitianOperator& h, int out_dim_a,
                               int out_dim_b) {
  if (k.cols() != h.dim() || k.rows() != out_dim_a * out_dim_b)
    throw std::invalid_argument("conjugate_by: shape mismatch");
  CMatrix r = k * h.matrix() * k.adjoint();
  return HermitianOperator(out_dim_a, out_dim_b, std::move(r), 1e-9);
}

HermitianOperator projector(int dim_a, int dim_b, const std::vector<cplx>& v) {
  if (static_cast<int>(v.size()) != dim_a * dim_b)
    throw std::invalid_argument("projector: vector length must equal dim_a*dim_b");
  CMatrix r(v.size(), v.size());
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r(i, j) = v[i] * std::conj(v[j]);
  return HermitianOperator(dim_a, dim_b, std::move(r));
}

HermitianOperator product_projector(const std::vector<cplx>& e, const std::vector<cplx>& f) {
  const int da = static_cast<int>(e.size()), db = static_cast<int>(f.size());
  std::vector<cplx> v(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) v[i * db + j] = e[i] * f[j];
  return projector(da, db, v);
}

}  // namespace entmono
