#include "entmono/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace entmono {

CMatrix::CMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("CMatrix: entry count does not match shape");
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (!same_shape(o)) throw std::invalid_argument("CMatrix: shape mismatch in +=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (!same_shape(o)) throw std::invalid_argument("CMatrix: shape mismatch in -=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  CMatrix r = *this;
  r += o;
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  CMatrix r = *this;
  r -= o;
  return r;
}

CMatrix CMatrix::operator-() const {
  CMatrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CMatrix: shape mismatch in *");
  CMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  }
  return r;
}

std::vector<cplx> CMatrix::operator*(const std::vector<cplx>& v) const {
  if (cols_ != static_cast<int>(v.size()))
    throw std::invalid_argument("CMatrix: shape mismatch in mat*vec");
  std::vector<cplx> r(rows_, cplx(0.0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMatrix CMatrix::conj() const {
  CMatrix r = *this;
  for (auto& x : r.a_) x = std::conj(x);
  return r;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double CMatrix::hermiticity_deviation() const {
  if (!square()) return max_abs();
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      m = std::max(m, 0.5 * std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

void CMatrix::symmetrize() {
  for (int i = 0; i < rows_; ++i) {
    (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
    for (int j = i + 1; j < cols_; ++j) {
      const cplx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      (*this)(i, j) = v;
      (*this)(j, i) = std::conj(v);
    }
  }
}

CMatrix operator*(cplx s, const CMatrix& m) {
  CMatrix r = m;
  r *= s;
  return r;
}

CMatrix operator*(double s, const CMatrix& m) { return cplx(s, 0.0) * m; }

cplx hs_inner(const CMatrix& a, const CMatrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("hs_inner: shape mismatch");
  cplx s = 0.0;
  const auto& av = a.data();
  const auto& bv = b.data();
  for (size_t i = 0; i < av.size(); ++i) s += std::conj(av[i]) * bv[i];
  return s;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const cplx av = a(ia, ja);
      if (av == cplx(0.0)) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          r(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
    }
  return r;
}

cplx sandwich(const std::vector<cplx>& u, const CMatrix& a, const std::vector<cplx>& v) {
  if (a.rows() != static_cast<int>(u.size()) || a.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("sandwich: shape mismatch");
  cplx s = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    cplx row = 0.0;
    for (int j = 0; j < a.cols(); ++j) row += a(i, j) * v[j];
    s += std::conj(u[i]) * row;
  }
  return s;
}

double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

void vec_normalize(std::vector<cplx>& v) {
  const double n = vec_norm(v);
  if (n > 0.0)
    for (auto& x : v) x /= n;
}

}  // namespace entmono
