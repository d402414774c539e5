/* Dense complex matrices: the storage layer under every operator in this library. */

#ifndef ENTMONO_MATRIX_HPP
#define ENTMONO_MATRIX_HPP

#include <complex>
#include <vector>

namespace entmono {

using cplx = std::complex<double>;

// Row-major dense complex matrix. Sized for desk-scale problems (side <= ~40);
// everything is O(n^3) without blocking and that is fine here.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  CMatrix(int rows, int cols, std::vector<cplx> entries);

  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);
  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator-() const;
  CMatrix operator*(const CMatrix& o) const;  // matrix product
  std::vector<cplx> operator*(const std::vector<cplx>& v) const;

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  // Largest |A - A^dagger| entry over 2; zero for exactly Hermitian matrices.
  double hermiticity_deviation() const;
  void symmetrize();  // A <- (A + A^dagger)/2

  bool same_shape(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  int rows_, cols_;
  std::vector<cplx> a_;
};

CMatrix operator*(cplx s, const CMatrix& m);
CMatrix operator*(double s, const CMatrix& m);

// Hilbert-Schmidt inner product tr(A^dagger B).
cplx hs_inner(const CMatrix& a, const CMatrix& b);

// Kronecker product, row-major composite index (i_a, i_b) -> i_a * b.rows + i_b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// <u|A|v> for column vectors u, v.
cplx sandwich(const std::vector<cplx>& u, const CMatrix& a, const std::vector<cplx>& v);

double vec_norm(const std::vector<cplx>& v);
void vec_normalize(std::vector<cplx>& v);

}  // namespace entmono

#endif
