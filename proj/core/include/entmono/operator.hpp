/* Hermitian operator algebra on a bipartite tensor space.
 *
 * Composite index convention, shared by every module and by the file format:
 * the basis vector |i>_A (x) |j>_B sits at composite index k = i * dim_b + j.
 * The partial transpose below transposes subsystem B and is only correct in
 * this convention.
 */

#ifndef ENTMONO_OPERATOR_HPP
#define ENTMONO_OPERATOR_HPP

#include <vector>

#include "entmono/matrix.hpp"

namespace entmono {

inline constexpr double kHermiticityTol = 1e-10;
inline constexpr int kDimensionCap = 36;  // total dimension dim_a * dim_b

class HermitianOperator {
 public:
  HermitianOperator() : da_(1), db_(1), m_(1, 1), herm_dev_(0.0) {}
  HermitianOperator(int dim_a, int dim_b);  // zero operator

  // Symmetrizes the input to (M + M^dagger)/2, records the deviation, and
  // rejects matrices farther than `tol` from Hermitian.
  HermitianOperator(int dim_a, int dim_b, CMatrix m, double tol = kHermiticityTol);

  int dim_a() const { return da_; }
  int dim_b() const { return db_; }
  int dim() const { return da_ * db_; }
  int index(int i, int j) const { return i * db_ + j; }

  const CMatrix& matrix() const { return m_; }
  const cplx& entry(int k, int l) const { return m_(k, l); }
  double hermiticity_deviation() const { return herm_dev_; }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator-() const;
  HermitianOperator operator*(double s) const;
  HermitianOperator& operator+=(const HermitianOperator& o);
  HermitianOperator& operator-=(const HermitianOperator& o);

  double trace() const { return m_.trace().real(); }
  double frobenius_norm() const { return m_.frobenius_norm(); }

  // Transpose on subsystem B: out[(i,j),(i',j')] = in[(i,j'),(i',j)].
  HermitianOperator partial_transpose() const;

  CMatrix trace_out_b() const;  // dim_a x dim_a
  CMatrix trace_out_a() const;  // dim_b x dim_b

  // Tensor product with the bipartite cut preserved: A-parts grouped as one
  // subsystem, B-parts as the other.
  HermitianOperator tensor(const HermitianOperator& o) const;
  HermitianOperator tensor_power(int n, int dim_cap = kDimensionCap) const;

  // <e (x) f| H |e (x) f> for local vectors e (dim_a) and f (dim_b).
  double product_expectation(const std::vector<cplx>& e, const std::vector<cplx>& f) const;
  double expectation(const std::vector<cplx>& v) const;

  // Compressions used by the product-vector see-saw.
  CMatrix compress_b(const std::vector<cplx>& f) const;  // (I (x) <f|) H (I (x) |f>)
  CMatrix compress_a(const std::vector<cplx>& e) const;  // (<e| (x) I) H (|e> (x) I)

  static HermitianOperator identity(int dim_a, int dim_b);
  static HermitianOperator swap_operator(int d);  // on C^d (x) C^d

 private:
  struct Unchecked {};
  HermitianOperator(int dim_a, int dim_b, CMatrix m, Unchecked)
      : da_(dim_a), db_(dim_b), m_(std::move(m)), herm_dev_(0.0) {}

  int da_, db_;
  CMatrix m_;
  double herm_dev_;
};

HermitianOperator operator*(double s, const HermitianOperator& h);

// Real Hilbert-Schmidt pairing tr(A B) of two Hermitian operators.
double pairing(const HermitianOperator& a, const HermitianOperator& b);

// K H K^dagger wrapped back into the given bipartite cut.
HermitianOperator conjugate_by(const CMatrix& k, const HermitianOperator& h, int out_dim_a,
                               int out_dim_b);

// Rank-1 projector |v><v| on the given cut.
HermitianOperator projector(int dim_a, int dim_b, const std::vector<cplx>& v);
HermitianOperator product_projector(const std::vector<cplx>& e, const std::vector<cplx>& f);

}  // namespace entmono

#endif
