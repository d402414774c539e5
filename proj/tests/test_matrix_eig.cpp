#include <doctest.h>

#include <cmath>

#include "entmono/eig.hpp"
#include "entmono/matrix.hpp"
#include "entmono/operator.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

using namespace entmono;

namespace {

CMatrix random_hermitian(int n, Rng& rng) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.cgaussian();
  m.symmetrize();
  return m;
}

double reconstruction_residual(const CMatrix& h, const Spectrum& sp) {
  const int n = h.rows();
  CMatrix rec(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        rec(i, j) += sp.eigenvalues[k] * sp.eigenvectors(i, k) * std::conj(sp.eigenvectors(j, k));
  return (h - rec).frobenius_norm();
}

}  // namespace

TEST_CASE("jacobi on diagonal and small fixed matrices") {
  CMatrix d(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  Spectrum sp = jacobi_eig(d);
  CHECK(sp.eigenvalues[0] == doctest::Approx(3.0));
  CHECK(sp.eigenvalues[1] == doctest::Approx(1.0));

  // Rank-1 projector: spectrum {1, 0, 0, 0}.
  sp = hermitian_eig(max_entangled(2));
  CHECK(sp.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(sp.eigenvalues[k]) < 1e-12);

  // SWAP on 2x2: {1, 1, 1, -1}.
  sp = hermitian_eig(HermitianOperator::swap_operator(2));
  CHECK(sp.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(sp.eigenvalues[2] == doctest::Approx(1.0));
  CHECK(sp.eigenvalues[3] == doctest::Approx(-1.0));
}

TEST_CASE("spectrum reconstruction holds for 1000 random matrices up to side 16") {
  Rng rng(20240901);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng.raw() % 15);  // 2..16
    const CMatrix h = random_hermitian(n, rng);
    const Spectrum sp = jacobi_eig(h);
    const double scale = std::max(1e-300, h.frobenius_norm());
    CHECK(reconstruction_residual(h, sp) <= 1e-9 * scale);
    // Orthonormal columns.
    const CMatrix vtv = sp.eigenvectors.adjoint() * sp.eigenvectors;
    CHECK((vtv - CMatrix::identity(n)).max_abs() <= 1e-10);
    // Descending order.
    for (size_t k = 1; k < sp.eigenvalues.size(); ++k)
      CHECK(sp.eigenvalues[k - 1] >= sp.eigenvalues[k]);
  }
}

TEST_CASE("partial transpose of the maximally entangled projector") {
  const HermitianOperator g = max_entangled(2).partial_transpose();
  const Spectrum sp = hermitian_eig(g);
  CHECK(sp.eigenvalues[0] == doctest::Approx(0.5));
  CHECK(sp.eigenvalues[1] == doctest::Approx(0.5));
  CHECK(sp.eigenvalues[2] == doctest::Approx(0.5));
  CHECK(sp.eigenvalues[3] == doctest::Approx(-0.5));
}

TEST_CASE("jordan split basics") {
  // PSD input: (H, 0).
  const HermitianOperator h = max_entangled(3);
  JordanPair jp = jordan_split(h);
  CHECK((jp.positive_part - h).frobenius_norm() < 1e-12);
  CHECK(jp.negative_part.frobenius_norm() < 1e-12);

  // diag(1, -2) on a 1x2 cut.
  CMatrix d(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -2.0;
  jp = jordan_split(HermitianOperator(1, 2, d));
  CHECK(jp.positive_part.entry(0, 0).real() == doctest::Approx(1.0));
  CHECK(jp.negative_part.entry(1, 1).real() == doctest::Approx(2.0));

  // Gamma(P2+): tr P = 3/2, tr Q = 1/2.
  jp = jordan_split(max_entangled(2).partial_transpose());
  CHECK(jp.positive_part.trace() == doctest::Approx(1.5));
  CHECK(jp.negative_part.trace() == doctest::Approx(0.5));
}

TEST_CASE("jordan split invariants on random operators") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const int da = 2, db = 2 + static_cast<int>(rng.raw() % 2);
    HermitianOperator h(da, db, random_hermitian(da * db, rng));
    const JordanPair jp = jordan_split(h);
    CHECK(min_eigenvalue(jp.positive_part) >= -1e-9);
    CHECK(min_eigenvalue(jp.negative_part) >= -1e-9);
    CHECK((jp.positive_part.matrix() * jp.negative_part.matrix()).max_abs() < 1e-9);
    CHECK((jp.positive_part - jp.negative_part - h).frobenius_norm() < 1e-9);
    // tr P - tr Q = tr H.
    CHECK(jp.positive_part.trace() - jp.negative_part.trace() ==
          doctest::Approx(h.trace()).epsilon(1e-9));
  }
}

TEST_CASE("negativity closed forms") {
  CHECK(negativity(max_entangled(2)) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(negativity(max_entangled(3)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(negativity(isotropic(2, 0.75).state) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(negativity(random_separable(2, 2, 0, 42)) == doctest::Approx(0.0).epsilon(1e-9));

  // Zero exactly on PPT inputs.
  Rng rng(99);
  for (int t = 0; t < 25; ++t) {
    const HermitianOperator s = random_separable(2, 3, 0, rng.raw());
    CHECK(min_eigenvalue(s.partial_transpose()) >= -1e-9);
    CHECK(negativity(s) <= 1e-9);
  }
}

TEST_CASE("negativity rejects non-states") {
  CHECK_THROWS_AS(negativity(2.0 * max_entangled(2)), std::invalid_argument);
  CMatrix d(2, 2);
  d(0, 0) = 1.5;
  d(1, 1) = -0.5;
  CHECK_THROWS_AS(negativity(HermitianOperator(1, 2, d)), std::invalid_argument);
}

TEST_CASE("psd and negative parts reassemble the input") {
  Rng rng(3);
  const CMatrix h = random_hermitian(6, rng);
  HermitianOperator op(2, 3, h);
  const HermitianOperator pos = psd_part(op), neg = neg_part(op);
  CHECK((pos - neg - op).frobenius_norm() < 1e-10);
  CHECK(min_eigenvalue(pos) >= -1e-12);
  CHECK(min_eigenvalue(neg) >= -1e-12);
}
