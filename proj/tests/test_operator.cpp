#include <doctest.h>

#include <cmath>

#include "entmono/eig.hpp"
#include "entmono/operator.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

using namespace entmono;

namespace {

HermitianOperator random_op(int da, int db, Rng& rng) {
  const int n = da * db;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.cgaussian();
  m.symmetrize();
  return HermitianOperator(da, db, std::move(m));
}

}  // namespace

TEST_CASE("partial transpose is a linear involution preserving trace and norm") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const HermitianOperator h = random_op(2, 3, rng);
    const HermitianOperator g = random_op(2, 3, rng);
    CHECK((h.partial_transpose().partial_transpose() - h).frobenius_norm() < 1e-14);
    const HermitianOperator lin = (h + 2.0 * g).partial_transpose() -
                                  (h.partial_transpose() + 2.0 * g.partial_transpose());
    CHECK(lin.frobenius_norm() < 1e-12);
    CHECK(h.partial_transpose().trace() == doctest::Approx(h.trace()).epsilon(1e-12));
    CHECK(h.partial_transpose().frobenius_norm() ==
          doctest::Approx(h.frobenius_norm()).epsilon(1e-12));
  }
}

TEST_CASE("partial transpose of a product operator transposes the B factor") {
  Rng rng(13);
  const HermitianOperator rho = random_op(2, 1, rng);   // acts on A only
  const HermitianOperator tau = random_op(1, 3, rng);   // acts on B only
  const HermitianOperator prod = rho.tensor(tau);       // 2 (x) 3
  const HermitianOperator pt = prod.partial_transpose();
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip)
      for (int j = 0; j < 3; ++j)
        for (int jp = 0; jp < 3; ++jp) {
          const cplx want = rho.entry(i, ip) * tau.entry(jp, j);  // tau transposed
          CHECK(std::abs(pt.entry(prod.index(i, j), prod.index(ip, jp)) - want) < 1e-12);
        }
}

TEST_CASE("partial traces agree with direct sums") {
  Rng rng(17);
  const HermitianOperator h = random_op(2, 3, rng);
  const CMatrix ta = h.trace_out_b();
  const CMatrix tb = h.trace_out_a();
  CHECK(ta.trace().real() == doctest::Approx(h.trace()).epsilon(1e-12));
  CHECK(tb.trace().real() == doctest::Approx(h.trace()).epsilon(1e-12));
  cplx s = 0.0;
  for (int j = 0; j < 3; ++j) s += h.entry(h.index(0, j), h.index(1, j));
  CHECK(std::abs(ta(0, 1) - s) < 1e-12);
}

TEST_CASE("grouped tensor power") {
  const HermitianOperator p = max_entangled(2);
  CHECK((p.tensor_power(1) - p).frobenius_norm() < 1e-14);

  Rng rng(23);
  const HermitianOperator s = random_op(2, 2, rng);
  CHECK(s.tensor_power(2).trace() == doctest::Approx(s.trace() * s.trace()).epsilon(1e-10));

  // Trace-norm multiplicativity across the grouped cut.
  CHECK(negativity(p.tensor(p)) == doctest::Approx(1.5).epsilon(1e-9));

  CHECK_THROWS_AS(p.tensor_power(3), std::length_error);  // 64 > cap
}

TEST_CASE("tensor keeps the bipartite cut") {
  const HermitianOperator p = max_entangled(2);
  const HermitianOperator pp = p.tensor(p);
  CHECK(pp.dim_a() == 4);
  CHECK(pp.dim_b() == 4);
  // Purity survives the reshuffle.
  const Spectrum sp = hermitian_eig(pp);
  CHECK(sp.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("product expectation matches compressions") {
  Rng rng(29);
  const HermitianOperator h = random_op(2, 3, rng);
  const auto e = rng.haar_vector(2);
  const auto f = rng.haar_vector(3);
  const double direct = h.product_expectation(e, f);
  CHECK(sandwich(e, h.compress_b(f), e).real() == doctest::Approx(direct).epsilon(1e-12));
  CHECK(sandwich(f, h.compress_a(e), f).real() == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("hermiticity is enforced at construction") {
  CMatrix m(2, 2);
  m(0, 1) = cplx(0.0, 1.0);
  m(1, 0) = cplx(0.0, 1.0);  // not the conjugate
  CHECK_THROWS_AS(HermitianOperator(1, 2, m), std::invalid_argument);

  // Mild deviation is symmetrized and reported.
  CMatrix ok(2, 2);
  ok(0, 1) = cplx(0.5, 1e-11);
  ok(1, 0) = cplx(0.5, 1e-11);
  const HermitianOperator h(1, 2, ok);
  CHECK(h.hermiticity_deviation() <= 1e-10);
  CHECK(h.hermiticity_deviation() > 0.0);
  CHECK(std::abs(h.entry(0, 1) - std::conj(h.entry(1, 0))) == 0.0);
}

TEST_CASE("dimension bookkeeping errors") {
  CHECK_THROWS_AS(HermitianOperator(2, 2, CMatrix(3, 3)), std::invalid_argument);
  const HermitianOperator a(2, 2), b(2, 3);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}
