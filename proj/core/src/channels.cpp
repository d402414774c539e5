#include "entmono/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "entmono/eig.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

namespace entmono {

namespace {

// K = A (x) B iff the realignment M[(ia,ja),(ib,jb)] = K[(ia,ib),(ja,jb)] is
// rank one.
bool term_factors(const CMatrix& k, int out_a, int out_b, int in_a, int in_b, double tol) {
  CMatrix m(out_a * in_a, out_b * in_b);
  for (int ia = 0; ia < out_a; ++ia)
    for (int ib = 0; ib < out_b; ++ib)
      for (int ja = 0; ja < in_a; ++ja)
        for (int jb = 0; jb < in_b; ++jb)
          m(ia * in_a + ja, ib * in_b + jb) = k(ia * out_b + ib, ja * in_b + jb);
  const CMatrix gram = m.adjoint() * m;
  Spectrum sp = jacobi_eig(gram);
  if (sp.eigenvalues.empty() || sp.eigenvalues[0] <= 0.0) return true;  // zero term
  // Eigenvalues of the gram matrix carry O(eps)*lambda_0 solver noise; only
  // components above that floor count against rank one.
  const double floor = 1e-13 * sp.eigenvalues[0];
  double rest = 0.0;
  for (size_t i = 1; i < sp.eigenvalues.size(); ++i)
    if (sp.eigenvalues[i] > floor) rest += sp.eigenvalues[i];
  return std::sqrt(rest) <= tol * std::sqrt(sp.eigenvalues[0]);
}

CMatrix inverse_sqrt(const CMatrix& s) {
  Spectrum sp = jacobi_eig(s);
  const int n = s.rows();
  CMatrix r(n, n);
  for (int k = 0; k < n; ++k) {
    if (sp.eigenvalues[k] <= 1e-12) continue;
    const double w = 1.0 / std::sqrt(sp.eigenvalues[k]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r(i, j) += w * sp.eigenvectors(i, k) * std::conj(sp.eigenvectors(j, k));
  }
  return r;
}

}  // namespace

void validate_kraus(const KrausMap& map, double tol) {
  if (map.terms.empty()) throw std::invalid_argument("KrausMap: no terms");
  const int in = map.in_dim_a * map.in_dim_b;
  const int out = map.out_dim_a * map.out_dim_b;
  for (const CMatrix& k : map.terms)
    if (k.rows() != out || k.cols() != in)
      throw std::invalid_argument("KrausMap: term shape mismatch");
  if (map.trace_preserving) {
    CMatrix s(in, in);
    for (const CMatrix& k : map.terms) s += k.adjoint() * k;
    s -= CMatrix::identity(in);
    if (s.max_abs() > tol)
      throw std::invalid_argument("KrausMap: trace_preserving flag violated, |sum K^dag K - I| = " +
                                  std::to_string(s.max_abs()));
  }
  if (map.local_product) {
    for (const CMatrix& k : map.terms)
      if (!term_factors(k, map.out_dim_a, map.out_dim_b, map.in_dim_a, map.in_dim_b, tol))
        throw std::invalid_argument("KrausMap: local_product flag violated");
  }
}

HermitianOperator apply(const KrausMap& map, const HermitianOperator& sigma) {
  if (sigma.dim_a() != map.in_dim_a || sigma.dim_b() != map.in_dim_b)
    throw std::invalid_argument("apply: input cut mismatch");
  CMatrix acc(map.out_dim_a * map.out_dim_b, map.out_dim_a * map.out_dim_b);
  for (const CMatrix& k : map.terms) acc += k * sigma.matrix() * k.adjoint();
  return HermitianOperator(map.out_dim_a, map.out_dim_b, std::move(acc), 1e-8);
}

std::vector<Branch> branch_outcomes(const KrausMap& map, const HermitianOperator& sigma,
                                    double p_floor) {
  std::vector<Branch> out;
  for (size_t i = 0; i < map.terms.size(); ++i) {
    const CMatrix& k = map.terms[i];
    CMatrix m = k * sigma.matrix() * k.adjoint();
    const double p = m.trace().real();
    if (p <= p_floor) continue;
    m *= cplx(1.0 / p, 0.0);
    out.push_back(Branch{static_cast<int>(i), p,
                         HermitianOperator(map.out_dim_a, map.out_dim_b, std::move(m), 1e-8)});
  }
  return out;
}

KrausMap identity_map(int dim_a, int dim_b) {
  KrausMap m;
  m.id = "identity";
  m.terms = {CMatrix::identity(dim_a * dim_b)};
  m.in_dim_a = m.out_dim_a = dim_a;
  m.in_dim_b = m.out_dim_b = dim_b;
  m.local_product = true;
  m.trace_preserving = true;
  m.ppt_preserving_claimed = true;
  return m;
}

KrausMap depolarize_map(int dim_a, int dim_b) {
  const int n = dim_a * dim_b;
  KrausMap m;
  m.id = "depolarize";
  m.in_dim_a = m.out_dim_a = dim_a;
  m.in_dim_b = m.out_dim_b = dim_b;
  const double w = 1.0 / std::sqrt(static_cast<double>(n));
  // |i><j| on the composite space factors as |ia><ja| (x) |ib><jb|.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMatrix k(n, n);
      k(i, j) = w;
      m.terms.push_back(std::move(k));
    }
  m.local_product = true;
  m.trace_preserving = true;
  m.ppt_preserving_claimed = true;
  return m;
}

KrausMap local_unitary_map(const CMatrix& ua, const CMatrix& ub) {
  KrausMap m;
  m.id = "local_unitary";
  m.in_dim_a = m.out_dim_a = ua.rows();
  m.in_dim_b = m.out_dim_b = ub.rows();
  m.terms = {kron(ua, ub)};
  m.local_product = true;
  m.trace_preserving = true;
  m.ppt_preserving_claimed = true;
  return m;
}

KrausMap local_filter_map(const CMatrix& a, const CMatrix& b) {
  KrausMap m;
  m.id = "local_filter";
  m.in_dim_a = a.cols();
  m.out_dim_a = a.rows();
  m.in_dim_b = b.cols();
  m.out_dim_b = b.rows();
  CMatrix k = kron(a, b);
  const CMatrix gram = k.adjoint() * k;
  const double lmax = jacobi_eig(gram).eigenvalues.front();
  if (lmax > 0.0) k *= cplx(1.0 / std::sqrt(lmax), 0.0);
  m.terms = {std::move(k)};
  m.local_product = true;
  m.trace_preserving = false;
  m.ppt_preserving_claimed = true;
  return m;
}

KrausMap random_local_instrument(int dim_a, int dim_b, int branches_a, int branches_b,
                                 uint64_t seed) {
  if (branches_a < 1 || branches_b < 1)
    throw std::invalid_argument("random_local_instrument: need at least one branch per side");
  Rng rng(seed);
  auto side = [&](int d, int count) {
    std::vector<CMatrix> raw;
    CMatrix s(d, d);
    for (int i = 0; i < count; ++i) {
      CMatrix g(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = rng.cgaussian();
      s += g.adjoint() * g;
      raw.push_back(std::move(g));
    }
    const CMatrix si = inverse_sqrt(s);
    for (auto& g : raw) g = g * si;  // sum G^dag G = I
    return raw;
  };
  const std::vector<CMatrix> as = side(dim_a, branches_a);
  const std::vector<CMatrix> bs = side(dim_b, branches_b);

  KrausMap m;
  m.id = "local_instrument";
  m.in_dim_a = m.out_dim_a = dim_a;
  m.in_dim_b = m.out_dim_b = dim_b;
  for (const CMatrix& a : as)
    for (const CMatrix& b : bs) m.terms.push_back(kron(a, b));
  m.local_product = true;
  m.trace_preserving = true;
  m.ppt_preserving_claimed = true;
  return m;
}

namespace {

void require_square_cut(const HermitianOperator& x, const char* who) {
  if (x.dim_a() != x.dim_b())
    throw std::invalid_argument(std::string(who) + ": requires a d (x) d cut");
}

}  // namespace

HermitianOperator werner_to_iso(const HermitianOperator& x) {
  require_square_cut(x, "werner_to_iso");
  const int d = x.dim_a();
  const double wa = pairing(x, antisymmetric_projector(d));
  const double ws = pairing(x, symmetric_projector(d));
  const HermitianOperator p = max_entangled(d);
  return wa * p + (ws / (d + 1.0)) * (HermitianOperator::identity(d, d) - p);
}

HermitianOperator iso_to_werner(const HermitianOperator& x) {
  require_square_cut(x, "iso_to_werner");
  const int d = x.dim_a();
  const HermitianOperator p = max_entangled(d);
  const double wp = pairing(x, p);
  const double wr = x.trace() - wp;
  return wp * antisymmetric_projector(d) + (wr / (d + 1.0)) * symmetric_projector(d);
}

HermitianOperator twirl_to_isotropic(const HermitianOperator& sigma) {
  require_square_cut(sigma, "twirl_to_isotropic");
  require_state(sigma);
  const int d = sigma.dim_a();
  const double eta = std::clamp(pairing(sigma, max_entangled(d)), 0.0, 1.0);
  return isotropic(d, eta).state;
}

HermitianOperator twirl_full(const HermitianOperator& sigma) {
  return (sigma.trace() / sigma.dim()) * HermitianOperator::identity(sigma.dim_a(), sigma.dim_b());
}

HermitianOperator normalize_state(const HermitianOperator& h) {
  const double t = h.trace();
  if (std::abs(t) < 1e-14) throw std::invalid_argument("normalize_state: trace is zero");
  return (1.0 / t) * h;
}

NamedMap as_named(const KrausMap& map, double p_floor) {
  return NamedMap{map.id, [map, p_floor](const HermitianOperator& s) {
                    return branch_outcomes(map, s, p_floor);
                  }};
}

NamedMap named_conversion(const std::string& id,
                          std::function<HermitianOperator(const HermitianOperator&)> fn) {
  return NamedMap{id, [fn](const HermitianOperator& s) {
                    std::vector<Branch> b;
                    b.push_back(Branch{0, 1.0, normalize_state(fn(s))});
                    return b;
                  }};
}

HarnessReport monotonicity_harness(const HermitianOperator& sigma,
                                   const std::vector<NamedMap>& maps, MonotoneKind kind,
                                   const MonotoneConfig& cfg) {
  auto evaluate = [&](const HermitianOperator& s) -> double {
    switch (kind) {
      case MonotoneKind::m1: return m1(s, cfg).value();
      case MonotoneKind::m1_sep: return m1_sep(s, cfg).value();
      default:
        throw std::invalid_argument("monotonicity_harness: kind must be m1 or m1_sep");
    }
  };

  HarnessReport rep;
  rep.m_in = evaluate(sigma);
  for (const NamedMap& map : maps) {
    for (const Branch& br : map.branches(sigma)) {
      HarnessRow row;
      row.map_id = map.id;
      row.branch = br.index;
      row.probability = br.probability;
      row.m_in = rep.m_in;
      row.m_out = evaluate(br.state);
      row.delta = row.m_out - row.m_in;
      rep.max_violation = rep.rows.empty() ? row.delta : std::max(rep.max_violation, row.delta);
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace entmono
