#include "entmono/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entmono/eig.hpp"
#include "entmono/projections.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

namespace entmono {

namespace {

constexpr double kCertTol = 1e-9;
constexpr double kPptShortCircuitTol = 1e-9;

}  // namespace

std::string kind_name(MonotoneKind k) {
  switch (k) {
    case MonotoneKind::m1: return "m1";
    case MonotoneKind::m1_sep: return "m1_sep";
    case MonotoneKind::m1_primal: return "m1_primal";
    case MonotoneKind::m2_ppt_lower: return "m2_ppt_lower";
    case MonotoneKind::m2_sep_upper: return "m2_sep_upper";
    case MonotoneKind::r_g_ppt: return "r_g_ppt";
  }
  return "unknown";
}

std::optional<MonotoneKind> kind_from_name(const std::string& name) {
  for (MonotoneKind k : {MonotoneKind::m1, MonotoneKind::m1_sep, MonotoneKind::m1_primal,
                         MonotoneKind::m2_ppt_lower, MonotoneKind::m2_sep_upper,
                         MonotoneKind::r_g_ppt}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

// Shared m1/m1_sep engine: bisection on x with Z(x) = sigma - (1-x) Gamma(P),
// valid because the feasible-x set is upward closed. Certificates tighten the
// bracket beyond the probed points:
//  - a witness W fixes the exact crossing x_W = 1 - tr(sigma W)/tr(Gamma(P) W)
//    of its affine violation, so lo jumps to x_W;
//  - a decomposition (X, Y) with spectral margin stays valid down to
//    x - min(lmin(X)/lmax(Gamma(P)), lmin(Y)/lmax(P)), so hi drops below the
//    probe for free.
void validate_config(const MonotoneConfig& cfg) {
  if (cfg.x_tol <= 0.0) throw std::invalid_argument("MonotoneConfig: x_tol must be positive");
  cfg.solver.validate();
}

MonotoneResult m1_engine(const HermitianOperator& sigma_in, const MonotoneConfig& cfg,
                         bool block_positive_oracle) {
  MonotoneResult res;
  res.kind = block_positive_oracle ? MonotoneKind::m1_sep : MonotoneKind::m1;
  validate_config(cfg);

  const double scale = sigma_in.frobenius_norm();
  if (scale <= 0.0) {
    res.lo = res.hi = 0.0;
    return res;
  }
  // Result is scale invariant; normalizing keeps the absolute tolerances
  // meaningful for unnormalized inputs.
  const HermitianOperator sigma = (1.0 / scale) * sigma_in;

  const HermitianOperator gs = sigma.partial_transpose();
  if (min_eigenvalue(gs) >= -kPptShortCircuitTol) {
    res.lo = res.hi = 0.0;
    return res;
  }

  const JordanPair jp = jordan_split(gs);
  const HermitianOperator& p = jp.positive_part;
  const HermitianOperator gp = p.partial_transpose();
  const double lmax_p = max_eigenvalue(p);
  const double lmax_gp = max_eigenvalue(gp);

  const bool exact_regime =
      !block_positive_oracle || ConeOracle::exact_block_positivity_dim(sigma.dim_a(), sigma.dim_b());

  ConeOracle oracle(cfg.solver);
  auto z_at = [&](double x) { return sigma - (1.0 - x) * gp; };
  auto probe = [&](double x, int budget) {
    return block_positive_oracle ? oracle.block_positive(z_at(x), budget)
                                 : oracle.decomposable(z_at(x), budget);
  };

  double lo = 0.0, hi = 1.0;

  // x = 1 must be feasible (Z(1) = sigma); anything else is outside the
  // monotone's domain.
  {
    ConeVerdict v1 = probe(1.0, 0);
    res.diag.iterations += v1.iterations;
    if (v1.status == Membership::non_member)
      throw std::invalid_argument("m1: input is not decomposable at x = 1");
    if (v1.status == Membership::member) {
      if (v1.decomposition) res.upper_certificate = v1.decomposition;
      res.heuristic = res.heuristic || v1.heuristic;
    } else {
      res.undecided_band = true;
    }
  }

  // Hard instances sit just above the feasibility boundary, so exploratory
  // probes run on a small iteration budget that escalates only while the
  // verdicts stay undecided. An undecided verdict steers the next probe by
  // its residual: a near-feasible split points at the member side, a large
  // residual at the witness side.
  int undecided_streak = 0;
  double frac = 0.5;
  int budget = std::min(800, cfg.solver.max_iters);
  while (hi - lo > cfg.x_tol && res.diag.probes < 200) {
    const double x = lo + frac * (hi - lo);
    ConeVerdict v = probe(x, budget);
    ++res.diag.probes;
    res.diag.iterations += v.iterations;

    if (v.status == Membership::member) {
      ++res.diag.member_probes;
      undecided_streak = 0;
      frac = 0.5;
      budget = std::min(800, cfg.solver.max_iters);
      hi = x;
      res.heuristic = res.heuristic || v.heuristic;
      if (v.decomposition) {
        Decomposition d = *v.decomposition;
        // Spectral-margin lift: shrink hi below the probe while the
        // certificate still verifies.
        const double mx = min_eigenvalue(d.x_part);
        const double my = min_eigenvalue(d.y_part);
        double delta = 0.0;
        bool via_x = true;
        if (lmax_gp > 0.0 && mx > 0.0) delta = mx / lmax_gp;
        if (lmax_p > 0.0 && my / lmax_p > delta) {
          delta = my / lmax_p;
          via_x = false;
        }
        delta = std::min(delta * (1.0 - 1e-12), x - lo);
        if (delta > 0.0) {
          Decomposition lifted = d;
          if (via_x)
            lifted.x_part = d.x_part - delta * gp;
          else
            lifted.y_part = d.y_part - delta * p;
          if (verify_decomposition(z_at(x - delta), lifted, cfg.solver.feas_tol, kCertTol)) {
            hi = x - delta;
            d = lifted;
          }
        }
        res.upper_certificate = d;
      }
    } else if (v.status == Membership::non_member) {
      ++res.diag.nonmember_probes;
      undecided_streak = 0;
      frac = 0.5;
      budget = std::min(800, cfg.solver.max_iters);
      double new_lo = x;
      if (v.ppt_witness) {
        const double num = pairing(sigma, *v.ppt_witness);
        const double den = pairing(gp, *v.ppt_witness);
        if (den > 1e-12) new_lo = std::max(new_lo, 1.0 - num / den);
        res.witness = v.ppt_witness;
      }
      lo = std::max(lo, std::min(new_lo, hi));
    } else {
      ++res.diag.undecided_probes;
      res.undecided_band = true;
      if (++undecided_streak >= 10) break;
      if (budget < cfg.solver.max_iters) {
        // Same probe, larger budget: the oracle's warm start turns the retry
        // into a continuation of the stalled split.
        budget = std::min(cfg.solver.max_iters, budget * 3);
      } else {
        const bool near_feasible = std::abs(v.gap) <= 100.0 * cfg.solver.feas_tol;
        frac = near_feasible ? 0.5 + 0.5 * frac : 0.5 * frac;
      }
    }
  }

  res.lo = std::min(lo, hi);
  res.hi = hi;
  res.heuristic = res.heuristic || !exact_regime;
  // Certificates are reported on the caller's scale.
  if (res.upper_certificate) {
    res.upper_certificate->x_part = scale * res.upper_certificate->x_part;
    res.upper_certificate->y_part = scale * res.upper_certificate->y_part;
    res.upper_certificate->residual *= scale;
  }
  return res;
}

}  // namespace

MonotoneResult m1(const HermitianOperator& sigma, const MonotoneConfig& cfg) {
  return m1_engine(sigma, cfg, false);
}

MonotoneResult m1_sep(const HermitianOperator& sigma, const MonotoneConfig& cfg) {
  return m1_engine(sigma, cfg, true);
}

MonotoneResult m1_primal(const HermitianOperator& sigma, const MonotoneConfig& cfg) {
  MonotoneResult res;
  res.kind = MonotoneKind::m1_primal;
  validate_config(cfg);

  const double scale = sigma.frobenius_norm();
  if (scale <= 0.0) {
    res.lo = res.hi = 0.0;
    return res;
  }
  const HermitianOperator sn = (1.0 / scale) * sigma;
  const HermitianOperator gs = sn.partial_transpose();
  if (min_eigenvalue(gs) >= -kPptShortCircuitTol) {
    res.lo = res.hi = 0.0;
    return res;
  }

  const JordanPair jp = jordan_split(gs);
  const HermitianOperator gp = jp.positive_part.partial_transpose();
  const HermitianOperator gq = jp.negative_part.partial_transpose();

  // Certify by exact rescaling: dividing a PPT point by tr(Gamma(P) A) keeps
  // both cones and pins the normalization, so the objective value is a true
  // feasible value.
  std::optional<HermitianOperator> best_point;
  double best = 0.0;
  auto certify = [&](const HermitianOperator& a) {
    const double t = pairing(gp, a);
    if (t <= 1e-12) return;
    const HermitianOperator ar = (1.0 / t) * a;
    if (min_eigenvalue(ar) < -kCertTol) return;
    if (min_eigenvalue(ar.partial_transpose()) < -kCertTol) return;
    const double val = pairing(gq, ar);
    if (val > best) {
      best = val;
      best_point = ar;
    }
  };

  const std::vector<Projection> slice = {
      project_psd, project_gamma_psd,
      [&](const HermitianOperator& h) { return project_pairing(h, gp, 1.0); }};

  HermitianOperator a = (1.0 / jp.positive_part.trace()) * HermitianOperator::identity(sn.dim_a(), sn.dim_b());
  certify(a);

  // Projected ascent with a level-style Polyak step: aim a gap delta above
  // the incumbent and halve the gap when progress dries up.
  const double g2 = std::max(1e-12, gq.frobenius_norm() * gq.frobenius_norm());
  double delta = 0.25;
  int stall = 0;
  const int outer = std::max(100, cfg.solver.max_iters / 10);
  for (int k = 0; k < outer && delta > 1e-6; ++k) {
    const double step = std::max(0.0, (best + delta - pairing(gq, a)) / g2);
    a = dykstra(a + step * gq, slice, 15);
    res.diag.iterations += 15;
    const double before = best;
    certify(a);
    if (best > before + 1e-12) {
      stall = 0;
    } else if (++stall >= 25) {
      delta *= 0.5;
      stall = 0;
    }
  }

  // Ratio refinement: a product violation of Z(x) = sigma - (1-x) Gamma(P)
  // converts to the exactly feasible A = |ef><ef| / <ef|Gamma(P)|ef> whose
  // objective tr(Gamma(Q) A) exceeds x, so the incumbent climbs to the best
  // crossing the see-saw can expose.
  {
    SolverConfig ss_cfg = cfg.solver;
    ss_cfg.restarts = std::min(ss_cfg.restarts, 16);
    std::optional<ProductWitness> warm;
    double shi = 1.0;
    int rounds = 0;
    while (shi - best > 0.5 * cfg.x_tol && rounds < 60) {
      ++rounds;
      const double x = 0.5 * (best + shi);
      const HermitianOperator z = sn - (1.0 - x) * gp;
      const SeeSawResult ss = see_saw_product_min(z, ss_cfg, warm ? &*warm : nullptr, nullptr);
      res.diag.iterations += ss.iterations;
      if (ss.value < -cfg.solver.feas_tol) {
        warm = ProductWitness{ss.e, ss.f};
        const double before = best;
        certify(product_projector(ss.e, ss.f));
        if (best <= before + 1e-14) break;  // witness no longer improves
      } else {
        shi = x;
      }
    }
  }

  res.lo = res.hi = std::clamp(best, 0.0, 1.0);
  res.primal_point = best_point;  // on the normalized scale; objective is scale-free
  return res;
}

std::pair<double, double> m1_scaling_check(const HermitianOperator& sigma0, double lambda,
                                           const MonotoneConfig& cfg) {
  if (lambda < 0.0) throw std::invalid_argument("m1_scaling_check: lambda must be >= 0");
  const JordanPair jp = jordan_split(sigma0.partial_transpose());
  const HermitianOperator mixed = sigma0 + lambda * jp.positive_part.partial_transpose();
  return {m1(mixed, cfg).value(), m1(sigma0, cfg).value() / (1.0 + lambda)};
}

MonotoneResult r_g_ppt(const HermitianOperator& sigma, const MonotoneConfig& cfg) {
  MonotoneResult res;
  res.kind = MonotoneKind::r_g_ppt;
  validate_config(cfg);
  require_state(sigma);

  const HermitianOperator gs = sigma.partial_transpose();
  const double lmin = min_eigenvalue(gs);
  if (lmin >= -kPptShortCircuitTol) {
    res.lo = res.hi = 0.0;
    res.robustness_bound = 0.0;
    res.primal_point = HermitianOperator(sigma.dim_a(), sigma.dim_b());
    return res;
  }

  const int n = sigma.dim();
  const HermitianOperator id = HermitianOperator::identity(sigma.dim_a(), sigma.dim_b());

  // Feasibility sets for sigma_minus: PSD, fixed trace, Gamma-shifted PSD.
  auto project_shifted = [&](const HermitianOperator& m) {
    return (psd_part(m.partial_transpose() + gs) - gs).partial_transpose();
  };

  double upper = std::numeric_limits<double>::infinity();
  std::optional<HermitianOperator> upper_point;
  auto try_budget = [&](double t, const HermitianOperator& start) -> bool {
    const std::vector<Projection> sets = {
        project_psd, [&](const HermitianOperator& h) { return project_pairing(h, id, t); },
        project_shifted};
    HermitianOperator m = dykstra(start, sets, 250);
    res.diag.iterations += 250;
    // Verify on an exactly PSD point; its own trace is the certified budget.
    m = psd_part(m);
    if (min_eigenvalue((sigma + m).partial_transpose()) < -kCertTol) return false;
    const double tv = m.trace();
    if (tv < upper) {
      upper = tv;
      upper_point = m;
    }
    return true;
  };

  // sigma_minus = |lmin| I is always feasible.
  if (!try_budget(-lmin * n, (-lmin) * id))
    throw std::runtime_error("r_g_ppt: baseline feasible point failed verification");

  HermitianOperator warm = *upper_point;
  double tlo = 0.0, thi = upper;
  for (int it = 0; it < 40 && thi - tlo > 1e-5; ++it) {
    const double t = 0.5 * (tlo + thi);
    if (try_budget(t, warm)) {
      thi = std::min(thi, upper);
      warm = *upper_point;
    } else {
      tlo = t;
    }
  }

  // Dual side: max tr(U sigma) - 1 over U >= 0, Gamma(U) <= I; each feasible
  // U certifies a lower bound on the robustness.
  auto project_cap = [&](const HermitianOperator& u) {
    return (id.partial_transpose() - psd_part(id.partial_transpose() - u.partial_transpose()))
        .partial_transpose();
  };
  double lower = 0.0;
  auto certify_dual = [&](const HermitianOperator& u) {
    const HermitianOperator up = psd_part(u);
    const double cap = max_eigenvalue(up.partial_transpose());
    const HermitianOperator uc = cap > 1.0 ? (1.0 / cap) * up : up;
    lower = std::max(lower, pairing(uc, sigma) - 1.0);
  };

  HermitianOperator u(sigma.dim_a(), sigma.dim_b());
  const double s2 = std::max(1e-12, sigma.frobenius_norm() * sigma.frobenius_norm());
  for (int k = 0; k < 400 && upper - lower > 1e-5; ++k) {
    const double f = pairing(u, sigma) - 1.0;
    const double step = std::max(0.0, (upper - f) / s2);
    u = dykstra(u + step * sigma, {project_psd, project_cap}, 12);
    res.diag.iterations += 12;
    certify_dual(u);
  }

  res.lo = std::max(0.0, lower);
  res.hi = upper;
  res.robustness_bound = res.lo / (1.0 + res.lo);
  res.primal_point = upper_point;
  return res;
}

MonotoneResult m2_ppt_lower(const HermitianOperator& sigma, const MonotoneConfig& cfg) {
  MonotoneResult res;
  res.kind = MonotoneKind::m2_ppt_lower;
  validate_config(cfg);
  require_state(sigma);

  if (min_eigenvalue(sigma.partial_transpose()) >= -kPptShortCircuitTol) {
    res.lo = res.hi = 0.0;
    return res;
  }

  const MonotoneResult rg = r_g_ppt(sigma, cfg);
  res.diag.iterations += rg.diag.iterations;
  res.lo = rg.lo / (1.0 + rg.lo);

  // Anchor point sigma_plus = sigma + sigma_minus is PSD, PPT and dominates
  // sigma; it certifies feasibility at x = 1 outright.
  const HermitianOperator anchor = sigma + *rg.primal_point;
  res.hi = 1.0;
  res.primal_point = anchor;

  auto in_joint_set = [&](const HermitianOperator& sp) {
    return min_eigenvalue(sp) >= -kCertTol &&
           min_eigenvalue(sp.partial_transpose()) >= -kCertTol &&
           min_eigenvalue(sp - sigma) >= -kCertTol;
  };
  const std::vector<Projection> joint = {
      project_psd, project_gamma_psd,
      [&](const HermitianOperator& h) { return sigma + psd_part(h - sigma); }};

  struct Feasible {
    HermitianOperator sigma_plus;
    Decomposition split;
  };
  auto try_x = [&](double x, const HermitianOperator& sp_start,
                   std::optional<Feasible>& out) -> bool {
    HermitianOperator sp = sp_start;
    HermitianOperator y(sigma.dim_a(), sigma.dim_b());
    const int outer = std::max(20, cfg.solver.max_iters / 50);
    for (int it = 0; it < outer; ++it) {
      const HermitianOperator t = sigma - (1.0 - x) * sp;
      DecomposableSplit split(t, it == 0 ? nullptr : &y);
      split.iterate(60);
      res.diag.iterations += 60;
      y = split.y_part();
      if (split.residual_norm() <= cfg.solver.feas_tol && in_joint_set(sp)) {
        Decomposition d{split.x_part(), split.y_part(), split.residual_norm()};
        if (verify_decomposition(t, d, cfg.solver.feas_tol, kCertTol)) {
          out = Feasible{sp, d};
          return true;
        }
      }
      // Fold the split residual back into sigma_plus, then restore the
      // joint constraints.
      sp = sp - (1.0 / (1.0 - x)) * split.residual();
      sp = dykstra(sp, joint, 8);
      res.diag.iterations += 8;
    }
    return false;
  };

  double slo = res.lo;
  double shi = 1.0;
  HermitianOperator warm = anchor;
  int probes = 0;
  while (shi - slo > std::max(cfg.x_tol, 1e-3) && probes < 14) {
    const double x = 0.5 * (slo + shi);
    std::optional<Feasible> found;
    ++probes;
    ++res.diag.probes;
    if (try_x(x, warm, found)) {
      ++res.diag.member_probes;
      shi = x;
      warm = found->sigma_plus;
      res.hi = x;
      res.primal_point = found->sigma_plus;
      res.upper_certificate = found->split;
    } else {
      ++res.diag.undecided_probes;
      slo = x;  // search floor only; infeasibility is not certified
    }
  }

  res.lo = std::min(res.lo, res.hi);
  return res;
}

std::vector<HermitianOperator> product_dictionary(int dim_a, int dim_b, int haar_count,
                                                  uint64_t seed) {
  std::vector<HermitianOperator> dict;
  dict.reserve(dim_a * dim_b + haar_count);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_b; ++j) {
      std::vector<cplx> e(dim_a, cplx(0.0)), f(dim_b, cplx(0.0));
      e[i] = 1.0;
      f[j] = 1.0;
      dict.push_back(product_projector(e, f));
    }
  Rng rng(seed);
  for (int k = 0; k < haar_count; ++k) {
    const auto e = rng.haar_vector(dim_a);
    const auto f = rng.haar_vector(dim_b);
    dict.push_back(product_projector(e, f));
  }
  return dict;
}

MonotoneResult m2_sep_upper(const HermitianOperator& sigma,
                            const std::vector<HermitianOperator>& dictionary,
                            const MonotoneConfig& cfg) {
  MonotoneResult res;
  res.kind = MonotoneKind::m2_sep_upper;
  validate_config(cfg);
  require_state(sigma);
  res.heuristic = !ConeOracle::exact_block_positivity_dim(sigma.dim_a(), sigma.dim_b());

  if (min_eigenvalue(sigma.partial_transpose()) >= -kPptShortCircuitTol) {
    res.lo = res.hi = 0.0;
    return res;
  }

  const std::vector<HermitianOperator>& dict =
      dictionary.empty()
          ? product_dictionary(sigma.dim_a(), sigma.dim_b(), 200, cfg.solver.seed ^ 0xd1c7u)
          : dictionary;
  const int m = static_cast<int>(dict.size());

  auto assemble = [&](const std::vector<double>& q) {
    HermitianOperator sp(sigma.dim_a(), sigma.dim_b());
    for (int i = 0; i < m; ++i)
      if (q[i] > 0.0) sp += q[i] * dict[i];
    return sp;
  };

  // Weights q >= 0 minimizing the squared infeasibility
  //   F(q) = dist^2(sigma_plus - sigma, PSD) + dist^2(sigma - (1-x) sigma_plus, D)
  // by projected gradient with backtracking; F is convex in q.
  struct Eval {
    double f;
    HermitianOperator neg;       // negative part of sigma_plus - sigma
    HermitianOperator residual;  // split residual of the cone term
  };
  HermitianOperator warm_y(sigma.dim_a(), sigma.dim_b());
  bool have_warm = false;
  auto eval = [&](const std::vector<double>& q, double x, int split_iters) -> Eval {
    const HermitianOperator sp = assemble(q);
    const HermitianOperator neg = neg_part(sp - sigma);
    const HermitianOperator t = sigma - (1.0 - x) * sp;
    DecomposableSplit split(t, have_warm ? &warm_y : nullptr);
    split.iterate(split_iters);
    res.diag.iterations += split_iters;
    warm_y = split.y_part();
    have_warm = true;
    const HermitianOperator r = split.residual();
    const double f = neg.frobenius_norm() * neg.frobenius_norm() +
                     r.frobenius_norm() * r.frobenius_norm();
    return {f, neg, r};
  };

  auto solve_x = [&](double x, std::vector<double>& q) -> bool {
    double step = 1.0;
    Eval cur = eval(q, x, 80);
    const int iters = std::max(60, cfg.solver.max_iters / 25);
    for (int it = 0; it < iters; ++it) {
      if (cur.f <= 0.25 * cfg.solver.feas_tol * cfg.solver.feas_tol) break;
      // dist^2 gradients through the affine maps: the PSD term contributes
      // -2 <neg_part, Pi_i>, the cone term -2 (1-x) <residual, Pi_i>.
      std::vector<double> grad(m);
      for (int i = 0; i < m; ++i)
        grad[i] = -2.0 * pairing(cur.neg, dict[i]) -
                  2.0 * (1.0 - x) * pairing(cur.residual, dict[i]);
      bool moved = false;
      for (int bt = 0; bt < 12; ++bt) {
        std::vector<double> qn(m);
        for (int i = 0; i < m; ++i) qn[i] = std::max(0.0, q[i] - step * grad[i]);
        Eval en = eval(qn, x, 40);
        if (en.f < cur.f - 1e-16) {
          q = std::move(qn);
          cur = en;
          moved = true;
          step *= 1.6;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    if (cur.f > cfg.solver.feas_tol * cfg.solver.feas_tol) return false;
    // Exact verification of the assembled certificate.
    const HermitianOperator sp = assemble(q);
    if (min_eigenvalue(sp - sigma) < -kCertTol) return false;
    const HermitianOperator t = sigma - (1.0 - x) * sp;
    DecomposableSplit split(t, &warm_y);
    split.iterate(400);
    res.diag.iterations += 400;
    Decomposition d{split.x_part(), split.y_part(), split.residual_norm()};
    if (!verify_decomposition(t, d, cfg.solver.feas_tol, kCertTol)) return false;
    res.primal_point = sp;
    res.upper_certificate = d;
    return true;
  };

  // x = 1: only domination is needed; scaled basis weights give sigma_plus = c I.
  std::vector<double> q(m, 0.0);
  {
    const double c = std::max(0.0, max_eigenvalue(sigma)) + 0.1;
    for (int i = 0; i < sigma.dim(); ++i) q[i] = c;
    if (!solve_x(1.0, q)) {
      res.infeasible_dictionary = true;
      res.lo = res.hi = 1.0;
      return res;
    }
  }

  double slo = 0.0, shi = 1.0;
  std::vector<double> warm_q = q;
  int probes = 0;
  while (shi - slo > std::max(cfg.x_tol, 1e-3) && probes < 14) {
    const double x = 0.5 * (slo + shi);
    std::vector<double> qx = warm_q;
    ++probes;
    ++res.diag.probes;
    if (solve_x(x, qx)) {
      ++res.diag.member_probes;
      shi = x;
      warm_q = qx;
    } else {
      ++res.diag.undecided_probes;
      slo = x;
    }
  }

  res.lo = res.hi = shi;
  return res;
}

std::pair<double, double> bound_check_negativity(const HermitianOperator& sigma,
                                                 const MonotoneConfig& cfg) {
  const double n = negativity(sigma);
  return {m1(sigma, cfg).value(), n / (1.0 + n)};
}

}  // namespace entmono
