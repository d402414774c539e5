/* Closed forms for the named state families. These are the ground truth the
 * sweeps and verification suites compare the solvers against. */

#ifndef ENTMONO_CLOSED_FORMS_HPP
#define ENTMONO_CLOSED_FORMS_HPP

#include <algorithm>
#include <array>
#include <functional>

namespace entmono {

// (d eta - 1)(d + 1) / ((d eta + 1)(d - 1)) for entangled eta > 1/d, else 0.
inline double m1_isotropic_closed_form(int d, double eta) {
  if (eta <= 1.0 / d) return 0.0;
  return (d * eta - 1.0) * (d + 1.0) / ((d * eta + 1.0) * (d - 1.0));
}

// (2 mu - 1)(d + 1) / (2 mu + d - 1) for entangled mu > 1/2, else 0.
inline double m1_werner_closed_form(int d, double mu) {
  if (mu <= 0.5) return 0.0;
  return (2.0 * mu - 1.0) * (d + 1.0) / (2.0 * mu + d - 1.0);
}

// (2 p0 - 1)/(1 - 2 p1) on descending-sorted weights; 0 when not entangled.
inline double m1_bell_closed_form(std::array<double, 4> p) {
  std::sort(p.begin(), p.end(), std::greater<double>());
  if (p[0] <= 0.5) return 0.0;
  return (2.0 * p[0] - 1.0) / (1.0 - 2.0 * p[1]);
}

// Parameter correspondence of the Werner <-> isotropic conversion pair.
inline double werner_mu_from_iso_eta(int d, double eta) {
  return (d - 1.0) * eta / ((d - 2.0) * eta + 1.0);
}

inline double iso_eta_from_werner_mu(int d, double mu) {
  return mu / ((d - 1.0) - (d - 2.0) * mu);
}

}  // namespace entmono

#endif
