#ifndef ENTMONO_RNG_HPP
#define ENTMONO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "entmono/matrix.hpp"

namespace entmono {

// Seeded mt19937_64 with a hand-rolled Box-Muller transform so that streams are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return std::ldexp(static_cast<double>(gen_() >> 11), -53);
  }

  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  cplx cgaussian() { return cplx(gaussian(), gaussian()) / std::sqrt(2.0); }

  std::vector<cplx> haar_vector(int n) {
    std::vector<cplx> v(n);
    for (auto& x : v) x = cgaussian();
    vec_normalize(v);
    return v;
  }

  // Simplex point via normalized exponentials.
  std::vector<double> simplex(int n) {
    std::vector<double> p(n);
    double s = 0.0;
    for (auto& x : p) {
      x = -std::log(1.0 - uniform());
      s += x;
    }
    for (auto& x : p) x /= s;
    return p;
  }

  uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace entmono

#endif
