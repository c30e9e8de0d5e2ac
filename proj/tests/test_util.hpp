#ifndef BCNUM_TEST_UTIL_HPP
#define BCNUM_TEST_UTIL_HPP

#include <random>

#include "bcnum/scalar.hpp"

namespace bcn::test {

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::complex<double> random_complex(std::mt19937_64& rng,
                                           double scale = 1.0) {
  return {scale * uniform(rng), scale * uniform(rng)};
}

inline bicomplexd random_bicomplex(std::mt19937_64& rng, double scale = 1.0) {
  return bicomplexd(random_complex(rng, scale), random_complex(rng, scale));
}

inline hyperbolicd random_hyperbolic(std::mt19937_64& rng, double scale = 1.0) {
  return hyperbolicd(scale * uniform(rng), scale * uniform(rng));
}

inline double dist(const bicomplexd& x, const bicomplexd& y) {
  return euclidean_norm(x - y);
}

inline bool approx_eq(const bicomplexd& x, const bicomplexd& y,
                      double tol = 1e-12) {
  return dist(x, y) <= tol * (1.0 + std::max(euclidean_norm(x),
                                             euclidean_norm(y)));
}

inline bool approx_eq(const std::complex<double>& x,
                      const std::complex<double>& y, double tol = 1e-12) {
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

inline bool approx_eq(const hyperbolicd& x, const hyperbolicd& y,
                      double tol = 1e-12) {
  return std::abs(x.a - y.a) + std::abs(x.b - y.b) <=
         tol * (1.0 + euclid_abs(x) + euclid_abs(y));
}

} // namespace bcn::test

#endif // BCNUM_TEST_UTIL_HPP
