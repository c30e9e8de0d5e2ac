#ifndef BCNUM_SCALAR_HPP
#define BCNUM_SCALAR_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bcnum/errors.hpp"

namespace bcn {

namespace tol {
// Tolerances pinned by the acceptance suite; do not retune per call site.
inline constexpr double eps_abs = 1e-12;
inline constexpr double eps_rel = 1e-12;
inline constexpr double zero_divisor_eps = 1e-12; // relative to operand scale
inline constexpr double order_eps = 1e-10;        // cone / partial-order slack
inline constexpr double psd_floor_rel = 1e-9;     // Hermitian eigenvalue floor
inline constexpr double unimodular_stop = 1e-9;   // Schur algorithm stop
inline constexpr double cr_step = 1e-4;           // finite-difference step
inline constexpr double cr_tol = 1e-6;
} // namespace tol

namespace detail {
template <typename T> inline void check_finite(T x, const char* who) {
  if (!std::isfinite(x))
    throw invalid_value_error(std::string(who) + ": non-finite component");
}
template <typename T>
inline void check_finite(const std::complex<T>& z, const char* who) {
  check_finite(z.real(), who);
  check_finite(z.imag(), who);
}
} // namespace detail

/// Hyperbolic number a + b*k with k*k = 1; the "real axis" of the bicomplex
/// ring. Carries the positive cone D+ and the partial order it induces.
template <typename T> struct hyperbolic {
  T a{};
  T b{};

  hyperbolic() = default;
  hyperbolic(T a_, T b_) : a(a_), b(b_) {
    detail::check_finite(a, "hyperbolic");
    detail::check_finite(b, "hyperbolic");
  }
  hyperbolic(T a_) : hyperbolic(a_, T(0)) {} // reals embed

  // idempotent coefficients: a + b k = (a+b) e + (a-b) e_dag
  T idem1() const { return a + b; }
  T idem2() const { return a - b; }

  static hyperbolic from_idempotent(T nu, T mu) {
    return hyperbolic((nu + mu) / T(2), (nu - mu) / T(2));
  }

  hyperbolic operator-() const { return hyperbolic(-a, -b); }

  friend hyperbolic operator+(const hyperbolic& x, const hyperbolic& y) {
    return hyperbolic(x.a + y.a, x.b + y.b);
  }
  friend hyperbolic operator-(const hyperbolic& x, const hyperbolic& y) {
    return hyperbolic(x.a - y.a, x.b - y.b);
  }
  friend hyperbolic operator*(const hyperbolic& x, const hyperbolic& y) {
    return hyperbolic(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend hyperbolic operator*(T s, const hyperbolic& x) {
    return hyperbolic(s * x.a, s * x.b);
  }
  friend hyperbolic operator*(const hyperbolic& x, T s) { return s * x; }

  friend bool operator==(const hyperbolic& x, const hyperbolic& y) {
    return x.a == y.a && x.b == y.b;
  }
};

using hyperbolicd = hyperbolic<double>;

/// Bicomplex number Z = z1 + z2*j with commuting imaginary units i, j.
/// Cartesian storage; multiplicative paths go through the idempotent
/// coefficients beta1 = z1 - i z2, beta2 = z1 + i z2 (Z = beta1 e + beta2 e_dag).
template <typename T> struct bicomplex {
  std::complex<T> z1{};
  std::complex<T> z2{};

  bicomplex() = default;
  bicomplex(T re) : z1(re), z2() {}
  bicomplex(const std::complex<T>& z1_) : z1(z1_), z2() {
    detail::check_finite(z1, "bicomplex");
  }
  bicomplex(const std::complex<T>& z1_, const std::complex<T>& z2_)
      : z1(z1_), z2(z2_) {
    detail::check_finite(z1, "bicomplex");
    detail::check_finite(z2, "bicomplex");
  }

  static bicomplex i() { return bicomplex(std::complex<T>(0, 1)); }
  static bicomplex j() { return bicomplex(std::complex<T>(0), std::complex<T>(1, 0)); }
  static bicomplex k() { return bicomplex(std::complex<T>(0), std::complex<T>(0, 1)); }
  static bicomplex e() {
    return bicomplex(std::complex<T>(T(0.5)), std::complex<T>(0, T(0.5)));
  }
  static bicomplex e_dag() {
    return bicomplex(std::complex<T>(T(0.5)), std::complex<T>(0, T(-0.5)));
  }

  bicomplex operator-() const { return bicomplex(-z1, -z2); }

  friend bicomplex operator+(const bicomplex& x, const bicomplex& y) {
    return bicomplex(x.z1 + y.z1, x.z2 + y.z2);
  }
  friend bicomplex operator-(const bicomplex& x, const bicomplex& y) {
    return bicomplex(x.z1 - y.z1, x.z2 - y.z2);
  }
  friend bicomplex operator*(const bicomplex& x, const bicomplex& y) {
    return bicomplex(x.z1 * y.z1 - x.z2 * y.z2, x.z1 * y.z2 + x.z2 * y.z1);
  }
  friend bicomplex operator*(const std::complex<T>& s, const bicomplex& x) {
    return bicomplex(s * x.z1, s * x.z2);
  }
  friend bicomplex operator*(const bicomplex& x, const std::complex<T>& s) {
    return s * x;
  }
  friend bicomplex operator*(T s, const bicomplex& x) {
    return bicomplex(s * x.z1, s * x.z2);
  }
  friend bicomplex operator*(const bicomplex& x, T s) { return s * x; }

  bicomplex& operator+=(const bicomplex& y) { return *this = *this + y; }
  bicomplex& operator-=(const bicomplex& y) { return *this = *this - y; }
  bicomplex& operator*=(const bicomplex& y) { return *this = *this * y; }

  friend bool operator==(const bicomplex& x, const bicomplex& y) {
    return x.z1 == y.z1 && x.z2 == y.z2;
  }
};

using bicomplexd = bicomplex<double>;

/// Idempotent coordinates of a bicomplex number: Z = b1 e + b2 e_dag.
/// Ring operations are componentwise in these coordinates.
template <typename T> struct idempotent_pair {
  std::complex<T> b1{};
  std::complex<T> b2{};
};

template <typename T>
inline idempotent_pair<T> to_idempotent(const bicomplex<T>& z) {
  const std::complex<T> i(0, 1);
  return {z.z1 - i * z.z2, z.z1 + i * z.z2};
}

template <typename T>
inline bicomplex<T> from_idempotent(const idempotent_pair<T>& p) {
  const std::complex<T> i(0, 1);
  return bicomplex<T>((p.b1 + p.b2) / T(2), i * (p.b1 - p.b2) / T(2));
}

template <typename T>
inline bicomplex<T> from_idempotent(const std::complex<T>& b1,
                                    const std::complex<T>& b2) {
  return from_idempotent(idempotent_pair<T>{b1, b2});
}

template <typename T> inline bicomplex<T> to_bicomplex(const hyperbolic<T>& h) {
  return bicomplex<T>(std::complex<T>(h.a), std::complex<T>(0, h.b));
}

/// Hyperbolic part of a bicomplex value known to lie in D; the discarded
/// cross coordinates (Im z1, Re z2) are the caller's residual to check.
template <typename T>
inline hyperbolic<T> hyperbolic_part(const bicomplex<T>& z) {
  return hyperbolic<T>(z.z1.real(), z.z2.imag());
}

// --- the three conjugations (ring automorphisms) ---

template <typename T> inline bicomplex<T> conj_bar(const bicomplex<T>& z) {
  return bicomplex<T>(std::conj(z.z1), std::conj(z.z2));
}

template <typename T> inline bicomplex<T> conj_dagger(const bicomplex<T>& z) {
  return bicomplex<T>(z.z1, -z.z2);
}

template <typename T> inline bicomplex<T> conj_star(const bicomplex<T>& z) {
  return bicomplex<T>(std::conj(z.z1), -std::conj(z.z2));
}

// --- moduli: |Z|^2_i in C(i), |Z|^2_j in C(j), |Z|^2_k in D+ ---

template <typename T>
inline std::complex<T> modulus_i2(const bicomplex<T>& z) {
  return z.z1 * z.z1 + z.z2 * z.z2;
}

/// Z * conj_bar(Z); the value lives in C(j), returned as a bicomplex whose
/// cartesian coordinates are (real, real).
template <typename T> inline bicomplex<T> modulus_j2(const bicomplex<T>& z) {
  return z * conj_bar(z);
}

template <typename T> inline hyperbolic<T> modulus_k2(const bicomplex<T>& z) {
  const T a = std::norm(z.z1) + std::norm(z.z2);
  const T b = T(-2) * (z.z1.real() * (-z.z2.imag()) + z.z1.imag() * z.z2.real());
  return hyperbolic<T>(a, b); // a - 2 Im(z1 conj(z2)) k
}

template <typename T>
inline hyperbolic<T> hyperbolic_norm(const bicomplex<T>& z) {
  const auto p = to_idempotent(z);
  return hyperbolic<T>::from_idempotent(std::abs(p.b1), std::abs(p.b2));
}

template <typename T> inline T euclidean_norm(const bicomplex<T>& z) {
  return std::sqrt(std::norm(z.z1) + std::norm(z.z2));
}

/// Euclidean norm of a hyperbolic number seen inside BC; equals
/// |  |Z|_k  | when applied to a hyperbolic norm.
template <typename T> inline T euclid_abs(const hyperbolic<T>& h) {
  return std::hypot(h.a, h.b);
}

// --- zero divisors and inversion ---

template <typename T> inline bool in_singular_set(const bicomplex<T>& z) {
  const auto p = to_idempotent(z);
  const T m1 = std::abs(p.b1), m2 = std::abs(p.b2);
  const T scale = std::max(m1, m2);
  if (scale == T(0)) return false; // zero itself is not in S
  return std::min(m1, m2) <= T(tol::zero_divisor_eps) * scale;
}

template <typename T> inline bool is_invertible(const bicomplex<T>& z) {
  const auto p = to_idempotent(z);
  const T m1 = std::abs(p.b1), m2 = std::abs(p.b2);
  const T scale = std::max(m1, m2);
  return std::min(m1, m2) > T(tol::zero_divisor_eps) * scale;
}

template <typename T> inline bicomplex<T> inverse(const bicomplex<T>& z) {
  if (!is_invertible(z))
    throw zero_divisor_error("inverse: operand in S ∪ {0}");
  const auto p = to_idempotent(z);
  return from_idempotent(T(1) / p.b1, T(1) / p.b2);
}

template <typename T>
inline bicomplex<T> operator/(const bicomplex<T>& x, const bicomplex<T>& y) {
  return x * inverse(y);
}

template <typename T> inline bicomplex<T> pow(const bicomplex<T>& z, int n) {
  const auto p = to_idempotent(z);
  return from_idempotent(std::pow(p.b1, n), std::pow(p.b2, n));
}

// --- projections onto idempotent coefficients and cartesian parts ---

template <typename T> inline std::complex<T> pi1_i(const bicomplex<T>& z) {
  return to_idempotent(z).b1;
}
template <typename T> inline std::complex<T> pi2_i(const bicomplex<T>& z) {
  return to_idempotent(z).b2;
}
// gamma_1 = Re b1 - j Im b1, gamma_2 = Re b2 + j Im b2 (values in C(j))
template <typename T> inline std::complex<T> pi1_j(const bicomplex<T>& z) {
  const auto b1 = to_idempotent(z).b1;
  return std::complex<T>(b1.real(), -b1.imag());
}
template <typename T> inline std::complex<T> pi2_j(const bicomplex<T>& z) {
  const auto b2 = to_idempotent(z).b2;
  return std::complex<T>(b2.real(), b2.imag());
}
template <typename T> inline std::complex<T> Pi1_i(const bicomplex<T>& z) {
  return z.z1;
}
template <typename T> inline std::complex<T> Pi2_i(const bicomplex<T>& z) {
  return z.z2;
}
// eta_1 = x1 + x2 j, eta_2 = y1 + y2 j (values in C(j))
template <typename T> inline std::complex<T> Pi1_j(const bicomplex<T>& z) {
  return std::complex<T>(z.z1.real(), z.z2.real());
}
template <typename T> inline std::complex<T> Pi2_j(const bicomplex<T>& z) {
  return std::complex<T>(z.z1.imag(), z.z2.imag());
}

// --- the remaining cartesian-like representations; derived accessors only ---

template <typename T>
inline std::array<std::complex<T>, 2> cart_j(const bicomplex<T>& z) {
  return {Pi1_j(z), Pi2_j(z)}; // Z = eta1 + eta2 i
}
template <typename T>
inline std::array<hyperbolic<T>, 2> duplex_j(const bicomplex<T>& z) {
  // Z = fz1 + j fz2 with fz in D
  return {hyperbolic<T>(z.z1.real(), z.z2.imag()),
          hyperbolic<T>(z.z2.real(), -z.z1.imag())};
}
template <typename T>
inline std::array<hyperbolic<T>, 2> duplex_i(const bicomplex<T>& z) {
  // Z = fx1 + i fx2 with fx in D
  return {hyperbolic<T>(z.z1.real(), z.z2.imag()),
          hyperbolic<T>(z.z1.imag(), -z.z2.real())};
}
template <typename T>
inline std::array<std::complex<T>, 2> k_form_i(const bicomplex<T>& z) {
  // Z = alpha1 + k alpha2 with alpha in C(i)
  return {z.z1, std::complex<T>(z.z2.imag(), -z.z2.real())};
}
template <typename T>
inline std::array<std::complex<T>, 2> k_form_j(const bicomplex<T>& z) {
  // Z = nu1 + k nu2 with nu in C(j)
  return {Pi1_j(z), std::complex<T>(z.z2.imag(), -z.z1.imag())};
}

// --- the positive cone D+ and the partial order it defines ---

template <typename T>
inline bool dplus_contains(const hyperbolic<T>& h, T eps = T(tol::order_eps)) {
  return h.idem1() >= -eps && h.idem2() >= -eps;
}

enum class order_relation { less, greater, equal, incomparable };

template <typename T>
inline order_relation order_compare(const hyperbolic<T>& h1,
                                    const hyperbolic<T>& h2,
                                    T eps = T(tol::order_eps)) {
  const hyperbolic<T> d = h2 - h1;
  const bool up = dplus_contains(d, eps);
  const bool down = dplus_contains(-d, eps);
  if (up && down) return order_relation::equal;
  if (up) return order_relation::less;
  if (down) return order_relation::greater;
  return order_relation::incomparable;
}

/// h1 "D-less or equal" h2, i.e. h2 - h1 in D+ within eps.
template <typename T>
inline bool order_leq(const hyperbolic<T>& h1, const hyperbolic<T>& h2,
                      T eps = T(tol::order_eps)) {
  return dplus_contains(h2 - h1, eps);
}

template <typename T>
inline hyperbolic<T> sup_d(std::span<const hyperbolic<T>> set) {
  if (set.empty()) throw empty_set_error("sup_d: empty set");
  T nu = set[0].idem1(), mu = set[0].idem2();
  for (const auto& h : set.subspan(1)) {
    nu = std::max(nu, h.idem1());
    mu = std::max(mu, h.idem2());
  }
  return hyperbolic<T>::from_idempotent(nu, mu);
}

template <typename T>
inline hyperbolic<T> sup_d(const std::vector<hyperbolic<T>>& set) {
  return sup_d(std::span<const hyperbolic<T>>(set));
}

/// Componentwise square root of a cone element.
template <typename T>
inline hyperbolic<T> sqrt_dplus(const hyperbolic<T>& h,
                                T eps = T(tol::order_eps)) {
  if (!dplus_contains(h, eps))
    throw not_in_cone_error("sqrt_dplus: operand outside D+");
  const T nu = std::max(h.idem1(), T(0));
  const T mu = std::max(h.idem2(), T(0));
  return hyperbolic<T>::from_idempotent(std::sqrt(nu), std::sqrt(mu));
}

/// Membership in the sphere S_gamma0 = { |beta1| = a0, |beta2| = b0 } where
/// gamma0 = a0 e + b0 e_dag.
template <typename T>
inline bool sphere_contains(const bicomplex<T>& z, const hyperbolic<T>& gamma0,
                            T eps = T(tol::order_eps)) {
  if (!dplus_contains(gamma0))
    throw not_in_cone_error("sphere_contains: radius outside D+");
  const auto p = to_idempotent(z);
  return std::abs(std::abs(p.b1) - gamma0.idem1()) <= eps &&
         std::abs(std::abs(p.b2) - gamma0.idem2()) <= eps;
}

} // namespace bcn

#endif // BCNUM_SCALAR_HPP
