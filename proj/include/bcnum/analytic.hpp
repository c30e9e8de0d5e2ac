#ifndef BCNUM_ANALYTIC_HPP
#define BCNUM_ANALYTIC_HPP

#include <algorithm>
#include <limits>
#include <vector>

#include "bcnum/scalar.hpp"

namespace bcn {

/// Truncated power series f(Z) = sum f_n Z^n representing a BC-holomorphic
/// function / Hardy-space element. Stored as the pair of component
/// coefficient vectors: f_n = c1[n] e + c2[n] e_dag.
template <typename T> class CoefficientFunction {
public:
  using cvec = std::vector<std::complex<T>>;

  CoefficientFunction() = default;
  explicit CoefficientFunction(const std::vector<bicomplex<T>>& coeffs) {
    c1_.reserve(coeffs.size());
    c2_.reserve(coeffs.size());
    for (const auto& f : coeffs) {
      const auto p = to_idempotent(f);
      c1_.push_back(p.b1);
      c2_.push_back(p.b2);
    }
  }
  CoefficientFunction(cvec c1, cvec c2)
      : c1_(std::move(c1)), c2_(std::move(c2)) {
    const size_t n = std::max(c1_.size(), c2_.size());
    c1_.resize(n);
    c2_.resize(n);
  }

  static CoefficientFunction monomial(size_t degree, size_t truncation) {
    cvec c(std::max(truncation, degree + 1));
    c[degree] = T(1);
    return CoefficientFunction(c, c);
  }

  size_t truncation() const { return c1_.size(); }
  const cvec& component1() const { return c1_; }
  const cvec& component2() const { return c2_; }

  bicomplex<T> coeff(size_t n) const {
    if (n >= c1_.size()) return bicomplex<T>();
    return from_idempotent(c1_[n], c2_[n]);
  }
  void set_coeff(size_t n, const bicomplex<T>& v) {
    if (n >= c1_.size()) {
      c1_.resize(n + 1);
      c2_.resize(n + 1);
    }
    const auto p = to_idempotent(v);
    c1_[n] = p.b1;
    c2_[n] = p.b2;
  }

  /// Componentwise Horner evaluation: G1(beta1) e + G2(beta2) e_dag.
  bicomplex<T> eval(const bicomplex<T>& z) const {
    const auto p = to_idempotent(z);
    return from_idempotent(eval_poly(c1_, p.b1), eval_poly(c2_, p.b2));
  }

  /// Direct bicomplex Horner; the cartesian route checked against eval().
  bicomplex<T> eval_horner(const bicomplex<T>& z) const {
    bicomplex<T> acc;
    for (size_t n = c1_.size(); n-- > 0;)
      acc = acc * z + from_idempotent(c1_[n], c2_[n]);
    return acc;
  }

  CoefficientFunction derivative() const {
    if (c1_.size() <= 1) return CoefficientFunction(cvec{}, cvec{});
    cvec d1(c1_.size() - 1), d2(c2_.size() - 1);
    for (size_t n = 0; n + 1 < c1_.size(); ++n) {
      d1[n] = T(n + 1) * c1_[n + 1];
      d2[n] = T(n + 1) * c2_[n + 1];
    }
    return CoefficientFunction(std::move(d1), std::move(d2));
  }

  static std::complex<T> eval_poly(const cvec& c, const std::complex<T>& x) {
    std::complex<T> acc;
    for (size_t n = c.size(); n-- > 0;) acc = acc * x + c[n];
    return acc;
  }

private:
  cvec c1_, c2_;
};

using CoefficientFunctiond = CoefficientFunction<double>;

template <typename T>
inline CoefficientFunction<T> operator+(const CoefficientFunction<T>& f,
                                        const CoefficientFunction<T>& g) {
  const size_t n = std::max(f.truncation(), g.truncation());
  typename CoefficientFunction<T>::cvec c1(n), c2(n);
  for (size_t k = 0; k < n; ++k) {
    c1[k] = (k < f.truncation() ? f.component1()[k] : std::complex<T>()) +
            (k < g.truncation() ? g.component1()[k] : std::complex<T>());
    c2[k] = (k < f.truncation() ? f.component2()[k] : std::complex<T>()) +
            (k < g.truncation() ? g.component2()[k] : std::complex<T>());
  }
  return CoefficientFunction<T>(std::move(c1), std::move(c2));
}

/// Truncated Cauchy product; the result keeps the larger truncation.
template <typename T>
inline CoefficientFunction<T> multiply_truncated(
    const CoefficientFunction<T>& f, const CoefficientFunction<T>& g,
    size_t truncation) {
  typename CoefficientFunction<T>::cvec c1(truncation), c2(truncation);
  for (size_t k = 0; k < f.truncation(); ++k)
    for (size_t m = 0; m < g.truncation(); ++m) {
      const size_t n = k + m;
      if (n >= truncation) break;
      c1[n] += f.component1()[k] * g.component1()[m];
      c2[n] += f.component2()[k] * g.component2()[m];
    }
  return CoefficientFunction<T>(std::move(c1), std::move(c2));
}

// --- Cauchy-Riemann residuals by central differences ---

template <typename T> struct cr_residuals {
  bicomplex<T> d_dagger; // dF/dZ^dagger, vanishes for holomorphic F
  bicomplex<T> d_bar;    // dF/dZ_bar
  bicomplex<T> d_star;   // dF/dZ^*
  bicomplex<T> d_z;      // dF/dZ, the derivative
};

/// Central-difference evaluation of the four bicomplex Cauchy-Riemann
/// operators at z. F is any BC -> BC callable.
template <typename T, typename F>
inline cr_residuals<T> cr_residual(F&& f, const bicomplex<T>& z,
                                   T step = T(tol::cr_step)) {
  const auto diff = [&](const bicomplex<T>& dir) {
    return T(1) / (T(2) * step) *
           (f(z + step * dir) - f(z - step * dir));
  };
  const bicomplex<T> one(T(1));
  const bicomplex<T> d_x1 = diff(one);
  const bicomplex<T> d_y1 = diff(bicomplex<T>::i());
  const bicomplex<T> d_x2 = diff(bicomplex<T>::j());
  const bicomplex<T> d_y2 = diff(bicomplex<T>::k());

  const bicomplex<T> i = bicomplex<T>::i();
  const bicomplex<T> j = bicomplex<T>::j();
  const T half = T(0.5);
  const bicomplex<T> d_z1 = half * (d_x1 - i * d_y1);
  const bicomplex<T> d_z1c = half * (d_x1 + i * d_y1);
  const bicomplex<T> d_z2 = half * (d_x2 - i * d_y2);
  const bicomplex<T> d_z2c = half * (d_x2 + i * d_y2);

  cr_residuals<T> r;
  r.d_z = half * (d_z1 - j * d_z2);
  r.d_dagger = half * (d_z1 + j * d_z2);
  r.d_bar = half * (d_z1c - j * d_z2c);
  r.d_star = half * (d_z1c + j * d_z2c);
  return r;
}

template <typename T>
inline cr_residuals<T> cr_residual(const CoefficientFunction<T>& f,
                                   const bicomplex<T>& z,
                                   T step = T(tol::cr_step)) {
  return cr_residual([&](const bicomplex<T>& w) { return f.eval(w); }, z,
                     step);
}

// --- the bicomplex Hardy space on the idempotent bidisk ---

/// <f,g> = sum f_n g_n^* on truncated coefficients (shorter side zero-padded).
template <typename T>
inline bicomplex<T> hardy_inner(const CoefficientFunction<T>& f,
                                const CoefficientFunction<T>& g) {
  const size_t n = std::min(f.truncation(), g.truncation());
  std::complex<T> s1, s2;
  for (size_t k = 0; k < n; ++k) {
    s1 += f.component1()[k] * std::conj(g.component1()[k]);
    s2 += f.component2()[k] * std::conj(g.component2()[k]);
  }
  return from_idempotent(s1, s2);
}

template <typename T>
inline hyperbolic<T> hardy_dnorm(const CoefficientFunction<T>& f) {
  return sqrt_dplus(hyperbolic_part(hardy_inner(f, f)));
}

/// Tail bound sum_{n>=N} r^{2n} for the geometric coefficient decay actually
/// used; justifies truncated-comparison tolerances.
template <typename T> inline T hardy_tail_bound(T r, size_t n) {
  if (r >= T(1)) return std::numeric_limits<T>::infinity();
  return std::pow(r, T(2 * n)) / (T(1) - r * r);
}

/// Point of the idempotent bidisk: both |beta_l| strictly below one.
template <typename T> class DiskPoint {
public:
  explicit DiskPoint(const bicomplex<T>& z) : z_(z) {
    const auto p = to_idempotent(z);
    if (std::abs(p.b1) >= T(1) || std::abs(p.b2) >= T(1))
      throw outside_domain_error(
          "DiskPoint: an idempotent component is not inside the unit disk");
  }

  const bicomplex<T>& value() const { return z_; }
  std::complex<T> beta1() const { return to_idempotent(z_).b1; }
  std::complex<T> beta2() const { return to_idempotent(z_).b2; }

private:
  bicomplex<T> z_;
};

using DiskPointd = DiskPoint<double>;

/// Szego kernel section K(., a) = 1/(1 - Z a^*); coefficients (a^*)^n.
template <typename T>
inline CoefficientFunction<T> szego_kernel(const DiskPoint<T>& a, size_t n) {
  const bicomplex<T> astar = conj_star(a.value());
  typename CoefficientFunction<T>::cvec c1(n), c2(n);
  const auto p = to_idempotent(astar);
  std::complex<T> p1(1), p2(1);
  for (size_t k = 0; k < n; ++k) {
    c1[k] = p1;
    c2[k] = p2;
    p1 *= p.b1;
    p2 *= p.b2;
  }
  return CoefficientFunction<T>(std::move(c1), std::move(c2));
}

/// <f, K(., a)>; equals f(a) exactly for polynomials of degree < truncation.
template <typename T>
inline bicomplex<T> reproduce_check(const CoefficientFunction<T>& f,
                                    const DiskPoint<T>& a) {
  return hardy_inner(f, szego_kernel(a, f.truncation()));
}

} // namespace bcn

#endif // BCNUM_ANALYTIC_HPP
