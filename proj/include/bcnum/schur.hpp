#ifndef BCNUM_SCHUR_HPP
#define BCNUM_SCHUR_HPP

#include <functional>
#include <numbers>
#include <random>

#include "bcnum/analytic.hpp"
#include "bcnum/matrix.hpp"

namespace bcn {

namespace detail {

template <typename T> using cpoly = std::vector<std::complex<T>>;

template <typename T>
inline std::complex<T> poly_eval(const cpoly<T>& p, const std::complex<T>& x) {
  std::complex<T> acc;
  for (size_t n = p.size(); n-- > 0;) acc = acc * x + p[n];
  return acc;
}

template <typename T>
inline cpoly<T> poly_mul(const cpoly<T>& p, const cpoly<T>& q) {
  if (p.empty() || q.empty()) return {};
  cpoly<T> r(p.size() + q.size() - 1);
  for (size_t k = 0; k < p.size(); ++k)
    for (size_t m = 0; m < q.size(); ++m) r[k + m] += p[k] * q[m];
  return r;
}

template <typename T> inline void poly_trim(cpoly<T>& p, T rel = T(1e-12)) {
  T scale = T(0);
  for (const auto& c : p) scale = std::max(scale, std::abs(c));
  while (!p.empty() && std::abs(p.back()) <= rel * scale) p.pop_back();
}

/// Power-series division p/q to `n` terms; requires q[0] != 0.
template <typename T>
inline cpoly<T> series_divide(const cpoly<T>& p, const cpoly<T>& q, size_t n) {
  cpoly<T> s(n);
  const std::complex<T> q0 = q.empty() ? std::complex<T>() : q[0];
  for (size_t k = 0; k < n; ++k) {
    std::complex<T> acc = k < p.size() ? p[k] : std::complex<T>();
    for (size_t m = 1; m <= k && m < q.size(); ++m) acc -= q[m] * s[k - m];
    s[k] = acc / q0;
  }
  return s;
}

} // namespace detail

/// One classical Schur-class component: either a finite Blaschke product
/// c * prod b_w (exact rational algebra) or a truncated coefficient vector.
template <typename T> class SchurComponent {
public:
  using cpoly = detail::cpoly<T>;

  static SchurComponent blaschke(std::vector<std::complex<T>> zeros,
                                 std::complex<T> unimodular = T(1)) {
    SchurComponent s;
    s.is_blaschke_ = true;
    s.zeros_ = std::move(zeros);
    s.unimodular_ = unimodular;
    return s;
  }
  static SchurComponent series(cpoly coeffs) {
    SchurComponent s;
    s.coeffs_ = std::move(coeffs);
    return s;
  }
  static SchurComponent constant(std::complex<T> c) { return series({c}); }

  bool is_blaschke() const { return is_blaschke_; }
  const std::vector<std::complex<T>>& zeros() const { return zeros_; }
  const std::complex<T>& unimodular() const { return unimodular_; }

  std::complex<T> eval(const std::complex<T>& x) const {
    if (!is_blaschke_) return detail::poly_eval(coeffs_, x);
    std::complex<T> acc = unimodular_;
    for (const auto& w : zeros_) acc *= (x - w) / (T(1) - x * std::conj(w));
    return acc;
  }

  /// Rational form num/den with den(0) = 1.
  std::pair<cpoly, cpoly> rational() const {
    if (!is_blaschke_) return {coeffs_, cpoly{T(1)}};
    cpoly num{unimodular_}, den{T(1)};
    for (const auto& w : zeros_) {
      num = detail::poly_mul(num, cpoly{-w, T(1)});
      den = detail::poly_mul(den, cpoly{T(1), -std::conj(w)});
    }
    return {num, den};
  }

  cpoly series_coeffs(size_t n) const {
    if (!is_blaschke_) {
      cpoly c = coeffs_;
      c.resize(n);
      return c;
    }
    const auto [num, den] = rational();
    return detail::series_divide(num, den, n);
  }

private:
  bool is_blaschke_ = false;
  std::vector<std::complex<T>> zeros_;
  std::complex<T> unimodular_{T(1)};
  cpoly coeffs_;
};

/// Bicomplex Schur function s(Z) = s1(beta1) e + s2(beta2) e_dag with
/// classical Schur-class components (scalar-valued).
template <typename T> struct SchurFunction {
  SchurComponent<T> s1;
  SchurComponent<T> s2;

  bicomplex<T> eval(const bicomplex<T>& z) const {
    const auto p = to_idempotent(z);
    return from_idempotent(s1.eval(p.b1), s2.eval(p.b2));
  }

  CoefficientFunction<T> series(size_t n) const {
    return CoefficientFunction<T>(s1.series_coeffs(n), s2.series_coeffs(n));
  }
};

using SchurFunctiond = SchurFunction<double>;

/// Kernel k_s(Z,W) = (1 - s(Z) s(W)^*) / (1 - Z W^*); positive definite on
/// interior samples iff s is Schur.
template <typename T>
inline bicomplex<T> schur_kernel_ks(const SchurFunction<T>& s,
                                    const bicomplex<T>& z,
                                    const bicomplex<T>& w) {
  const bicomplex<T> den = bicomplex<T>(T(1)) - z * conj_star(w);
  if (!is_invertible(den))
    throw zero_divisor_denominator_error(
        "schur_kernel_ks: 1 - ZW^* is a zero divisor");
  return (bicomplex<T>(T(1)) - s.eval(z) * conj_star(s.eval(w))) *
         inverse(den);
}

template <typename T>
inline bicomplex<T> szego_kernel_value(const bicomplex<T>& z,
                                       const bicomplex<T>& w) {
  const bicomplex<T> den = bicomplex<T>(T(1)) - z * conj_star(w);
  if (!is_invertible(den))
    throw zero_divisor_denominator_error(
        "szego_kernel_value: 1 - ZW^* is a zero divisor");
  return inverse(den);
}

template <typename T> struct kernel_report {
  BCMatrix<T> gram;
  bool star_hermitian = false;
  std::pair<T, T> min_component_eigenvalues{T(0), T(0)};
  std::pair<bool, bool> component_psd{false, false};

  bool positive() const {
    return star_hermitian && component_psd.first && component_psd.second;
  }
};

/// Gram-matrix positivity certificate for a kernel on a point sample.
template <typename T, typename K>
inline kernel_report<T> kernel_positivity_check(
    K&& kernel, const std::vector<DiskPoint<T>>& points,
    T tol = T(tol::psd_floor_rel)) {
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  BCMatrix<T> gram(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      gram.set(r, c, kernel(points[static_cast<size_t>(r)].value(),
                            points[static_cast<size_t>(c)].value()));
  kernel_report<T> rep;
  rep.gram = gram;
  const T floor = tol * std::max(gram.scale(), T(1));
  const auto& g1 = gram.component1();
  const auto& g2 = gram.component2();
  rep.star_hermitian =
      (g1 - g1.adjoint()).cwiseAbs().maxCoeff() <= floor &&
      (g2 - g2.adjoint()).cwiseAbs().maxCoeff() <= floor;
  rep.min_component_eigenvalues = {detail::min_herm_eig(g1),
                                   detail::min_herm_eig(g2)};
  rep.component_psd = {rep.min_component_eigenvalues.first >= -floor,
                       rep.min_component_eigenvalues.second >= -floor};
  return rep;
}

/// Deterministic interior sample points (golden-angle spiral per component).
template <typename T>
inline std::vector<DiskPoint<T>> default_disk_samples(size_t count,
                                                      T radius = T(0.8),
                                                      size_t offset = 0) {
  const T phi = std::numbers::phi_v<T>;
  std::vector<DiskPoint<T>> pts;
  pts.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    const T t = T(k + offset + 1);
    const T r1 = radius * std::fmod(t * phi, T(1));
    const T r2 = radius * std::fmod(t * phi * phi, T(1));
    const T th1 = T(2) * std::numbers::pi_v<T> * std::fmod(t * T(0.7548776662),
                                                           T(1));
    const T th2 = T(2) * std::numbers::pi_v<T> * std::fmod(t * T(0.5698402910),
                                                           T(1));
    pts.emplace_back(from_idempotent(std::polar(r1, th1), std::polar(r2, th2)));
  }
  return pts;
}

/// Block realization (A,B;C,D) of s(Z) = D + Z C (I - Z A)^{-1} B.
template <typename T> struct RealizationMatrix {
  BCMatrix<T> a, b, c, d;

  Eigen::Index state_dim() const { return a.rows(); }

  BCMatrix<T> block_matrix() const {
    const Eigen::Index n = a.rows() + c.rows();
    const Eigen::Index m = a.cols() + b.cols();
    typename BCMatrix<T>::cmat m1(n, m), m2(n, m);
    m1 << a.component1(), b.component1(), c.component1(), d.component1();
    m2 << a.component2(), b.component2(), c.component2(), d.component2();
    return BCMatrix<T>(m1, m2);
  }
};

using RealizationMatrixd = RealizationMatrix<double>;

template <typename T>
inline BCMatrix<T> realization_eval(const RealizationMatrix<T>& r,
                                    const bicomplex<T>& z) {
  const BCMatrix<T> m = BCMatrix<T>::Identity(r.state_dim()) - z * r.a;
  try {
    return r.d + z * (r.c * inverse(m) * r.b);
  } catch (const singular_error& e) {
    throw resolvent_singular_error(std::string("realization_eval: ") +
                                   e.what());
  }
}

/// Kernel identity for a coisometric realization:
/// (I - s(Z)s(W)^{*t})/(1 - ZW^*) = C (I-ZA)^{-1} ((I-WA)^{#})^{-1} C^{#},
/// with M^{#} = M^{*t}.
template <typename T>
inline BCMatrix<T> realization_kernel(const RealizationMatrix<T>& r,
                                      const bicomplex<T>& z,
                                      const bicomplex<T>& w) {
  const BCMatrix<T> id = BCMatrix<T>::Identity(r.state_dim());
  try {
    return r.c * inverse(id - z * r.a) * inverse(star_t(id - w * r.a)) *
           star_t(r.c);
  } catch (const singular_error& e) {
    throw resolvent_singular_error(std::string("realization_kernel: ") +
                                   e.what());
  }
}

template <typename T> struct blaschke_factor {
  SchurFunction<T> s;
  RealizationMatrix<T> realization; // (a^*, u; u, -a), *-unitary
};

/// Bicomplex Blaschke factor b_a(Z) = (Z - a)/(1 - Z a^*) with its unitary
/// 2-block realization; u = sqrt(1 - |eta1|^2) e + sqrt(1 - |eta2|^2) e_dag.
template <typename T>
inline blaschke_factor<T> blaschke(const bicomplex<T>& a,
                                   T eps = T(tol::eps_abs)) {
  const auto p = to_idempotent(a);
  if (std::abs(std::abs(p.b1) - T(1)) <= eps ||
      std::abs(std::abs(p.b2) - T(1)) <= eps)
    throw degenerate_parameter_error(
        "blaschke: a component of the zero lies on the unit circle");
  blaschke_factor<T> f;
  f.s = SchurFunction<T>{SchurComponent<T>::blaschke({p.b1}),
                         SchurComponent<T>::blaschke({p.b2})};
  const bicomplex<T> u = from_idempotent(
      std::complex<T>(std::sqrt(std::abs(T(1) - std::norm(p.b1)))),
      std::complex<T>(std::sqrt(std::abs(T(1) - std::norm(p.b2)))));
  auto cell = [](const bicomplex<T>& v) {
    BCMatrix<T> m(1, 1);
    m.set(0, 0, v);
    return m;
  };
  f.realization = RealizationMatrix<T>{cell(conj_star(a)), cell(u), cell(u),
                                       cell(-a)};
  return f;
}

template <typename T>
inline blaschke_factor<T> blaschke(const DiskPoint<T>& a) {
  return blaschke(a.value());
}

/// Coefficient-level backward-shift realization: A is the left shift,
/// B carries (s_1, ..., s_{N-1}), C picks the constant coefficient, D = s_0.
template <typename T>
inline RealizationMatrix<T> backward_shift_realization(
    const detail::cpoly<T>& s1, const detail::cpoly<T>& s2, size_t n) {
  if (s1.size() < n || s2.size() < n)
    throw shape_mismatch_error(
        "backward_shift_realization: need coefficients up to the truncation");
  using cmat = typename BCMatrix<T>::cmat;
  const Eigen::Index d = static_cast<Eigen::Index>(n) - 1;
  cmat shift = cmat::Zero(d, d);
  for (Eigen::Index k = 0; k + 1 < d; ++k) shift(k, k + 1) = T(1);
  cmat b1 = cmat::Zero(d, 1), b2 = cmat::Zero(d, 1);
  for (Eigen::Index k = 0; k < d; ++k) {
    b1(k, 0) = s1[static_cast<size_t>(k) + 1];
    b2(k, 0) = s2[static_cast<size_t>(k) + 1];
  }
  cmat c = cmat::Zero(1, d);
  if (d > 0) c(0, 0) = T(1);
  cmat d1(1, 1), d2(1, 1);
  d1(0, 0) = s1[0];
  d2(0, 0) = s2[0];
  return RealizationMatrix<T>{BCMatrix<T>(shift, shift), BCMatrix<T>(b1, b2),
                              BCMatrix<T>(c, c), BCMatrix<T>(d1, d2)};
}

template <typename T>
inline RealizationMatrix<T> backward_shift_realization(
    const SchurFunction<T>& s, size_t n) {
  return backward_shift_realization(s.s1.series_coeffs(n),
                                    s.s2.series_coeffs(n), n);
}

template <typename T> struct schur_algorithm_result {
  std::vector<std::complex<T>> rho1, rho2;
  bool terminated1 = false; // ended on a unimodular coefficient
  bool terminated2 = false;
};

namespace detail {

template <typename T>
inline void schur_recursion(const SchurComponent<T>& s, size_t max_steps,
                            T stop_tol, std::vector<std::complex<T>>& rho,
                            bool& terminated) {
  auto [p, q] = s.rational();
  poly_trim(p);
  poly_trim(q);
  for (size_t step = 0; step <= max_steps; ++step) {
    const std::complex<T> q0 = detail::poly_eval(q, std::complex<T>());
    const std::complex<T> r =
        p.empty() ? std::complex<T>() : p[0] / q0;
    const T mod = std::abs(r);
    if (mod > T(1) + stop_tol)
      throw not_schur_error("schur_algorithm: coefficient modulus above one");
    rho.push_back(r);
    if (std::abs(T(1) - mod) <= stop_tol) {
      terminated = true;
      return;
    }
    if (rho.size() > max_steps) return;
    // s_{n+1} = (s_n - r) / (z (1 - conj(r) s_n)) on the rational form
    cpoly<T> pn(std::max(p.size(), q.size()));
    for (size_t k = 0; k < pn.size(); ++k) {
      const std::complex<T> pk = k < p.size() ? p[k] : std::complex<T>();
      const std::complex<T> qk = k < q.size() ? q[k] : std::complex<T>();
      pn[k] = pk - r * qk;
    }
    if (!pn.empty()) pn.erase(pn.begin()); // exact: constant term cancels
    cpoly<T> qn(std::max(p.size(), q.size()));
    for (size_t k = 0; k < qn.size(); ++k) {
      const std::complex<T> pk = k < p.size() ? p[k] : std::complex<T>();
      const std::complex<T> qk = k < q.size() ? q[k] : std::complex<T>();
      qn[k] = qk - std::conj(r) * pk;
    }
    poly_trim(pn);
    poly_trim(qn);
    T scale = T(0);
    for (const auto& c : qn) scale = std::max(scale, std::abs(c));
    if (scale > T(0))
      for (auto* poly : {&pn, &qn})
        for (auto& c : *poly) c /= scale;
    p = std::move(pn);
    q = std::move(qn);
  }
}

} // namespace detail

/// Classical Schur algorithm run independently on both components. Each list
/// ends with the unimodular coefficient when the recursion terminates (a
/// finite Blaschke product of k factors gives k coefficients then the stop).
template <typename T>
inline schur_algorithm_result<T> schur_algorithm(const SchurFunction<T>& s,
                                                 size_t max_steps,
                                                 T stop_tol =
                                                     T(tol::unimodular_stop)) {
  schur_algorithm_result<T> out;
  detail::schur_recursion(s.s1, max_steps, stop_tol, out.rho1,
                          out.terminated1);
  detail::schur_recursion(s.s2, max_steps, stop_tol, out.rho2,
                          out.terminated2);
  return out;
}

/// Condition (4): <sf, sf> D-below <f, f> for random truncated f, with sf
/// computed by truncated coefficient convolution.
template <typename T, typename Rng>
inline bool multiplier_contraction_check(const SchurFunction<T>& s, size_t n,
                                         size_t trials, Rng& rng,
                                         T eps = T(tol::order_eps)) {
  const CoefficientFunction<T> s_series = s.series(n);
  std::uniform_real_distribution<T> dist(T(-1), T(1));
  for (size_t trial = 0; trial < trials; ++trial) {
    typename CoefficientFunction<T>::cvec c1(n), c2(n);
    for (size_t k = 0; k < n; ++k) {
      c1[k] = std::complex<T>(dist(rng), dist(rng));
      c2[k] = std::complex<T>(dist(rng), dist(rng));
    }
    const CoefficientFunction<T> f(std::move(c1), std::move(c2));
    const auto sf = multiply_truncated(s_series, f, n);
    const hyperbolic<T> lhs = hyperbolic_part(hardy_inner(sf, sf));
    const hyperbolic<T> rhs = hyperbolic_part(hardy_inner(f, f));
    if (!order_leq(lhs, rhs, eps * (T(1) + euclid_abs(rhs)))) return false;
  }
  return true;
}

/// Divide f by the Blaschke factor b_a; requires f(a) = 0. The quotient g
/// satisfies b_a g = f and has the same D-norm.
template <typename T>
inline CoefficientFunction<T> blaschke_divide(const CoefficientFunction<T>& f,
                                              const DiskPoint<T>& a,
                                              T tol_vanish = T(1e-8)) {
  const auto av = to_idempotent(a.value());
  const auto divide = [&](const std::vector<std::complex<T>>& c,
                          const std::complex<T>& eta) {
    T scale = T(0);
    for (const auto& x : c) scale = std::max(scale, std::abs(x));
    const std::complex<T> at_eta = CoefficientFunction<T>::eval_poly(c, eta);
    if (std::abs(at_eta) > tol_vanish * std::max(scale, T(1)))
      throw non_vanishing_error("blaschke_divide: f does not vanish at a");
    const size_t n = c.size();
    // deflation h = f/(z - eta), run from the top coefficient (|eta| < 1)
    std::vector<std::complex<T>> h(n > 0 ? n - 1 : 0);
    std::complex<T> carry;
    for (size_t k = n; k-- > 1;) {
      carry = c[k] + eta * carry;
      h[k - 1] = carry;
    }
    // g = h (1 - conj(eta) z)
    std::vector<std::complex<T>> g(n);
    for (size_t k = 0; k < h.size(); ++k) g[k] += h[k];
    for (size_t k = 0; k + 1 < n && k < h.size(); ++k)
      g[k + 1] -= std::conj(eta) * h[k];
    return g;
  };
  return CoefficientFunction<T>(divide(f.component1(), av.b1),
                                divide(f.component2(), av.b2));
}

} // namespace bcn

#endif // BCNUM_SCHUR_HPP
