#ifndef BCNUM_SPACE_HPP
#define BCNUM_SPACE_HPP

#include <array>

#include "bcnum/matrix.hpp"

namespace bcn {

/// Element of BC^n, stored as the idempotent pair of complex vectors.
template <typename T> class BCVector {
public:
  using cscalar = std::complex<T>;
  using cvec = Eigen::Matrix<cscalar, Eigen::Dynamic, 1>;

  BCVector() = default;
  explicit BCVector(Eigen::Index n)
      : v1_(cvec::Zero(n)), v2_(cvec::Zero(n)) {}
  BCVector(cvec v1, cvec v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
    if (v1_.size() != v2_.size())
      throw shape_mismatch_error("BCVector: component sizes differ");
  }
  explicit BCVector(const std::vector<bicomplex<T>>& entries)
      : v1_(cvec::Zero(static_cast<Eigen::Index>(entries.size()))),
        v2_(cvec::Zero(static_cast<Eigen::Index>(entries.size()))) {
    for (Eigen::Index k = 0; k < v1_.size(); ++k) {
      const auto p = to_idempotent(entries[static_cast<size_t>(k)]);
      v1_(k) = p.b1;
      v2_(k) = p.b2;
    }
  }

  Eigen::Index size() const { return v1_.size(); }
  const cvec& component1() const { return v1_; }
  const cvec& component2() const { return v2_; }

  bicomplex<T> operator()(Eigen::Index k) const {
    return from_idempotent(v1_(k), v2_(k));
  }
  void set(Eigen::Index k, const bicomplex<T>& v) {
    const auto p = to_idempotent(v);
    v1_(k) = p.b1;
    v2_(k) = p.b2;
  }

  BCVector operator-() const { return BCVector(-v1_, -v2_); }

  friend BCVector operator+(const BCVector& x, const BCVector& y) {
    if (x.size() != y.size())
      throw shape_mismatch_error("vector +: sizes differ");
    return BCVector(x.v1_ + y.v1_, x.v2_ + y.v2_);
  }
  friend BCVector operator-(const BCVector& x, const BCVector& y) {
    if (x.size() != y.size())
      throw shape_mismatch_error("vector -: sizes differ");
    return BCVector(x.v1_ - y.v1_, x.v2_ - y.v2_);
  }
  friend BCVector operator*(const bicomplex<T>& s, const BCVector& x) {
    const auto p = to_idempotent(s);
    return BCVector(p.b1 * x.v1_, p.b2 * x.v2_);
  }
  friend BCVector operator*(const BCMatrix<T>& a, const BCVector& x) {
    if (a.cols() != x.size())
      throw shape_mismatch_error("matrix * vector: shapes differ");
    return BCVector(a.component1() * x.v1_, a.component2() * x.v2_);
  }

private:
  cvec v1_, v2_;
};

using BCVectord = BCVector<double>;

/// Canonical inner product <Z,W> = sum Z_k W_k^*.
template <typename T>
inline bicomplex<T> inner_canonical(const BCVector<T>& z,
                                    const BCVector<T>& w) {
  if (z.size() != w.size())
    throw shape_mismatch_error("inner_canonical: sizes differ");
  return from_idempotent(w.component1().dot(z.component1()),
                         w.component2().dot(z.component2()));
}

/// A-weighted product <Z,W>_A = Z^t A W^* for hyperbolic positive A.
template <typename T>
inline bicomplex<T> inner_weighted(const BCVector<T>& z, const BCVector<T>& w,
                                   const BCMatrix<T>& a,
                                   T tol = T(tol::psd_floor_rel)) {
  if (z.size() != w.size() || a.rows() != z.size() || a.cols() != z.size())
    throw shape_mismatch_error("inner_weighted: shapes differ");
  if (!is_hyperbolic_positive(a, tol).is_positive())
    throw not_positive_error("inner_weighted: gram not hyperbolic positive");
  const std::complex<T> q1 = (z.component1().transpose() * a.component1() *
                              w.component1().conjugate())
                                 .value();
  const std::complex<T> q2 = (z.component2().transpose() * a.component2() *
                              w.component2().conjugate())
                                 .value();
  return from_idempotent(q1, q2);
}

template <typename T> struct vector_norms {
  T euclidean;          // (1/sqrt2) sqrt(|Z1|^2 + |Z2|^2)
  hyperbolic<T> d_norm; // |Z1| e + |Z2| e_dag
};

template <typename T> inline vector_norms<T> norms(const BCVector<T>& z) {
  const T n1 = z.component1().norm();
  const T n2 = z.component2().norm();
  return {std::sqrt((n1 * n1 + n2 * n2) / T(2)),
          hyperbolic<T>::from_idempotent(n1, n2)};
}

template <typename T>
inline vector_norms<T> norms(const BCVector<T>& z, const BCMatrix<T>& a,
                             T tol = T(tol::psd_floor_rel)) {
  const hyperbolic<T> sq = hyperbolic_part(inner_weighted(z, z, a, tol));
  const auto d = sqrt_dplus(sq);
  const T n1 = d.idem1(), n2 = d.idem2();
  return {std::sqrt((n1 * n1 + n2 * n2) / T(2)), d};
}

/// Both Schwarz inequalities: |<x,y>| <= sqrt(2) ||x|| ||y|| and
/// |<x,y>|_k D-below ||x||_D ||y||_D. For n = 1 the second is an equality.
template <typename T>
inline std::pair<bool, bool> schwarz_check(const BCVector<T>& x,
                                           const BCVector<T>& y,
                                           T eps = T(tol::order_eps)) {
  const bicomplex<T> ip = inner_canonical(x, y);
  const auto nx = norms(x), ny = norms(y);
  const bool first =
      euclidean_norm(ip) <=
      std::sqrt(T(2)) * nx.euclidean * ny.euclidean + eps;
  const bool second =
      order_leq(hyperbolic_norm(ip), nx.d_norm * ny.d_norm, eps);
  return {first, second};
}

/// BC-linear functional x -> sum c_k x_k, held by its coefficient vector.
template <typename T> struct LinearFunctional {
  BCVector<T> coeffs;

  bicomplex<T> operator()(const BCVector<T>& x) const {
    if (x.size() != coeffs.size())
      throw shape_mismatch_error("functional: sizes differ");
    const std::complex<T> s1 =
        (coeffs.component1().transpose() * x.component1()).value();
    const std::complex<T> s2 =
        (coeffs.component2().transpose() * x.component2()).value();
    return from_idempotent(s1, s2);
  }

  // idempotent and cartesian split: f = f1i e + f2i e_dag = F1 + F2 j
  std::complex<T> f1_i(const BCVector<T>& x) const { return pi1_i((*this)(x)); }
  std::complex<T> f2_i(const BCVector<T>& x) const { return pi2_i((*this)(x)); }
  std::complex<T> F1(const BCVector<T>& x) const { return Pi1_i((*this)(x)); }
  std::complex<T> F2(const BCVector<T>& x) const { return Pi2_i((*this)(x)); }
};

/// Riesz representer of f(x) = sum c_k x_k under the canonical product:
/// y_k = c_k^*.
template <typename T>
inline BCVector<T> riesz_representer(const LinearFunctional<T>& f) {
  const Eigen::Index n = f.coeffs.size();
  BCVector<T> y(n);
  for (Eigen::Index k = 0; k < n; ++k)
    y.set(k, conj_star(f.coeffs(k)));
  return y;
}

/// *-Hermitian, *-sesquilinear form B(x,y) = x^t G y^*.
template <typename T> struct SesquilinearForm {
  BCMatrix<T> gram;

  bicomplex<T> operator()(const BCVector<T>& x, const BCVector<T>& y) const {
    if (x.size() != gram.rows() || y.size() != gram.cols())
      throw shape_mismatch_error("form: shapes differ");
    const std::complex<T> q1 = (x.component1().transpose() *
                                gram.component1() * y.component1().conjugate())
                                   .value();
    const std::complex<T> q2 = (x.component2().transpose() *
                                gram.component2() * y.component2().conjugate())
                                   .value();
    return from_idempotent(q1, q2);
  }
};

/// The four polarization identities recovering B(x,y) from Q(v) = B(v,v),
/// in the order (1,i), (j,k), (1,j), (i,k).
template <typename T>
inline std::array<bicomplex<T>, 4>
polarization_eval(const SesquilinearForm<T>& b, const BCVector<T>& x,
                  const BCVector<T>& y) {
  const auto q = [&](const BCVector<T>& v) { return b(v, v); };
  const bicomplex<T> i = bicomplex<T>::i();
  const bicomplex<T> j = bicomplex<T>::j();
  const bicomplex<T> k = bicomplex<T>::k();
  const bicomplex<T> q_p = q(x + y), q_m = q(x - y);
  const bicomplex<T> q_ip = q(x + i * y), q_im = q(x - i * y);
  const bicomplex<T> q_jp = q(x + j * y), q_jm = q(x - j * y);
  const bicomplex<T> q_kp = q(x + k * y), q_km = q(x - k * y);
  const T quarter = T(0.25);
  return {quarter * (q_p - q_m + i * (q_ip - q_im)),
          quarter * (j * (q_jp - q_jm) + k * (q_kp - q_km)),
          quarter * (q_p - q_m + j * (q_jp - q_jm)),
          quarter * (i * (q_ip - q_im) + k * (q_kp - q_km))};
}

/// D-bounded linear operator on BC^n; T = e T1 + e_dag T2.
template <typename T> struct BCOperator {
  BCMatrix<T> matrix;

  BCVector<T> operator()(const BCVector<T>& x) const { return matrix * x; }
};

/// ||T||_D = e sigma_max(T1) + e_dag sigma_max(T2).
template <typename T>
inline hyperbolic<T> op_dnorm(const BCOperator<T>& t) {
  using cmat = typename BCMatrix<T>::cmat;
  const auto svd1 = Eigen::JacobiSVD<cmat>(t.matrix.component1());
  const auto svd2 = Eigen::JacobiSVD<cmat>(t.matrix.component2());
  const T s1 = svd1.singularValues().size() ? svd1.singularValues()(0) : T(0);
  const T s2 = svd2.singularValues().size() ? svd2.singularValues()(0) : T(0);
  return hyperbolic<T>::from_idempotent(s1, s2);
}

/// Adjoint against the canonical product: <Tx,y> = <x, T# y>, T# = A^{*t}.
template <typename T>
inline BCOperator<T> op_adjoint(const BCOperator<T>& t) {
  return {star_t(t.matrix)};
}

} // namespace bcn

#endif // BCNUM_SPACE_HPP
