#ifndef BCNUM_MATRIX_HPP
#define BCNUM_MATRIX_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "bcnum/scalar.hpp"

namespace bcn {

/// Dense bicomplex matrix, stored as the idempotent pair of complex
/// matrices: A = A1 e + A2 e_dag. Ring operations are componentwise; entries
/// are reconstructed on access.
template <typename T> class BCMatrix {
public:
  using cscalar = std::complex<T>;
  using cmat = Eigen::Matrix<cscalar, Eigen::Dynamic, Eigen::Dynamic>;

  BCMatrix() = default;
  BCMatrix(Eigen::Index rows, Eigen::Index cols)
      : a1_(cmat::Zero(rows, cols)), a2_(cmat::Zero(rows, cols)) {}
  BCMatrix(cmat a1, cmat a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
    if (a1_.rows() != a2_.rows() || a1_.cols() != a2_.cols())
      throw shape_mismatch_error("BCMatrix: component shapes differ");
  }

  static BCMatrix Identity(Eigen::Index n) {
    return BCMatrix(cmat::Identity(n, n), cmat::Identity(n, n));
  }
  static BCMatrix Zero(Eigen::Index rows, Eigen::Index cols) {
    return BCMatrix(rows, cols);
  }

  Eigen::Index rows() const { return a1_.rows(); }
  Eigen::Index cols() const { return a1_.cols(); }
  bool is_square() const { return rows() == cols(); }

  const cmat& component1() const { return a1_; }
  const cmat& component2() const { return a2_; }

  bicomplex<T> operator()(Eigen::Index i, Eigen::Index j) const {
    return from_idempotent(a1_(i, j), a2_(i, j));
  }
  void set(Eigen::Index i, Eigen::Index j, const bicomplex<T>& v) {
    const auto p = to_idempotent(v);
    a1_(i, j) = p.b1;
    a2_(i, j) = p.b2;
  }

  /// Largest entry magnitude across both components; the scale used by
  /// relative tolerances.
  T scale() const {
    const T m1 = a1_.size() ? a1_.cwiseAbs().maxCoeff() : T(0);
    const T m2 = a2_.size() ? a2_.cwiseAbs().maxCoeff() : T(0);
    return std::max(m1, m2);
  }

  BCMatrix operator-() const { return BCMatrix(-a1_, -a2_); }

  friend BCMatrix operator+(const BCMatrix& x, const BCMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
      throw shape_mismatch_error("matrix +: shapes differ");
    return BCMatrix(x.a1_ + y.a1_, x.a2_ + y.a2_);
  }
  friend BCMatrix operator-(const BCMatrix& x, const BCMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
      throw shape_mismatch_error("matrix -: shapes differ");
    return BCMatrix(x.a1_ - y.a1_, x.a2_ - y.a2_);
  }
  friend BCMatrix operator*(const BCMatrix& x, const BCMatrix& y) {
    if (x.cols() != y.rows())
      throw shape_mismatch_error("matrix *: inner dimensions differ");
    return BCMatrix(x.a1_ * y.a1_, x.a2_ * y.a2_);
  }
  friend BCMatrix operator*(const bicomplex<T>& s, const BCMatrix& x) {
    const auto p = to_idempotent(s);
    return BCMatrix(p.b1 * x.a1_, p.b2 * x.a2_);
  }
  friend BCMatrix operator*(const BCMatrix& x, const bicomplex<T>& s) {
    return s * x;
  }

private:
  cmat a1_, a2_;
};

using BCMatrixd = BCMatrix<double>;

template <typename T>
inline std::pair<typename BCMatrix<T>::cmat, typename BCMatrix<T>::cmat>
mat_split(const BCMatrix<T>& a) {
  return {a.component1(), a.component2()};
}

template <typename T>
inline BCMatrix<T> mat_join(const typename BCMatrix<T>::cmat& a1,
                            const typename BCMatrix<T>::cmat& a2) {
  return BCMatrix<T>(a1, a2);
}

// cartesian parts: A = C1 + j C2, with A1 = C1 - i C2 and A2 = C1 + i C2
template <typename T>
inline std::pair<typename BCMatrix<T>::cmat, typename BCMatrix<T>::cmat>
cartesian_parts(const BCMatrix<T>& a) {
  const std::complex<T> i(0, 1);
  return {((a.component1() + a.component2()) / T(2)).eval(),
          (i * (a.component1() - a.component2()) / T(2)).eval()};
}

template <typename T> inline BCMatrix<T> transpose(const BCMatrix<T>& a) {
  return BCMatrix<T>(a.component1().transpose(), a.component2().transpose());
}
template <typename T> inline BCMatrix<T> conj_bar(const BCMatrix<T>& a) {
  return BCMatrix<T>(a.component2().conjugate(), a.component1().conjugate());
}
template <typename T> inline BCMatrix<T> conj_dagger(const BCMatrix<T>& a) {
  return BCMatrix<T>(a.component2(), a.component1());
}
template <typename T> inline BCMatrix<T> conj_star(const BCMatrix<T>& a) {
  return BCMatrix<T>(a.component1().conjugate(), a.component2().conjugate());
}
template <typename T> inline BCMatrix<T> dagger_t(const BCMatrix<T>& a) {
  return BCMatrix<T>(a.component2().transpose(), a.component1().transpose());
}
template <typename T> inline BCMatrix<T> bar_t(const BCMatrix<T>& a) {
  return BCMatrix<T>(a.component2().adjoint(), a.component1().adjoint());
}
/// The *-adjoint A^{*t}; componentwise complex adjoint.
template <typename T> inline BCMatrix<T> star_t(const BCMatrix<T>& a) {
  return BCMatrix<T>(a.component1().adjoint(), a.component2().adjoint());
}

template <typename T> inline bicomplex<T> det(const BCMatrix<T>& a) {
  if (!a.is_square()) throw not_square_error("det: matrix not square");
  if (a.rows() == 0) return bicomplex<T>(T(1));
  return from_idempotent(a.component1().determinant(),
                         a.component2().determinant());
}

template <typename T> inline BCMatrix<T> inverse(const BCMatrix<T>& a) {
  if (!a.is_square()) throw not_square_error("inverse: matrix not square");
  Eigen::FullPivLU<typename BCMatrix<T>::cmat> lu1(a.component1());
  lu1.setThreshold(T(tol::zero_divisor_eps));
  if (!lu1.isInvertible())
    throw singular_error(1, "inverse: component 1 numerically singular");
  Eigen::FullPivLU<typename BCMatrix<T>::cmat> lu2(a.component2());
  lu2.setThreshold(T(tol::zero_divisor_eps));
  if (!lu2.isInvertible())
    throw singular_error(2, "inverse: component 2 numerically singular");
  return BCMatrix<T>(lu1.inverse(), lu2.inverse());
}

struct hermitian_flags {
  bool dagger = false;
  bool bar = false;
  bool star = false;
};

template <typename T>
inline hermitian_flags classify_hermitian(const BCMatrix<T>& a,
                                          T rel_tol = T(tol::eps_rel) * 100) {
  if (!a.is_square())
    throw not_square_error("classify_hermitian: matrix not square");
  if (a.rows() == 0) return {true, true, true};
  const T s = std::max(a.scale(), T(1));
  const auto& a1 = a.component1();
  const auto& a2 = a.component2();
  hermitian_flags f;
  f.dagger = (a1 - a2.transpose()).cwiseAbs().maxCoeff() <= rel_tol * s;
  f.bar = (a1 - a2.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * s;
  f.star = (a1 - a1.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * s &&
           (a2 - a2.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * s;
  return f;
}

namespace detail {

template <typename M> inline typename M::RealScalar min_herm_eig(const M& m) {
  using T = typename M::RealScalar;
  if (m.rows() == 0) return T(0);
  Eigen::SelfAdjointEigenSolver<M> es(((m + m.adjoint()) / T(2)).eval(),
                                      Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// PSD square root of a Hermitian matrix; eigenvalues below zero are clamped.
template <typename M> inline M herm_sqrt(const M& m) {
  using T = typename M::RealScalar;
  Eigen::SelfAdjointEigenSolver<M> es(((m + m.adjoint()) / T(2)).eval());
  auto lam = es.eigenvalues().cwiseMax(T(0)).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() *
         es.eigenvectors().adjoint();
}

// Sampling columns for quadratic-form certificates: the 2n canonical columns
// e_k, i e_k plus the n(n-1) pair sums e_k + e_l, e_k + i e_l (k < l).
template <typename T>
inline std::vector<Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>>
certificate_columns(Eigen::Index n) {
  using cvec = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;
  const std::complex<T> i(0, 1);
  std::vector<cvec> cols;
  for (Eigen::Index k = 0; k < n; ++k) {
    cvec c = cvec::Zero(n);
    c(k) = T(1);
    cols.push_back(c);
    c(k) = i;
    cols.push_back(c);
  }
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = k + 1; l < n; ++l) {
      cvec c = cvec::Zero(n);
      c(k) = T(1);
      c(l) = T(1);
      cols.push_back(c);
      c(l) = i;
      cols.push_back(c);
    }
  return cols;
}

} // namespace detail

/// Result of evaluating the three equivalent positivity characterizations:
/// (a) sampled quadratic-form cone membership, (b) componentwise PSD,
/// (c) cartesian conditions. is_positive() follows (b) + *-Hermitian.
template <typename T> struct PositivityReport {
  bool is_star_hermitian = false;
  std::pair<bool, bool> component_psd{false, false};
  std::pair<T, T> min_component_eigenvalues{T(0), T(0)};
  bool quadratic_form_in_cone = false; // (a), a sampling certificate
  bool cartesian_conditions = false;   // (c)
  std::optional<BCMatrix<T>> certificate; // B with B^{*t} B = A

  bool is_positive() const {
    return is_star_hermitian && component_psd.first && component_psd.second;
  }
};

template <typename T>
inline PositivityReport<T>
is_hyperbolic_positive(const BCMatrix<T>& a, T tol = T(tol::psd_floor_rel)) {
  if (!a.is_square())
    throw not_square_error("is_hyperbolic_positive: matrix not square");
  using cmat = typename BCMatrix<T>::cmat;
  const T s = std::max(a.scale(), T(1));
  const T floor = tol * s;
  PositivityReport<T> rep;

  const auto& a1 = a.component1();
  const auto& a2 = a.component2();
  rep.is_star_hermitian =
      (a1 - a1.adjoint()).cwiseAbs().maxCoeff() <= floor &&
      (a2 - a2.adjoint()).cwiseAbs().maxCoeff() <= floor;

  // (b) component PSD via Hermitian eigenvalue floor
  rep.min_component_eigenvalues = {detail::min_herm_eig(a1),
                                   detail::min_herm_eig(a2)};
  rep.component_psd = {rep.is_star_hermitian &&
                           rep.min_component_eigenvalues.first >= -floor,
                       rep.is_star_hermitian &&
                           rep.min_component_eigenvalues.second >= -floor};

  // (a) c^{*t} A c in D+ on the certificate columns
  rep.quadratic_form_in_cone = true;
  for (const auto& c : detail::certificate_columns<T>(a.rows())) {
    const std::complex<T> q1 = c.dot(a1 * c); // dot conjugates the left arg
    const std::complex<T> q2 = c.dot(a2 * c);
    const bicomplex<T> v = from_idempotent(q1, q2);
    const bool in_d = std::abs(v.z1.imag()) <= floor &&
                      std::abs(v.z2.real()) <= floor;
    if (!in_d || !dplus_contains(hyperbolic_part(v), floor)) {
      rep.quadratic_form_in_cone = false;
      break;
    }
  }

  // (c) cartesian: C1 >= 0, C2 skew self-adjoint, -C1 <= i C2 <= C1
  {
    const auto [c1, c2] = cartesian_parts(a);
    const std::complex<T> i(0, 1);
    const bool c1_psd = (c1 - c1.adjoint()).cwiseAbs().maxCoeff() <= floor &&
                        detail::min_herm_eig(c1) >= -floor;
    const bool c2_skew = (c2 + c2.adjoint()).cwiseAbs().maxCoeff() <= floor;
    const cmat lower = (c1 - i * c2).eval(); // equals A1 when skew holds
    const cmat upper = (c1 + i * c2).eval();
    rep.cartesian_conditions = c1_psd && c2_skew &&
                               detail::min_herm_eig(lower) >= -floor &&
                               detail::min_herm_eig(upper) >= -floor;
  }

  if (rep.is_positive())
    rep.certificate = BCMatrix<T>(detail::herm_sqrt(a1), detail::herm_sqrt(a2));
  return rep;
}

/// Factor a hyperbolic positive A as B^{*t} B (= B^2 with B positive).
template <typename T>
inline BCMatrix<T> positive_factor(const BCMatrix<T>& a,
                                   T tol = T(tol::psd_floor_rel)) {
  auto rep = is_hyperbolic_positive(a, tol);
  if (!rep.is_positive())
    throw not_positive_error("positive_factor: matrix not hyperbolic positive");
  return *rep.certificate;
}

/// Spectra of the idempotent components. lambda = g1 e + g2 e_dag with both
/// eigenvector components nonzero is an eigenvalue of A iff g1 in spec(A1)
/// and g2 in spec(A2).
template <typename T>
inline std::pair<Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>,
                 Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>>
component_spectra(const BCMatrix<T>& a) {
  if (!a.is_square())
    throw not_square_error("component_spectra: matrix not square");
  using cmat = typename BCMatrix<T>::cmat;
  Eigen::ComplexEigenSolver<cmat> es1(a.component1(), false);
  Eigen::ComplexEigenSolver<cmat> es2(a.component2(), false);
  return {es1.eigenvalues(), es2.eigenvalues()};
}

template <typename T>
inline bool is_star_unitary(const BCMatrix<T>& u,
                            T rel_tol = T(tol::psd_floor_rel)) {
  if (!u.is_square())
    throw not_square_error("is_star_unitary: matrix not square");
  using cmat = typename BCMatrix<T>::cmat;
  const Eigen::Index n = u.rows();
  const cmat id = cmat::Identity(n, n);
  const T s = std::max(u.scale(), T(1));
  const T tol_ = rel_tol * s * std::max<T>(T(1), T(n));
  const auto& u1 = u.component1();
  const auto& u2 = u.component2();
  const bool comps =
      (u1 * u1.adjoint() - id).cwiseAbs().maxCoeff() <= tol_ &&
      (u1.adjoint() * u1 - id).cwiseAbs().maxCoeff() <= tol_ &&
      (u2 * u2.adjoint() - id).cwiseAbs().maxCoeff() <= tol_ &&
      (u2.adjoint() * u2 - id).cwiseAbs().maxCoeff() <= tol_;
  // cartesian conditions of the unitarity proposition
  const auto [c1, c2] = cartesian_parts(u);
  const bool cart =
      (c1 * c1.adjoint() + c2 * c2.adjoint() - id).cwiseAbs().maxCoeff() <=
          tol_ &&
      (c1.adjoint() * c1 + c2.adjoint() * c2 - id).cwiseAbs().maxCoeff() <=
          tol_ &&
      (c2 * c1.adjoint() - c1 * c2.adjoint()).cwiseAbs().maxCoeff() <= tol_ &&
      (c1.adjoint() * c2 - c2.adjoint() * c1).cwiseAbs().maxCoeff() <= tol_;
  return comps && cart;
}

struct forcing_report {
  bool samples_in_d = false;     // premise: b^t A b* in D on the sample set
  bool is_star_hermitian = false; // conclusion: A = A^{*t}
  bool implication_holds = false;
};

/// Polarization consequence: if b^t A b* lies in D for the spanning sample
/// set, A must be *-Hermitian. Samples are e_k, e_k ± e_l, e_k ± i e_l.
template <typename T>
inline forcing_report hermitian_forcing_check(const BCMatrix<T>& a,
                                              T rel_tol = T(tol::psd_floor_rel)) {
  if (!a.is_square())
    throw not_square_error("hermitian_forcing_check: matrix not square");
  using cvec = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;
  const Eigen::Index n = a.rows();
  const T floor = rel_tol * std::max(a.scale(), T(1));
  const std::complex<T> i(0, 1);

  std::vector<cvec> samples;
  for (Eigen::Index k = 0; k < n; ++k) {
    cvec c = cvec::Zero(n);
    c(k) = T(1);
    samples.push_back(c);
  }
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = k + 1; l < n; ++l)
      for (const std::complex<T> w : {std::complex<T>(1), std::complex<T>(-1),
                                      i, -i}) {
        cvec c = cvec::Zero(n);
        c(k) = T(1);
        c(l) = w;
        samples.push_back(c);
      }

  forcing_report rep;
  rep.samples_in_d = true;
  for (const auto& b : samples) {
    // b^t A b* with b complex: componentwise b^t A_l conj(b)
    const std::complex<T> q1 =
        (b.transpose() * a.component1() * b.conjugate()).value();
    const std::complex<T> q2 =
        (b.transpose() * a.component2() * b.conjugate()).value();
    const bicomplex<T> v = from_idempotent(q1, q2);
    if (std::abs(v.z1.imag()) > floor || std::abs(v.z2.real()) > floor) {
      rep.samples_in_d = false;
      break;
    }
  }
  const auto& a1 = a.component1();
  const auto& a2 = a.component2();
  rep.is_star_hermitian =
      (a1 - a1.adjoint()).cwiseAbs().maxCoeff() <= floor &&
      (a2 - a2.adjoint()).cwiseAbs().maxCoeff() <= floor;
  rep.implication_holds = !rep.samples_in_d || rep.is_star_hermitian;
  return rep;
}

} // namespace bcn

#endif // BCNUM_MATRIX_HPP
