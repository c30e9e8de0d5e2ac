#ifndef BCNUM_BIQUATERNION_HPP
#define BCNUM_BIQUATERNION_HPP

#include "bcnum/scalar.hpp"

namespace bcn {

/// Biquaternion Q = q1 + q2*i2, seen as a BC-module over the copy of BC
/// spanned by {1, i, i1, k = i*i1}. Multiplication uses i2*Z = dagger(Z)*i2.
template <typename T> struct biquaternion {
  bicomplex<T> q1{};
  bicomplex<T> q2{};

  biquaternion() = default;
  biquaternion(const bicomplex<T>& q1_, const bicomplex<T>& q2_)
      : q1(q1_), q2(q2_) {}
  biquaternion(T re) : q1(re), q2() {}

  biquaternion operator-() const { return {-q1, -q2}; }

  friend biquaternion operator+(const biquaternion& x, const biquaternion& y) {
    return {x.q1 + y.q1, x.q2 + y.q2};
  }
  friend biquaternion operator-(const biquaternion& x, const biquaternion& y) {
    return {x.q1 - y.q1, x.q2 - y.q2};
  }
  friend biquaternion operator*(const biquaternion& x, const biquaternion& y) {
    return {x.q1 * y.q1 - x.q2 * conj_dagger(y.q2),
            x.q1 * y.q2 + x.q2 * conj_dagger(y.q1)};
  }
  // left scalar action of BC
  friend biquaternion operator*(const bicomplex<T>& s, const biquaternion& x) {
    return {s * x.q1, s * x.q2};
  }

  friend bool operator==(const biquaternion& x, const biquaternion& y) {
    return x.q1 == y.q1 && x.q2 == y.q2;
  }
};

using biquaterniond = biquaternion<double>;

// The conjugation zoo. Only odot carries inner-product structure; the rest
// are plain accessors.
template <typename T>
inline biquaternion<T> conj_bar(const biquaternion<T>& x) {
  return {conj_bar(x.q1), conj_bar(x.q2)};
}
template <typename T>
inline biquaternion<T> conj_dagger1(const biquaternion<T>& x) {
  return {conj_dagger(x.q1), conj_dagger(x.q2)};
}
template <typename T>
inline biquaternion<T> conj_star(const biquaternion<T>& x) {
  return {conj_star(x.q1), conj_star(x.q2)};
}
template <typename T>
inline biquaternion<T> conj_dagger2(const biquaternion<T>& x) {
  return {x.q1, -x.q2};
}
template <typename T>
inline biquaternion<T> conj_dagger3(const biquaternion<T>& x) {
  return {x.q1, conj_dagger(x.q2)};
}
template <typename T>
inline biquaternion<T> conj_dagger12(const biquaternion<T>& x) {
  return {conj_dagger(x.q1), -conj_dagger(x.q2)};
}
template <typename T>
inline biquaternion<T> conj_odot(const biquaternion<T>& x) {
  return {conj_star(x.q1), -conj_bar(x.q2)};
}
template <typename T>
inline biquaternion<T> conj_diamond(const biquaternion<T>& x) {
  return {conj_dagger(x.q1), -x.q2};
}

/// H(C)-valued inner product <Z,W> := Z * W^odot. Expanded form:
/// (Z1 W1* + Z2 W2*) + (Z2 bar(W1) - Z1 bar(W2)) i2.
template <typename T>
inline biquaternion<T> hc_inner(const biquaternion<T>& z,
                                const biquaternion<T>& w) {
  return z * conj_odot(w);
}

/// Cone part eta of <Z,Z> = eta + r i i2 + s i i3 (eta in D+).
template <typename T>
inline hyperbolic<T> hc_inner_eta(const biquaternion<T>& z) {
  return hyperbolic_part(hc_inner(z, z).q1);
}

} // namespace bcn

#endif // BCNUM_BIQUATERNION_HPP
