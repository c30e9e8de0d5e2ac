#include <doctest.h>

#include "bcnum/biquaternion.hpp"
#include "test_util.hpp"

using namespace bcn;
using namespace bcn::test;

namespace {
biquaterniond random_biquat(std::mt19937_64& rng) {
  return {random_bicomplex(rng), random_bicomplex(rng)};
}

double q_dist(const biquaterniond& x, const biquaterniond& y) {
  return euclidean_norm(x.q1 - y.q1) + euclidean_norm(x.q2 - y.q2);
}
} // namespace

TEST_CASE("odot conjugation: pinned values, involution, antimultiplicativity") {
  const biquaterniond one(1.0);
  CHECK(q_dist(conj_odot(one), one) < 1e-15);

  const biquaterniond i2{bicomplexd(), bicomplexd(1.0)};
  CHECK(q_dist(conj_odot(i2), -i2) < 1e-15);

  auto rng = make_rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto z = random_biquat(rng);
    const auto w = random_biquat(rng);
    CHECK(q_dist(conj_odot(conj_odot(z)), z) < 1e-13);
    CHECK(q_dist(conj_odot(z * w), conj_odot(w) * conj_odot(z)) < 1e-12);
  }
}

TEST_CASE("the other conjugations compose as listed") {
  auto rng = make_rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto z = random_biquat(rng);
    const auto w = random_biquat(rng);
    CHECK(q_dist(conj_bar(z * w), conj_bar(z) * conj_bar(w)) < 1e-12);
    CHECK(q_dist(conj_dagger1(z * w), conj_dagger1(z) * conj_dagger1(w)) <
          1e-12);
    CHECK(q_dist(conj_star(z * w), conj_star(z) * conj_star(w)) < 1e-12);
    CHECK(q_dist(conj_dagger2(z * w), conj_dagger2(z) * conj_dagger2(w)) <
          1e-12);
    CHECK(q_dist(conj_dagger3(z * w), conj_dagger3(w) * conj_dagger3(z)) <
          1e-12);
    CHECK(q_dist(conj_diamond(z * w), conj_diamond(w) * conj_diamond(z)) <
          1e-12);
    CHECK(q_dist(conj_dagger12(z), conj_dagger1(conj_dagger2(z))) < 1e-13);
    CHECK(q_dist(conj_dagger12(z), conj_dagger2(conj_dagger1(z))) < 1e-13);
  }
}

TEST_CASE("hc_inner: pinned self-products") {
  const biquaterniond one(1.0);
  CHECK(q_dist(hc_inner(one, one), one) < 1e-15);
  const biquaterniond i2{bicomplexd(), bicomplexd(1.0)};
  CHECK(q_dist(hc_inner(i2, i2), one) < 1e-15);
}

TEST_CASE("hc_inner: theorem properties (I)-(IV)") {
  auto rng = make_rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto z = random_biquat(rng);
    const auto w = random_biquat(rng);
    const auto s = random_biquat(rng);
    const auto lam = random_bicomplex(rng);

    // (I) additivity, (II) left BC-linearity
    CHECK(q_dist(hc_inner(z, w + s), hc_inner(z, w) + hc_inner(z, s)) < 1e-12);
    CHECK(q_dist(hc_inner(lam * z, w), lam * hc_inner(z, w)) < 1e-12);

    // (III) odot-Hermitian
    CHECK(q_dist(hc_inner(z, w), conj_odot(hc_inner(w, z))) < 1e-12);

    // right scalars exit through odot
    const biquaterniond lam_q{lam, bicomplexd()};
    CHECK(q_dist(hc_inner(z, lam * w), hc_inner(z, w) * conj_odot(lam_q)) <
          1e-12);

    // (IV) <Z,Z> = eta + r i i2 + s i i3 with eta in D+
    const auto self = hc_inner(z, z);
    CHECK(std::abs(self.q1.z1.imag()) < 1e-13); // eta is hyperbolic
    CHECK(std::abs(self.q1.z2.real()) < 1e-13);
    CHECK(dplus_contains(hc_inner_eta(z)));
    // residual q2 = Z2 bar(Z1) - Z1 bar(Z2) has purely imaginary coordinates
    CHECK(std::abs(self.q2.z1.real()) < 1e-13);
    CHECK(std::abs(self.q2.z2.real()) < 1e-13);
    // explicit decomposition check against the expansion
    const bicomplexd expect_q1 =
        z.q1 * conj_star(z.q1) + z.q2 * conj_star(z.q2);
    CHECK(approx_eq(self.q1, expect_q1, 1e-12));
  }

  // nondegeneracy: zero only at zero
  CHECK(q_dist(hc_inner(biquaterniond(), biquaterniond()), biquaterniond()) ==
        0.0);
  for (int t = 0; t < 50; ++t) {
    const auto z = random_biquat(rng);
    if (q_dist(z, biquaterniond()) > 1e-6)
      CHECK(euclid_abs(hc_inner_eta(z)) > 1e-12);
  }
}

TEST_CASE("first bicomplex component is the BC^2 canonical product") {
  auto rng = make_rng(14);
  for (int t = 0; t < 100; ++t) {
    const auto z = random_biquat(rng);
    const auto w = random_biquat(rng);
    const bicomplexd canonical =
        z.q1 * conj_star(w.q1) + z.q2 * conj_star(w.q2);
    CHECK(approx_eq(hc_inner(z, w).q1, canonical, 1e-12));
  }
}
