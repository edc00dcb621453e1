#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/symmetry.hpp"
#include "support.hpp"

using namespace qwalk;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("classify named cases") {
  const Coin h = Coin::hadamard();
  CHECK(classify(h, make_qubit(kH, cplx(0.0, kH))));
  CHECK(classify(h, make_qubit(kH, cplx(0.0, -kH))));
  for (double theta : {0.0, 1.0, 2.5}) CHECK_FALSE(classify(h, make_qubit(0.0, std::polar(1.0, theta))));
  CHECK_FALSE(classify(h, make_qubit(kH, kH)));
  try {
    classify(test::b_zero_coin(0.0, 0.0), make_qubit(kH, kH));
    FAIL("expected DegenerateCoin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateCoin);
  }
}

TEST_CASE("verify_symmetry named cases") {
  const Coin h = Coin::hadamard();
  const auto sym = verify_symmetry(h, make_qubit(kH, cplx(0.0, kH)), 20);
  CHECK(sym.in_phi_perp);
  REQUIRE(sym.evidence.size() == 20);
  for (const auto& r : sym.evidence) CHECK(r.max_asymmetry < 1e-12);
  CHECK(sym.symmetric());

  const auto left = verify_symmetry(h, make_qubit(1.0, 0.0), 3);
  CHECK_FALSE(left.in_phi_perp);
  CHECK(left.evidence.at(2).n == 3);
  CHECK(left.evidence.at(2).max_asymmetry > 0.1);

  const auto b0 = verify_symmetry(test::b_zero_coin(0.4, -1.0), make_qubit(kH, kH), 10);
  CHECK_FALSE(b0.in_phi_perp);
  CHECK(b0.symmetric());
}

TEST_CASE("mean_zero_check named cases") {
  const Coin h = Coin::hadamard();
  CHECK(mean_zero_check(h, make_qubit(kH, cplx(0.0, kH)), 10));
  CHECK_FALSE(mean_zero_check(h, make_qubit(0.0, 1.0), 10));
  // mu = 0 but |alpha| != |beta|: the mean is nonzero for some n >= 3.
  CHECK_FALSE(mean_zero_check(h, test::orthogonal_phase_qubit(h, 0.3), 10));
  CHECK_THROWS_AS(mean_zero_check(h, make_qubit(1.0, 0.0), 2), Error);
}

TEST_CASE("membership, mirror symmetry and zero mean agree on 50 pairs") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  int members = 0;
  for (int t = 0; t < 50; ++t) {
    const Coin c = test::random_coin(rng);
    Qubit phi = test::random_qubit(rng);
    switch (t % 3) {
      case 0: phi = test::perp_qubit(c, angle(rng), t % 2 == 0); break;
      case 1: phi = test::orthogonal_phase_qubit(c, angle(rng)); break;
      default: break;
    }
    const bool in_perp = classify(c, phi);
    const bool symmetric = verify_symmetry(c, phi, 10).symmetric();
    const bool zero_mean = mean_zero_check(c, phi, 10);
    CHECK(in_perp == symmetric);
    CHECK(in_perp == zero_mean);
    members += in_perp;
  }
  CHECK(members >= 15);
  CHECK(members < 50);
}

TEST_CASE("membership ignores the global phase of the qubit") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 20; ++t) {
    const Coin c = test::random_coin(rng);
    const Qubit phi = t % 2 ? test::perp_qubit(c, 0.4 * t, true) : test::random_qubit(rng);
    for (double theta : {0.3, 1.7, 4.0}) {
      const cplx g = std::polar(1.0, theta);
      CHECK(classify(c, phi) == classify(c, make_qubit(g * phi.alpha(), g * phi.beta())));
    }
  }
}

TEST_CASE("degenerate coins run only the empirical checks") {
  const Coin a0 = test::a_zero_coin(0.3, 1.4);
  std::mt19937_64 rng(63);
  const Qubit phi = test::random_qubit(rng);
  const auto v = verify_symmetry(a0, phi, 8);
  CHECK_FALSE(v.in_phi_perp);
  for (const auto& r : v.evidence) {
    if (r.n % 2 == 0) CHECK(r.max_asymmetry < 1e-12);
  }
}
