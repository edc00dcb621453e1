#pragma once

// Shared generators and independent oracles for the test suites.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk::test {

// a = e^{i phi1} cos(theta), b = e^{i phi2} sin(theta), delta = e^{i phi3},
// c = -delta conj(b), d = delta conj(a): unitary by construction. theta is kept
// away from 0 and pi/2 by `margin` so that abcd != 0.
inline Coin random_coin(std::mt19937_64& rng, double margin = 0.05) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> theta(margin, std::numbers::pi / 2 - margin);
  const double t = theta(rng);
  const cplx a = std::polar(std::cos(t), angle(rng));
  const cplx b = std::polar(std::sin(t), angle(rng));
  const cplx delta = std::polar(1.0, angle(rng));
  return validate_coin({a, b, -delta * std::conj(b), delta * std::conj(a)});
}

inline Coin coin_from_angles(double theta, double phi1, double phi2, double phi3) {
  const cplx a = std::polar(std::cos(theta), phi1);
  const cplx b = std::polar(std::sin(theta), phi2);
  const cplx delta = std::polar(1.0, phi3);
  return validate_coin({a, b, -delta * std::conj(b), delta * std::conj(a)});
}

// b = 0: diag(e^{i p}, e^{i q}).
inline Coin b_zero_coin(double p, double q) {
  return validate_coin({std::polar(1.0, p), 0.0, 0.0, std::polar(1.0, q)});
}

// a = 0: [[0, e^{i p}], [e^{i q}, 0]].
inline Coin a_zero_coin(double p, double q) {
  return validate_coin({0.0, std::polar(1.0, p), std::polar(1.0, q), 0.0});
}

inline Qubit random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const cplx alpha(g(rng), g(rng));
  const cplx beta(g(rng), g(rng));
  const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  return make_qubit(alpha / norm, beta / norm);
}

// A qubit in the symmetric class of `coin`: |alpha| = |beta| = 1/sqrt(2) and
// arg(a alpha conj(b beta)) = +-pi/2, so the cross term vanishes.
inline Qubit perp_qubit(const Coin& coin, double phase, bool plus) {
  const double h = 1.0 / std::sqrt(2.0);
  const double arg_beta = std::arg(coin.a()) + phase - std::arg(coin.b()) + (plus ? -1 : 1) * std::numbers::pi / 2;
  return make_qubit(std::polar(h, phase), std::polar(h, arg_beta));
}

// |alpha| != |beta| with vanishing cross term (mu = 0 when |a| = |b|).
inline Qubit orthogonal_phase_qubit(const Coin& coin, double t) {
  const double arg_beta = std::arg(coin.a()) - std::arg(coin.b()) - std::numbers::pi / 2;
  return make_qubit(std::cos(t), std::polar(std::sin(t), arg_beta));
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

// Antiderivative of the limit density in closed form. With x = A sin t,
//   F = (atan(sqrt(1-A^2) tan t) + pi/2 + lambda atan(A cos t / sqrt(1-A^2))) / pi.
inline double limit_cdf_closed(double abs_a, double lambda, double x) {
  if (x <= -abs_a) return 0.0;
  if (x >= abs_a) return 1.0;
  const double t = std::asin(x / abs_a);
  const double r = std::sqrt(1.0 - abs_a * abs_a);
  return (std::atan(r * std::tan(t)) + std::numbers::pi / 2 + lambda * std::atan(abs_a * std::cos(t) / r)) /
         std::numbers::pi;
}

}  // namespace qwalk::test
