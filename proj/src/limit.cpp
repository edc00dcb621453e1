#include "qwalk/limit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qwalk/analytic.hpp"
#include "qwalk/special.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

using std::numbers::pi;

constexpr unsigned kQuadratureDepth = 20;
constexpr double kQuadratureTol = 1e-13;

// f(x) dx after x = |a| sin t.
double substituted_density(const LimitDensity& ld, double t) {
  const double a = ld.abs_a();
  const double s = std::sin(t);
  return std::sqrt(1.0 - a * a) * (1.0 - ld.lambda() * a * s) / (pi * (1.0 - a * a * s * s));
}

template <typename F>
double integrate(F f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, kQuadratureDepth,
                                                                       kQuadratureTol);
}

}  // namespace

LimitDensity::LimitDensity(const Coin& coin, const Qubit& qubit)
    : coin_(coin), qubit_(qubit), lambda_(0.0), abs_a_(std::abs(coin.a())) {
  if (!coin.generic()) throw Error(ErrorKind::DegenerateCoin, "limit density requires 0 < |a| < 1");
  const WalkParams p = WalkParams::make(coin, qubit);
  lambda_ = p.imbalance + p.cross / coin.abs_a_sq();
}

double density(const LimitDensity& ld, double x) {
  const double a = ld.abs_a();
  if (!(std::abs(x) < a)) return 0.0;
  return std::sqrt(1.0 - a * a) * (1.0 - ld.lambda() * x) / (pi * (1.0 - x * x) * std::sqrt(a * a - x * x));
}

double limit_cdf(const LimitDensity& ld, double x) {
  const double a = ld.abs_a();
  if (x <= -a) return 0.0;
  const double t = x >= a ? pi / 2 : std::asin(x / a);
  return integrate([&ld](double u) { return substituted_density(ld, u); }, -pi / 2, t);
}

double limit_moment(const LimitDensity& ld, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "moment order must be >= 1");
  const double a = ld.abs_a();
  const double root = std::sqrt(1.0 - a * a);
  if (m == 1) return -(1.0 - root) * ld.lambda();
  if (m == 2) return 1.0 - root;
  return integrate([&ld, a, m](double u) { return std::pow(a * std::sin(u), m) * substituted_density(ld, u); },
                   -pi / 2, pi / 2);
}

double normalization_via_hypergeometric(const LimitDensity& ld) {
  const double a2 = ld.abs_a() * ld.abs_a();
  const double gamma_half = std::tgamma(0.5);
  return std::sqrt(1.0 - a2) / pi * gamma_half * gamma_half * gauss_2f1({0.5, 1.0, 1.0, a2});
}

double TwoPointLimit::moment(int m) const { return p_plus + (m % 2 == 0 ? p_minus : -p_minus); }

TwoPointLimit two_point_limit(const Qubit& qubit) {
  return {std::norm(qubit.alpha()), std::norm(qubit.beta())};
}

namespace {

double ks_distance(const LimitDensity& ld, const Distribution& dist) {
  const int n = dist.time();
  const auto& probs = dist.probs();
  double worst = 0.0;

  // Jump points k/n: compare both one-sided values of F_n.
  std::vector<double> jumps;
  std::vector<double> after;
  double running = 0.0;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    const double x = static_cast<double>(-n + 2 * static_cast<int>(j)) / n;
    const double fz = limit_cdf(ld, x);
    worst = std::max(worst, std::abs(fz - running));
    running += probs[j];
    worst = std::max(worst, std::abs(fz - running));
    jumps.push_back(x);
    after.push_back(running);
  }

  const double a = ld.abs_a();
  for (int g = 0; g <= kKsGridPoints; ++g) {
    const double x = -a + 2.0 * a * g / kKsGridPoints;
    const auto it = std::upper_bound(jumps.begin(), jumps.end(), x);
    const double fn = it == jumps.begin() ? 0.0 : after[static_cast<std::size_t>(it - jumps.begin() - 1)];
    worst = std::max(worst, std::abs(limit_cdf(ld, x) - fn));
  }
  return std::min(worst, 1.0);
}

}  // namespace

ConvergenceReport ks_convergence(const Coin& coin, const Qubit& qubit, const std::vector<int>& n_list, int cap) {
  const LimitDensity ld(coin, qubit);
  ConvergenceReport report;
  for (int n : n_list) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "X_n / n needs n >= 1");
    if (n > cap) {
      throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " above cap " + std::to_string(cap));
    }
    report.points.push_back({n, ks_distance(ld, distribution(coin, qubit, n))});
  }
  return report;
}

double parity_smoothed_ks(const Coin& coin, const Qubit& qubit, int n, int cap) {
  const ConvergenceReport r = ks_convergence(coin, qubit, {n, n + 1}, cap);
  return 0.5 * (r.points[0].ks + r.points[1].ks);
}

namespace {

void require_window(const Coin& coin, double x) {
  if (!coin.generic()) throw Error(ErrorKind::DegenerateCoin, "envelope requires abcd != 0");
  const double a = std::abs(coin.a());
  if (!(x > (1.0 - a) / 2.0 && x < (1.0 + a) / 2.0)) {
    throw Error(ErrorKind::OutOfWindow, "x = " + std::to_string(x) + " outside the oscillatory window");
  }
}

}  // namespace

double asymptotics_envelope(const Coin& coin, int n, int k, int i) {
  if (n < 2 || k < 1 || 2 * k > n) throw Error(ErrorKind::OutOfWindow, "envelope needs 1 <= k <= n/2");
  require_window(coin, static_cast<double>(k) / n);
  return static_cast<double>(std::abs(rho_scaled(coin.abs_a_sq(), n, k, i)) * std::sqrt(static_cast<long double>(n)));
}

double local_envelope(const Coin& coin, int n, double x, int i, int half_width) {
  if (half_width < 0) throw Error(ErrorKind::InvalidArgument, "half width must be >= 0");
  const int center = static_cast<int>(std::lround(x * n));
  double best = asymptotics_envelope(coin, n, center, i);
  const double a = std::abs(coin.a());
  for (int k = center - half_width; k <= center + half_width; ++k) {
    const double xk = static_cast<double>(k) / n;
    if (k < 1 || 2 * k > n || !(xk > (1.0 - a) / 2.0 && xk < (1.0 + a) / 2.0)) continue;
    best = std::max(best, asymptotics_envelope(coin, n, k, i));
  }
  return best;
}

AsymptoticsNote asymptotics_note(const Coin& coin, double x) {
  require_window(coin, x);
  const double a2 = coin.abs_a_sq();
  const double big_lambda = (1.0 - a2) * ((2.0 * x - 1.0) * (2.0 * x - 1.0) - a2);
  const double cos_theta = std::sqrt((1.0 - a2) / (4.0 * x * (1.0 - x)));
  return {x, big_lambda, std::acos(std::min(1.0, cos_theta))};
}

}  // namespace qwalk
