#include "qwalk/analytic.hpp"

#include <cmath>
#include <string>

#include "qwalk/numeric.hpp"
#include "qwalk/special.hpp"

namespace qwalk {

namespace {

constexpr double kMirrorTol = 1e-8;

void require_generic(const Coin& coin, const char* what) {
  if (!coin.generic()) throw Error(ErrorKind::DegenerateCoin, std::string(what) + " requires abcd != 0");
}

SumRoute resolve(SumRoute route, int n) {
  if (route != SumRoute::Auto) return route;
  return n <= kDirectRouteMaxN ? SumRoute::Direct : SumRoute::Jacobi;
}

long double ipow_ld(long double x, int e) {
  long double r = 1.0L;
  for (; e > 0; --e) r *= x;
  return r;
}

PairSums pair_sums_direct(const Coin& coin, int n, int k) {
  const long double a2 = coin.abs_a_sq();
  const long double b2 = coin.abs_b_sq();
  CompensatedSum<long double> one, gam, del, gd;
  for (int g = 1; g <= k; ++g) {
    for (int d = 1; d <= k; ++d) {
      const long double kappa = binomial(k - 1, g - 1) * binomial(k - 1, d - 1) *
                                binomial(n - k - 1, g - 1) * binomial(n - k - 1, d - 1);
      if (kappa == 0.0L) continue;
      // |a|^{2(n-1)} (-|b|^2/|a|^2)^{g+d} without forming the ratio.
      const int e = n - 1 - g - d;
      long double weight = ipow_ld(b2, g + d) * (e >= 0 ? ipow_ld(a2, e) : 1.0L / a2);
      if ((g + d) % 2 != 0) weight = -weight;
      const long double w = weight * kappa / (static_cast<long double>(g) * d);
      one += w;
      gam += w * g;
      del += w * d;
      gd += w * g * d;
    }
  }
  return {one.value(), gam.value(), del.value(), gd.value()};
}

PairSums pair_sums_jacobi(const Coin& coin, int n, int k) {
  // The double sum splits as T_i T_j with
  //   T_0 = x |a|^{-2(k-1)} rho_{n,k,0},  T_1 = x |a|^{-2(k-1)} rho_{n,k,1} / k,
  // x = -|b|^2/|a|^2, so |a|^{2(n-1)} T_i T_j = |b|^4/|a|^2 * scaled rho products.
  const double a2 = coin.abs_a_sq();
  const long double b2 = coin.abs_b_sq();
  const long double r0 = rho_scaled(a2, n, k, 0);
  const long double r1 = rho_scaled(a2, n, k, 1) / k;
  const long double f = b2 * b2 / a2;
  const long double cross = f * r0 * r1;
  return {f * r1 * r1, cross, cross, f * r0 * r0};
}

// Probability of n - 2k (sign = +1) or -(n - 2k) (sign = -1), 1 <= k <= n/2.
double interior_probability(const WalkParams& p, int n, int k, int sign, const PairSums& s) {
  const long double a2 = p.coin.abs_a_sq();
  const long double b2 = p.coin.abs_b_sq();
  const long double al2 = std::norm(p.qubit.alpha());
  const long double be2 = std::norm(p.qubit.beta());
  const long double nk = n - k;
  const long double kk = k;
  const std::complex<long double> z(p.z.real(), p.z.imag());
  const long double shift = static_cast<long double>(n) * (2 * k - n) * b2;

  long double alpha_coef, beta_coef;
  std::complex<long double> cross_part;
  if (sign > 0) {
    alpha_coef = (kk * kk * a2 + nk * nk * b2) * s.one - nk * (s.gamma + s.delta);
    beta_coef = (kk * kk * b2 + nk * nk * a2) * s.one - kk * (s.gamma + s.delta);
    cross_part = (nk * s.gamma - kk * s.delta + shift * s.one) * z +
                 (-kk * s.gamma + nk * s.delta + shift * s.one) * std::conj(z);
  } else {
    alpha_coef = (kk * kk * b2 + nk * nk * a2) * s.one - kk * (s.gamma + s.delta);
    beta_coef = (kk * kk * a2 + nk * nk * b2) * s.one - nk * (s.gamma + s.delta);
    cross_part = (kk * s.gamma - nk * s.delta - shift * s.one) * z +
                 (-nk * s.gamma + kk * s.delta - shift * s.one) * std::conj(z);
  }
  const long double value =
      alpha_coef * al2 + beta_coef * be2 + (cross_part.real() + s.gamma_delta) / b2;
  return static_cast<double>(value);
}

double edge_probability(const WalkParams& p, int n, int sign) {
  const double a2 = p.coin.abs_a_sq();
  const double b2 = p.coin.abs_b_sq();
  const double al2 = std::norm(p.qubit.alpha());
  const double be2 = std::norm(p.qubit.beta());
  const double scale = std::pow(a2, n - 1);
  if (sign > 0) return scale * (b2 * al2 + a2 * be2 - p.cross);
  return scale * (a2 * al2 + b2 * be2 + p.cross);
}

void check_mirror(double plus, double minus, int n) {
  if (std::abs(plus - minus) > kMirrorTol) {
    throw Error(ErrorKind::SelfCheckFailed,
                "mirrored expressions for P(X_" + std::to_string(n) + " = 0) differ by " +
                    std::to_string(std::abs(plus - minus)));
  }
}

// sum over (g, d) of W nu, from the pair sums.
long double nu_sum(const PairSums& s, int n, int k, long double b2) {
  const long double nk = n - k;
  return (nk * nk + static_cast<long double>(k) * k) * s.one - n * (s.gamma + s.delta) +
         2.0L * s.gamma_delta / b2;
}

// sum over (g, d) of W {mu n + (g + d)/(2|b|^2) (imbalance - mu)}.
long double drift_sum(const WalkParams& p, const PairSums& s, int n, long double b2) {
  return p.mu * static_cast<long double>(n) * s.one +
         (s.gamma + s.delta) / (2.0L * b2) * (p.imbalance - p.mu);
}

}  // namespace

WalkParams WalkParams::make(const Coin& coin, const Qubit& qubit) {
  const cplx z = coin.a() * qubit.alpha() * std::conj(coin.b() * qubit.beta());
  const double cross = 2.0 * z.real();
  const double imbalance = std::norm(qubit.alpha()) - std::norm(qubit.beta());
  const double mu = (coin.abs_a_sq() - coin.abs_b_sq()) * imbalance + 2.0 * cross;
  return {coin, qubit, z, cross, imbalance, mu};
}

KappaNu kappa_nu(int gamma, int delta, int n, int k, double abs_b_sq) {
  const long double kappa = binomial(k - 1, gamma - 1) * binomial(k - 1, delta - 1) *
                            binomial(n - k - 1, gamma - 1) * binomial(n - k - 1, delta - 1);
  const long double nk = n - k;
  const long double nu = nk * nk + static_cast<long double>(k) * k - static_cast<long double>(n) * (gamma + delta) +
                         2.0L * gamma * delta / abs_b_sq;
  return {kappa, nu};
}

PairSums pair_sums(const Coin& coin, int n, int k, SumRoute route) {
  require_generic(coin, "pair sums");
  if (k < 1 || 2 * k > n) throw Error(ErrorKind::InvalidArgument, "pair sums need 1 <= k <= n/2");
  return resolve(route, n) == SumRoute::Direct ? pair_sums_direct(coin, n, k) : pair_sums_jacobi(coin, n, k);
}

double prob_closed_form(const WalkParams& params, int n, int position, SumRoute route) {
  require_generic(params.coin, "explicit distribution");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "explicit distribution needs n >= 1");
  if (position < -n || position > n) {
    throw Error(ErrorKind::InvalidArgument, "position outside the support at time n");
  }
  if ((n + position) % 2 != 0) throw Error(ErrorKind::ParityViolation, "n + position must be even");
  if (position == n) return edge_probability(params, n, +1);
  if (position == -n) return edge_probability(params, n, -1);

  const int k = (n - std::abs(position)) / 2;
  const PairSums s = pair_sums(params.coin, n, k, route);
  if (position == 0) {
    const double plus = interior_probability(params, n, k, +1, s);
    const double minus = interior_probability(params, n, k, -1, s);
    check_mirror(plus, minus, n);
    return plus;
  }
  return interior_probability(params, n, k, position > 0 ? +1 : -1, s);
}

Distribution closed_form_distribution(const WalkParams& params, int n, SumRoute route) {
  require_generic(params.coin, "explicit distribution");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "explicit distribution needs n >= 1");
  std::vector<double> probs(static_cast<std::size_t>(n) + 1);
  auto slot = [n](int position) { return static_cast<std::size_t>((position + n) / 2); };
  probs[slot(n)] = edge_probability(params, n, +1);
  probs[slot(-n)] = edge_probability(params, n, -1);
  for (int k = 1; 2 * k <= n; ++k) {
    const PairSums s = pair_sums(params.coin, n, k, route);
    const double plus = interior_probability(params, n, k, +1, s);
    const double minus = interior_probability(params, n, k, -1, s);
    if (2 * k == n) {
      check_mirror(plus, minus, n);
      probs[slot(0)] = plus;
    } else {
      probs[slot(n - 2 * k)] = plus;
      probs[slot(-(n - 2 * k))] = minus;
    }
  }
  return Distribution(n, std::move(probs));
}

double char_fn_middle_term(const WalkParams& params, int n, SumRoute route) {
  require_generic(params.coin, "characteristic function series");
  if (n % 2 != 0) return 0.0;
  const long double b2 = params.coin.abs_b_sq();
  const PairSums s = pair_sums(params.coin, n, n / 2, route);
  return static_cast<double>(nu_sum(s, n, n / 2, b2) / 2.0L);
}

cplx char_fn(const WalkParams& params, int n, double xi, SumRoute route) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "characteristic function needs n >= 1");
  switch (params.coin.branch()) {
    case CoinBranch::BZero:
      return {std::cos(n * xi), -params.imbalance * std::sin(n * xi)};
    case CoinBranch::AZero:
      if (n % 2 == 0) return 1.0;
      return {std::cos(xi), params.imbalance * std::sin(xi)};
    case CoinBranch::Generic:
      break;
  }

  const long double b2 = params.coin.abs_b_sq();
  const long double edge = std::pow(static_cast<long double>(params.coin.abs_a_sq()), n - 1);
  CompensatedSum<long double> re, im;
  re += edge * std::cos(static_cast<long double>(n) * xi);
  im += -edge * params.mu * std::sin(static_cast<long double>(n) * xi);
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const PairSums s = pair_sums(params.coin, n, k, route);
    const long double arg = static_cast<long double>(n - 2 * k) * xi;
    re += nu_sum(s, n, k, b2) * std::cos(arg);
    im += -(n - 2 * k) * drift_sum(params, s, n, b2) * std::sin(arg);
  }
  re += char_fn_middle_term(params, n, route);
  return {static_cast<double>(re.value()), static_cast<double>(im.value())};
}

double moment(const WalkParams& params, int n, int m, SumRoute route) {
  if (n < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "moment needs n >= 1 and m >= 1");
  const bool odd_m = m % 2 != 0;
  switch (params.coin.branch()) {
    case CoinBranch::BZero:
      return std::pow(static_cast<double>(n), m) * (odd_m ? -params.imbalance : 1.0);
    case CoinBranch::AZero:
      if (n % 2 == 0) return 0.0;
      return odd_m ? params.imbalance : 1.0;
    case CoinBranch::Generic:
      break;
  }

  const long double b2 = params.coin.abs_b_sq();
  const long double edge = std::pow(static_cast<long double>(params.coin.abs_a_sq()), n - 1);
  const long double n_pow = ipow_ld(n, m);
  CompensatedSum<long double> sum;
  if (odd_m) {
    sum += edge * params.mu * n_pow;
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      const PairSums s = pair_sums(params.coin, n, k, route);
      sum += ipow_ld(n - 2 * k, m + 1) * drift_sum(params, s, n, b2);
    }
    return static_cast<double>(-sum.value());
  }
  sum += edge * n_pow;
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const PairSums s = pair_sums(params.coin, n, k, route);
    sum += ipow_ld(n - 2 * k, m) * nu_sum(s, n, k, b2);
  }
  return static_cast<double>(sum.value());
}

double mean_symmetric_reduction(const WalkParams& params, int n, SumRoute route) {
  require_generic(params.coin, "reduced mean");
  if (std::abs(params.mu) >= 1e-12) {
    throw Error(ErrorKind::PreconditionFailed, "reduced mean requires mu = 0");
  }
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "reduced mean needs n >= 3");
  const long double b2 = params.coin.abs_b_sq();
  CompensatedSum<long double> sum;
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const PairSums s = pair_sums(params.coin, n, k, route);
    sum += ipow_ld(n - 2 * k, 2) * (s.gamma + s.delta);
  }
  return static_cast<double>(-params.imbalance / (2.0L * b2) * sum.value());
}

}  // namespace qwalk
