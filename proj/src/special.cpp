#include "qwalk/special.hpp"

#include <cmath>
#include <string>

#include "qwalk/numeric.hpp"

namespace qwalk {

namespace {

// Returns p >= 0 when x == -p, otherwise -1.
long nonpositive_integer(double x) {
  if (x <= 0.0 && x == std::floor(x)) return static_cast<long>(-x);
  return -1;
}

// Gamma(n+nu+1) / (Gamma(n+1) Gamma(nu+1)).
double jacobi_prefactor(int n, double nu) {
  const double top = n + nu + 1.0;
  if (top < 170.0 && nu + 1.0 < 170.0) {
    return std::tgamma(top) / (std::tgamma(n + 1.0) * std::tgamma(nu + 1.0));
  }
  return std::exp(std::lgamma(top) - std::lgamma(n + 1.0) - std::lgamma(nu + 1.0));
}

}  // namespace

double gauss_2f1(const HypergeomArgs& args) {
  const auto [a, b, c, z] = args;
  const long ta = nonpositive_integer(a);
  const long tb = nonpositive_integer(b);
  long terms = -1;  // index of the last nonzero term for terminating series
  if (ta >= 0 && tb >= 0) {
    terms = std::min(ta, tb);
  } else if (ta >= 0) {
    terms = ta;
  } else if (tb >= 0) {
    terms = tb;
  }

  const long tc = nonpositive_integer(c);
  if (tc >= 0 && (terms < 0 || terms > tc)) {
    throw Error(ErrorKind::PoleAtC, "c = " + std::to_string(c) + " before the series terminates");
  }
  if (z == 0.0) return 1.0;

  CompensatedSum<long double> sum;
  long double term = 1.0L;
  sum += term;
  if (terms >= 0) {
    for (long j = 0; j < terms; ++j) {
      term *= static_cast<long double>(a + j) * (b + j) / ((c + j) * (j + 1.0)) * z;
      sum += term;
    }
    return static_cast<double>(sum.value());
  }

  if (!(std::abs(z) < 1.0)) {
    throw Error(ErrorKind::NonConvergent, "non-terminating series needs |z| < 1");
  }
  for (long j = 0; j < kHypergeomTermCap; ++j) {
    term *= static_cast<long double>(a + j) * (b + j) / ((c + j) * (j + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-16L * std::abs(sum.value())) return static_cast<double>(sum.value());
  }
  throw Error(ErrorKind::NonConvergent, "term cap reached");
}

double pfaff_check(const HypergeomArgs& args) {
  if (args.z == 0.0) return 0.0;
  const double lhs = gauss_2f1(args);
  const double w = args.z / (args.z - 1.0);
  const double rhs = std::pow(1.0 - args.z, -args.a) * gauss_2f1({args.a, args.c - args.b, args.c, w});
  return std::abs(lhs - rhs);
}

double jacobi_p(const JacobiArgs& args) {
  const auto [n, nu, mu, x] = args;
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "Jacobi degree must be >= 0");
  if (n == 0) return 1.0;
  return jacobi_prefactor(n, nu) * gauss_2f1({-static_cast<double>(n), n + nu + mu + 1.0, nu + 1.0, (1.0 - x) / 2.0});
}

long double jacobi_p_recurrence(const JacobiArgs& args, long double scale) {
  const int n = args.degree;
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "Jacobi degree must be >= 0");
  const long double al = args.nu, be = args.mu, x = args.x;
  long double prev = scale;
  if (n == 0) return prev;
  long double cur = scale * ((al + 1.0L) + (al + be + 2.0L) * (x - 1.0L) / 2.0L);
  for (int j = 1; j < n; ++j) {
    const long double s = 2.0L * j + al + be;
    const long double denom = 2.0L * (j + 1) * (j + al + be + 1.0L) * s;
    if (denom == 0.0L) throw Error(ErrorKind::InvalidArgument, "degenerate Jacobi recurrence");
    const long double next =
        ((s + 1.0L) * ((s + 2.0L) * s * x + al * al - be * be) * cur -
         2.0L * (j + al) * (j + be) * (s + 2.0L) * prev) /
        denom;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

void check_rho_args(int n, int k, int i) {
  if (i != 0 && i != 1) throw Error(ErrorKind::InvalidArgument, "rho index i must be 0 or 1");
  if (k < 1 || 2 * k > n) throw Error(ErrorKind::InvalidArgument, "rho needs 1 <= k <= n/2");
}

}  // namespace

double rho(double abs_a_sq, int n, int k, int i) {
  check_rho_args(n, k, i);
  return jacobi_p({k - 1, static_cast<double>(i), static_cast<double>(n - 2 * k), 2.0 * abs_a_sq - 1.0});
}

long double rho_scaled(double abs_a_sq, int n, int k, int i) {
  check_rho_args(n, k, i);
  const long double scale = std::pow(static_cast<long double>(abs_a_sq), (n - 2 * k) / 2.0L);
  return jacobi_p_recurrence({k - 1, static_cast<double>(i), static_cast<double>(n - 2 * k), 2.0 * abs_a_sq - 1.0},
                             scale);
}

IdentitySides combinatorial_jacobi_identity(double abs_a_sq, int n, int k, int i) {
  check_rho_args(n, k, i);
  if (!(abs_a_sq > 0.0 && abs_a_sq < 1.0)) {
    throw Error(ErrorKind::DegenerateCoin, "identity needs 0 < |a| < 1");
  }
  const long double ratio = -(1.0L - abs_a_sq) / abs_a_sq;
  CompensatedSum<long double> lhs;
  long double power = 1.0L;
  for (int g = 1; g <= k; ++g) {
    long double term = power * binomial(k - 1, g - 1) * binomial(n - k - 1, g - 1);
    if (i == 1) term /= g;
    lhs += term;
    power *= ratio;
  }
  double rhs = std::pow(abs_a_sq, -(k - 1)) * rho(abs_a_sq, n, k, i);
  if (i == 1) rhs /= k;
  return {static_cast<double>(lhs.value()), rhs};
}

IdentitySides combinatorial_jacobi_identity(const Coin& coin, int n, int k, int i) {
  return combinatorial_jacobi_identity(coin.abs_a_sq(), n, k, i);
}

}  // namespace qwalk
