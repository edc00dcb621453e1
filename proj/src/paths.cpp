#include "qwalk/paths.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "qwalk/numeric.hpp"

namespace qwalk {

u128 binomial_exact(int n, int k) {
  if (n > kExactBinomialMax) {
    throw Error(ErrorKind::CapExceeded, "exact binomial limited to n <= 60");
  }
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    result = result * static_cast<u128>(n - k + i) / static_cast<u128>(i);
  }
  return result;
}

long double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0L;
  if (n <= kExactBinomialMax) return static_cast<long double>(binomial_exact(n, k));
  k = std::min(k, n - k);
  long double result = 1.0L;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  }
  return result;
}

StepCount StepCount::at(int n, int k) {
  if (n < 0 || k < -n || k > n) {
    throw Error(ErrorKind::InvalidArgument,
                "position " + std::to_string(k) + " unreachable at time " + std::to_string(n));
  }
  if ((n + k) % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "n + k must be even");
  }
  return {(n - k) / 2, (n + k) / 2};
}

cplx ipow(cplx z, int e) {
  cplx result = 1.0;
  cplx base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Mat2 enumerate_xi(const Coin& coin, StepCount sc, int cap) {
  if (sc.l < 0 || sc.m < 0) throw Error(ErrorKind::InvalidArgument, "negative step count");
  const int n = sc.n();
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                "enumeration of " + std::to_string(n) + " steps exceeds cap " + std::to_string(cap));
  }
  if (n == 0) return Mat2::identity();
  const Mat2 p = letter_matrix(coin, Letter::P);
  const Mat2 q = letter_matrix(coin, Letter::Q);

  // Bit i of `word` set means letter i (leftmost = 0) is Q. Words are visited
  // in increasing numeric order so the reduction order is fixed.
  Mat2 total = Mat2::zero();
  const std::uint32_t end = 1u << n;
  for (std::uint32_t word = 0; word < end; ++word) {
    if (std::popcount(word) != sc.m) continue;
    Mat2 product = Mat2::identity();
    for (int i = 0; i < n; ++i) {
      product = product * (((word >> i) & 1u) ? q : p);
    }
    total += product;
  }
  return total;
}

std::int64_t cluster_count(int gamma, int l, int m) {
  if (gamma < 1) throw Error(ErrorKind::InvalidArgument, "gamma must be >= 1");
  if (l - 1 < 0 || m - 1 < 0) return 0;
  return static_cast<std::int64_t>(binomial_exact(l - 1, gamma) * binomial_exact(m - 1, gamma - 1));
}

namespace {

cplx ld_binom(int n, int k) { return static_cast<double>(binomial(n, k)); }

}  // namespace

PqrsMatrix pqrs_coefficients(const Coin& coin, StepCount sc) {
  const int l = sc.l, m = sc.m;
  if (l < 0 || m < 0) throw Error(ErrorKind::InvalidArgument, "negative step count");
  const cplx a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d();

  // Each cluster pattern reduces to a^{#P - clusters} d^{#Q - clusters} times
  // the alternating PQ products; summing over cluster counts gives these series.
  PqrsCoords k{0.0, 0.0, 0.0, 0.0};

  if (l >= 1 && m == 0) {
    k.p = ipow(a, l - 1);
  } else if (l >= 2 && m >= 1) {
    for (int g = 1; g <= std::min(l - 1, m); ++g) {
      k.p += ld_binom(l - 1, g) * ld_binom(m - 1, g - 1) * ipow(a, l - g - 1) * ipow(b, g) *
             ipow(c, g) * ipow(d, m - g);
    }
  }

  if (l == 0 && m >= 1) {
    k.q = ipow(d, m - 1);
  } else if (l >= 1 && m >= 2) {
    for (int g = 1; g <= std::min(l, m - 1); ++g) {
      k.q += ld_binom(l - 1, g - 1) * ld_binom(m - 1, g) * ipow(a, l - g) * ipow(b, g) *
             ipow(c, g) * ipow(d, m - g - 1);
    }
  }

  if (l >= 1 && m >= 1) {
    for (int g = 1; g <= std::min(l, m); ++g) {
      const cplx common = ld_binom(l - 1, g - 1) * ld_binom(m - 1, g - 1) * ipow(a, l - g) *
                          ipow(d, m - g);
      k.r += common * ipow(b, g) * ipow(c, g - 1);
      k.s += common * ipow(b, g - 1) * ipow(c, g);
    }
  }
  return {k, coin};
}

Mat2 closed_form_xi(const Coin& coin, StepCount sc) {
  const int l = sc.l, m = sc.m;
  if (l < 0 || m < 0) throw Error(ErrorKind::InvalidArgument, "negative step count");
  const cplx a = coin.a(), b = coin.b(), delta = coin.delta();
  const Mat2 P = letter_matrix(coin, Letter::P);
  const Mat2 Q = letter_matrix(coin, Letter::Q);

  if (l == 0 && m == 0) return Mat2::identity();
  if (m == 0) return ipow(a, l - 1) * P;
  if (l == 0) return ipow(delta * std::conj(a), m - 1) * Q;

  if (!coin.generic()) {
    throw Error(ErrorKind::DegenerateCoin, "closed form with l, m >= 1 requires abcd != 0");
  }
  const Mat2 R = letter_matrix(coin, Letter::R);
  const Mat2 S = letter_matrix(coin, Letter::S);
  const double ratio = -coin.abs_b_sq() / coin.abs_a_sq();

  // The bracket weights alternate in sign through `ratio`; accumulate them
  // compensated and apply the complex denominators once.
  CompensatedSum<long double> sum_p, sum_q, sum_rs;
  for (int g = 1; g <= std::min(l, m); ++g) {
    const long double w = std::pow(static_cast<long double>(ratio), g) * binomial(l - 1, g - 1) *
                          binomial(m - 1, g - 1);
    sum_p += w * (l - g) / g;
    sum_q += w * (m - g) / g;
    sum_rs += w;
  }
  const cplx coef_p = static_cast<double>(sum_p.value()) / a;
  const cplx coef_q = static_cast<double>(sum_q.value()) / (delta * std::conj(a));
  const cplx coef_rs = static_cast<double>(sum_rs.value());
  const cplx prefactor = ipow(a, l) * ipow(std::conj(a), m) * ipow(delta, m);
  return prefactor * (coef_p * P + coef_q * Q + (-coef_rs / (delta * std::conj(b))) * R + (coef_rs / b) * S);
}

}  // namespace qwalk
