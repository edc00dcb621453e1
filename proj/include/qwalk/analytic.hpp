#pragma once

#include <complex>

#include "qwalk/coin.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Coin and qubit with the scalars every closed form reuses.
struct WalkParams {
  Coin coin;
  Qubit qubit;
  cplx z;            // a alpha conj(b beta)
  double cross;      // z + conj(z)
  double imbalance;  // |alpha|^2 - |beta|^2
  double mu;         // (|a|^2 - |b|^2) imbalance + 2 cross

  static WalkParams make(const Coin& coin, const Qubit& qubit);
};

struct KappaNu {
  long double kappa;  // C(k-1,g-1) C(k-1,d-1) C(n-k-1,g-1) C(n-k-1,d-1)
  long double nu;     // (n-k)^2 + k^2 - n(g+d) + 2 g d / |b|^2
};

KappaNu kappa_nu(int gamma, int delta, int n, int k, double abs_b_sq);

// How the (gamma, delta) double sums are evaluated. Direct runs the literal
// double sum with exact binomials in compensated long double; it loses
// accuracy as the alternating terms grow, roughly past n = 30. Jacobi
// factorizes each double sum into products of two single sums and evaluates
// those as Jacobi polynomials by recurrence, which stays accurate for large n.
// Auto picks Direct up to kDirectRouteMaxN.
enum class SumRoute { Auto, Direct, Jacobi };

inline constexpr int kDirectRouteMaxN = 24;

// sum_{g,d=1}^{k} |a|^{2(n-1)} (-|b|^2/|a|^2)^{g+d} kappa / (g d) * {1, g, d, g d}.
struct PairSums {
  long double one = 0.0L;
  long double gamma = 0.0L;
  long double delta = 0.0L;
  long double gamma_delta = 0.0L;
};

// Requires abcd != 0 and 1 <= k <= n/2.
PairSums pair_sums(const Coin& coin, int n, int k, SumRoute route = SumRoute::Auto);

// P(X_n = position) from the explicit four-case formula. Requires abcd != 0
// (DegenerateCoin), n >= 1, |position| <= n and n + position even
// (ParityViolation). At position 0 both mirrored expressions are evaluated
// and must agree (SelfCheckFailed otherwise).
double prob_closed_form(const WalkParams& params, int n, int position, SumRoute route = SumRoute::Auto);

// Every position at once; shares the pair sums of k between n-2k and -(n-2k).
Distribution closed_form_distribution(const WalkParams& params, int n, SumRoute route = SumRoute::Auto);

// E exp(i xi X_n). Generic coins use the combinatorial series (with the
// separate middle term for even n); b = 0 and a = 0 use their trigonometric
// forms. Requires n >= 1.
cplx char_fn(const WalkParams& params, int n, double xi, SumRoute route = SumRoute::Auto);

// The middle-term block of the generic characteristic function, nonzero only
// for even n. Exposed for testing.
double char_fn_middle_term(const WalkParams& params, int n, SumRoute route = SumRoute::Auto);

// E (X_n)^m from the closed forms. Requires n >= 1 and m >= 1.
double moment(const WalkParams& params, int n, int m, SumRoute route = SumRoute::Auto);

// The mean when mu = 0, reduced to the single (g + d)-weighted sum; requires
// |mu| < 1e-12 (PreconditionFailed), n >= 3 and abcd != 0.
double mean_symmetric_reduction(const WalkParams& params, int n, SumRoute route = SumRoute::Auto);

}  // namespace qwalk
