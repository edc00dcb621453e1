#pragma once

#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// Weak limit of X_n / n for abcd != 0:
//   f(x) = sqrt(1-|a|^2) (1 - lambda x) / (pi (1-x^2) sqrt(|a|^2 - x^2)),  |x| < |a|,
//   lambda = |alpha|^2 - |beta|^2 + (a alpha conj(b beta) + conj(a alpha) b beta) / |a|^2.
class LimitDensity {
 public:
  // Throws DegenerateCoin unless 0 < |a| < 1.
  LimitDensity(const Coin& coin, const Qubit& qubit);

  const Coin& coin() const { return coin_; }
  const Qubit& qubit() const { return qubit_; }
  double lambda() const { return lambda_; }
  double abs_a() const { return abs_a_; }

 private:
  Coin coin_;
  Qubit qubit_;
  double lambda_;
  double abs_a_;
};

// f(x); zero for |x| >= |a|.
double density(const LimitDensity& ld, double x);

// Integral of f from -|a| to x under x = |a| sin t, which removes the inverse
// square-root edge singularities. Absolute error below 1e-9.
double limit_cdf(const LimitDensity& ld, double x);

// E(Z^m): closed forms for m = 1, 2 and quadrature for m >= 3.
double limit_moment(const LimitDensity& ld, int m);

// sqrt(1-|a|^2)/pi * Gamma(1/2)^2 * 2F1(1/2, 1; 1; |a|^2), the normalization
// evaluated through the hypergeometric series instead of quadrature.
double normalization_via_hypergeometric(const LimitDensity& ld);

// The |a| = 1 limit: mass |alpha|^2 at -1 and |beta|^2 at +1.
struct TwoPointLimit {
  double p_minus;
  double p_plus;

  double moment(int m) const;
};

TwoPointLimit two_point_limit(const Qubit& qubit);

struct ConvergencePoint {
  int n;
  double ks;  // sup_x |F_n(x) - F_Z(x)|, F_n the exact law of X_n / n
};

struct ConvergenceReport {
  std::vector<ConvergencePoint> points;
};

inline constexpr int kConvergenceCap = 2000;
inline constexpr int kKsGridPoints = 1000;

// KS distance between the exact law of X_n / n (simulated) and the limit
// law, taken over every jump point of F_n (both one-sided limits) plus a
// uniform grid on [-|a|, |a|]. Requires abcd != 0 and 1 <= n <= cap.
ConvergenceReport ks_convergence(const Coin& coin, const Qubit& qubit, const std::vector<int>& n_list,
                                 int cap = kConvergenceCap);

// Mean of the KS distances at n and n + 1. X_n lives on one parity class, so
// the raw sequence oscillates between even and odd n.
double parity_smoothed_ks(const Coin& coin, const Qubit& qubit, int n, int cap = kConvergenceCap);

// |rho_{n,k,i}| |a|^{n-2k} sqrt(n), bounded in n at fixed x = k/n inside the
// oscillatory window (1-|a|)/2 < x < (1+|a|)/2. Also needs 1 <= k <= n/2.
// Throws OutOfWindow otherwise.
double asymptotics_envelope(const Coin& coin, int n, int k, int i);

inline constexpr int kEnvelopeHalfWidth = 3;

// The pointwise value above oscillates like cos(An + B) and can sit near a
// node for a particular n. This takes its maximum over the k within
// half_width of round(x n), which tracks the amplitude instead. round(x n)
// must satisfy the window conditions; neighbours that do not are skipped.
double local_envelope(const Coin& coin, int n, double x, int i, int half_width = kEnvelopeHalfWidth);

// Lambda = (1-|a|^2)((2x-1)^2 - |a|^2) and the angle with
// cos(theta) = sqrt((1-|a|^2) / (4x(1-x))), for x in the window.
struct AsymptoticsNote {
  double x;
  double big_lambda;
  double theta;
};

AsymptoticsNote asymptotics_note(const Coin& coin, double x);

}  // namespace qwalk
