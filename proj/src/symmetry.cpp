#include "qwalk/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/analytic.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

constexpr double kMeanTol = 1e-10;

double simulated_mean(const Coin& coin, const Qubit& qubit, int n) {
  const Distribution dist = distribution(coin, qubit, n);
  double mean = 0.0;
  for (int k = -n; k <= n; k += 2) mean += k * dist.at(k);
  return mean;
}

}  // namespace

bool SymmetryVerdict::symmetric(double tol) const {
  return std::all_of(evidence.begin(), evidence.end(),
                     [tol](const AsymmetryRecord& r) { return r.max_asymmetry < tol; });
}

bool classify(const Coin& coin, const Qubit& qubit, double tol) {
  if (!coin.generic()) throw Error(ErrorKind::DegenerateCoin, "classification requires abcd != 0");
  const double half = 1.0 / std::sqrt(2.0);
  const double cross = WalkParams::make(coin, qubit).cross;
  return std::abs(std::abs(qubit.alpha()) - half) < tol && std::abs(std::abs(qubit.beta()) - half) < tol &&
         std::abs(cross) < tol;
}

SymmetryVerdict verify_symmetry(const Coin& coin, const Qubit& qubit, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  SymmetryVerdict verdict;
  if (coin.generic()) verdict.in_phi_perp = classify(coin, qubit);
  AmplitudeField field = init(qubit);
  for (int n = 1; n <= n_max; ++n) {
    field = step(coin, field);
    const Distribution dist = to_distribution(field);
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) worst = std::max(worst, std::abs(dist.at(k) - dist.at(-k)));
    verdict.evidence.push_back({n, worst});
  }
  return verdict;
}

bool mean_zero_check(const Coin& coin, const Qubit& qubit, int n_max) {
  if (n_max < 3) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 3");
  const WalkParams params = WalkParams::make(coin, qubit);
  for (int n = 1; n <= n_max; ++n) {
    const double mean = coin.generic() ? moment(params, n, 1) : simulated_mean(coin, qubit, n);
    if (std::abs(mean) > kMeanTol) return false;
  }
  return true;
}

}  // namespace qwalk
