#pragma once

#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

inline constexpr double kMembershipTol = 1e-9;

struct AsymmetryRecord {
  int n;
  double max_asymmetry;  // max_k |P(X_n = k) - P(X_n = -k)|
};

struct SymmetryVerdict {
  bool in_phi_perp = false;
  std::vector<AsymmetryRecord> evidence;

  // True when every recorded asymmetry is below tol.
  bool symmetric(double tol = 1e-12) const;
};

// Algebraic membership: |alpha| = |beta| = 1/sqrt(2) and vanishing cross term
// a alpha conj(b beta) + conj(a alpha) b beta. Requires abcd != 0.
bool classify(const Coin& coin, const Qubit& qubit, double tol = kMembershipTol);

// Simulates n = 1..n_max and records the mirrored-position asymmetry. The
// in_phi_perp flag is filled only for generic coins.
SymmetryVerdict verify_symmetry(const Coin& coin, const Qubit& qubit, int n_max);

// E(X_n) = 0 within 1e-10 for every n <= n_max (n_max >= 3). Generic coins use
// the closed-form mean; degenerate coins use the simulated law.
bool mean_zero_check(const Coin& coin, const Qubit& qubit, int n_max);

}  // namespace qwalk
