#pragma once

#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// Amplitudes at time n. Only the reachable parity class is stored: slot j
// holds position k = -n + 2j, j = 0..n.
class AmplitudeField {
 public:
  AmplitudeField(int time, std::vector<Spinor> slots);

  int time() const { return time_; }
  const std::vector<Spinor>& slots() const { return slots_; }

  // Amplitude at position k; zero off the support and on the wrong parity.
  Spinor at(int k) const;

  // Sum over k of ||psi_k||^2; no renormalization is ever applied.
  double total_probability() const;

 private:
  int time_;
  std::vector<Spinor> slots_;
};

// Exact law of X_n: probs[j] = P(X_n = -n + 2j).
class Distribution {
 public:
  Distribution(int time, std::vector<double> probs);

  int time() const { return time_; }
  const std::vector<double>& probs() const { return probs_; }
  int min_position() const { return -time_; }

  // P(X_n = k); zero off the support and on the wrong parity.
  double at(int k) const;
  double total() const;

 private:
  int time_;
  std::vector<double> probs_;
};

AmplitudeField init(const Qubit& qubit);

// psi_k^{(n+1)} = Q psi_{k-1}^{(n)} + P psi_{k+1}^{(n)}.
AmplitudeField step(const Coin& coin, const AmplitudeField& field);

// Evolves in place-free steps from `qubit` to time n; O(n^2) work, O(n) memory.
AmplitudeField evolve(const Coin& coin, const Qubit& qubit, int n);

Distribution to_distribution(const AmplitudeField& field);
Distribution distribution(const Coin& coin, const Qubit& qubit, int n);

inline constexpr int kDenseCap = 64;

// Builds the (4N+2)x(4N+2) periodic block operator with Q on the sub- and P on
// the super-diagonal and returns max |U* U - I|. Takes a raw matrix so that
// non-unitary perturbations can be probed. Throws CapExceeded for N > 64.
double dense_unitary_check(const Mat2& coin_matrix, int big_n);
double dense_unitary_check(const Coin& coin, int big_n);

// Applies the dense periodic operator n times to the embedded initial state.
// Matches `evolve` exactly while n <= N. Throws CapExceeded for N > 64.
AmplitudeField dense_evolve(const Coin& coin, const Qubit& qubit, int big_n, int n);

}  // namespace qwalk
