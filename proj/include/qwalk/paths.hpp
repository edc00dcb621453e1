#pragma once

#include <cstdint>

#include "qwalk/coin.hpp"

namespace qwalk {

// l left steps and m right steps; n = l + m, net displacement k = m - l.
struct StepCount {
  int l = 0;
  int m = 0;

  int n() const { return l + m; }
  int k() const { return m - l; }

  // Counts reaching position k at time n. Throws ParityViolation if n + k is
  // odd and InvalidArgument if |k| > n.
  static StepCount at(int n, int k);
};

// Xi(l, m) in coordinates of the P, Q, R, S basis of its coin.
struct PqrsMatrix {
  PqrsCoords coords;
  Coin coin;

  Mat2 matrix() const { return materialize(coin, coords); }
};

inline constexpr int kEnumerationCap = 14;

// Brute-force sum of all C(l+m, l) words in P and Q. In every word the
// rightmost letter is the first step applied. Throws CapExceeded above `cap`.
Mat2 enumerate_xi(const Coin& coin, StepCount sc, int cap = kEnumerationCap);

// Number of words P^{w1} Q^{w2} ... Q^{w_{2g}} P^{w_{2g+1}} with every w_i >= 1,
// l letters P and m letters Q: C(l-1, g) C(m-1, g-1).
std::int64_t cluster_count(int gamma, int l, int m);

// p, q, r, s from the explicit binomial sums over cluster counts. Valid for any
// unitary coin: the derivation only uses the closed product table.
PqrsMatrix pqrs_coefficients(const Coin& coin, StepCount sc);

// Xi(l, m) from the single gamma-sum closed form when l, m >= 1 (requires
// abcd != 0, else DegenerateCoin), a^{l-1} P when m = 0 and
// delta^{m-1} conj(a)^{m-1} Q when l = 0.
Mat2 closed_form_xi(const Coin& coin, StepCount sc);

// z^e for e >= 0 with z^0 = 1 (including 0^0).
cplx ipow(cplx z, int e);

}  // namespace qwalk
