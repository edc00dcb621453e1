#pragma once

#include "qwalk/coin.hpp"

namespace qwalk {

// Parameters of the Gauss hypergeometric series 2F1(a, b; c; z).
struct HypergeomArgs {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

inline constexpr long kHypergeomTermCap = 1'000'000;

// Terminating series (a or b a non-positive integer) are summed exactly term
// by term. Otherwise requires |z| < 1 and stops once a term falls below
// 1e-16 |partial sum|. Throws PoleAtC when c hits a non-positive integer
// before the series terminates and NonConvergent on |z| >= 1 or the cap.
double gauss_2f1(const HypergeomArgs& args);

// |2F1(a,b;c;z) - (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))|.
double pfaff_check(const HypergeomArgs& args);

struct JacobiArgs {
  int degree = 0;
  double nu = 0.0;  // exponent of (1 - x)
  double mu = 0.0;  // exponent of (1 + x)
  double x = 0.0;
};

// P_n^{(nu, mu)}(x) = Gamma(n+nu+1) / (Gamma(n+1) Gamma(nu+1))
//                     * 2F1(-n, n+nu+mu+1; nu+1; (1-x)/2).
double jacobi_p(const JacobiArgs& args);

// Same polynomial by the three-term recurrence in the degree, carried in long
// double with every value multiplied by `scale`. Used where the terminating
// series cancels catastrophically (large degree or large mu).
long double jacobi_p_recurrence(const JacobiArgs& args, long double scale = 1.0L);

// rho_{n,k,i} = P_{k-1}^{(i, n-2k)}(2|a|^2 - 1) for 1 <= k <= n/2, i in {0, 1},
// through the hypergeometric route.
double rho(double abs_a_sq, int n, int k, int i);

// |a|^{n-2k} rho_{n,k,i} through the recurrence; stays finite where rho alone
// would overflow.
long double rho_scaled(double abs_a_sq, int n, int k, int i);

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

// lhs: sum_{g=1}^{k} (-|b|^2/|a|^2)^{g-1} C(k-1,g-1) C(n-k-1,g-1) [/ g when i = 1].
// rhs: |a|^{-2(k-1)} rho_{n,k,i} [/ k when i = 1].
// Requires 1 <= k <= n/2 and 0 < |a| < 1.
IdentitySides combinatorial_jacobi_identity(double abs_a_sq, int n, int k, int i);
IdentitySides combinatorial_jacobi_identity(const Coin& coin, int n, int k, int i);

}  // namespace qwalk
