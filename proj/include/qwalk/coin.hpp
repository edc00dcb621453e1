#pragma once

#include <array>
#include <complex>

#include "qwalk/error.hpp"

namespace qwalk {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-12;

// Two-component chirality amplitude: `left` is the upper component.
struct Spinor {
  cplx left{};
  cplx right{};

  double norm_sq() const { return std::norm(left) + std::norm(right); }
  friend Spinor operator+(const Spinor& x, const Spinor& y) {
    return {x.left + y.left, x.right + y.right};
  }
};

// Row-major 2x2 complex matrix.
struct Mat2 {
  cplx m00{}, m01{}, m10{}, m11{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }

  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }
  cplx trace() const { return m00 + m11; }
  cplx det() const { return m00 * m11 - m01 * m10; }
  bool finite() const;

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
  }
  friend Mat2 operator*(cplx s, const Mat2& x) {
    return {s * x.m00, s * x.m01, s * x.m10, s * x.m11};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  friend Spinor operator*(const Mat2& x, const Spinor& v) {
    return {x.m00 * v.left + x.m01 * v.right, x.m10 * v.left + x.m11 * v.right};
  }
  Mat2& operator+=(const Mat2& y) { return *this = *this + y; }
};

// Largest entrywise modulus of x - y.
double max_abs_diff(const Mat2& x, const Mat2& y);

// Trace inner product <x|y> = tr(x* y).
cplx trace_inner(const Mat2& x, const Mat2& y);

// Which closed-form branch a coin falls into. Only Generic has abcd != 0.
enum class CoinBranch {
  Generic,   // abcd != 0
  BZero,     // b = c = 0, |a| = |d| = 1
  AZero,     // a = d = 0, |b| = |c| = 1
};

const char* to_string(CoinBranch branch) noexcept;

// A validated 2x2 unitary coin U = [[a, b], [c, d]] with delta = det U.
class Coin {
 public:
  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }
  cplx delta() const { return delta_; }
  double abs_a_sq() const { return std::norm(a_); }
  double abs_b_sq() const { return std::norm(b_); }
  CoinBranch branch() const { return branch_; }
  bool generic() const { return branch_ == CoinBranch::Generic; }
  Mat2 matrix() const { return {a_, b_, c_, d_}; }

  // The 1/sqrt(2) [[1, 1], [1, -1]] coin.
  static Coin hadamard();

 private:
  friend Coin validate_coin(const Mat2& m, double tol);
  Coin(cplx a, cplx b, cplx c, cplx d, CoinBranch branch)
      : a_(a), b_(b), c_(c), d_(d), delta_(a * d - b * c), branch_(branch) {}

  cplx a_, b_, c_, d_, delta_;
  CoinBranch branch_;
};

// Checks |a|^2+|c|^2 = |b|^2+|d|^2 = 1, a conj(c) + b conj(d) = 0,
// |delta| = 1, c = -delta conj(b), d = delta conj(a). Throws NotUnitary.
// The branch is decided by |a| < tol or |b| < tol.
Coin validate_coin(const Mat2& m, double tol = kDefaultTol);

// Normalized initial chirality state (alpha, beta).
class Qubit {
 public:
  cplx alpha() const { return alpha_; }
  cplx beta() const { return beta_; }
  Spinor spinor() const { return {alpha_, beta_}; }

 private:
  friend Qubit make_qubit(cplx alpha, cplx beta, double tol);
  Qubit(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {}

  cplx alpha_, beta_;
};

// Throws InvalidArgument unless |alpha|^2 + |beta|^2 = 1 within tol.
Qubit make_qubit(cplx alpha, cplx beta, double tol = kDefaultTol);

enum class Letter { P, Q, R, S };

inline constexpr std::array<Letter, 4> kLetters{Letter::P, Letter::Q, Letter::R, Letter::S};

char to_char(Letter letter) noexcept;

// P = [[a,b],[0,0]], Q = [[0,0],[c,d]], R = [[c,d],[0,0]], S = [[0,0],[a,b]].
Mat2 letter_matrix(const Coin& coin, Letter letter);

struct LetterProduct {
  cplx scalar;
  Letter letter;
};

// matrix(x) * matrix(y) = scalar * matrix(letter), the closed multiplication table.
LetterProduct pqrs_product(const Coin& coin, Letter x, Letter y);

struct PqrsCoords {
  cplx p, q, r, s;
};

// Coordinates of m in the {P, Q, R, S} basis, which is orthonormal under the
// trace inner product for every unitary coin (the rows of U are orthonormal).
PqrsCoords basis_decompose(const Coin& coin, const Mat2& m);

// p P + q Q + r R + s S.
Mat2 materialize(const Coin& coin, const PqrsCoords& coords);

}  // namespace qwalk
