#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwalk {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::DegenerateCoin: return "DegenerateCoin";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::PoleAtC: return "PoleAtC";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SelfCheckFailed: return "SelfCheckFailed";
  }
  return "Unknown";
}

const char* to_string(CoinBranch branch) noexcept {
  switch (branch) {
    case CoinBranch::Generic: return "generic";
    case CoinBranch::BZero: return "b_zero";
    case CoinBranch::AZero: return "a_zero";
  }
  return "unknown";
}

bool Mat2::finite() const {
  for (const cplx& z : {m00, m01, m10, m11}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double max_abs_diff(const Mat2& x, const Mat2& y) {
  return std::max({std::abs(x.m00 - y.m00), std::abs(x.m01 - y.m01), std::abs(x.m10 - y.m10),
                   std::abs(x.m11 - y.m11)});
}

cplx trace_inner(const Mat2& x, const Mat2& y) { return (x.adjoint() * y).trace(); }

Coin Coin::hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return validate_coin({h, h, h, -h});
}

Coin validate_coin(const Mat2& m, double tol) {
  if (!m.finite()) throw Error(ErrorKind::NotUnitary, "coin has non-finite entries");
  const cplx a = m.m00, b = m.m01, c = m.m10, d = m.m11;
  const cplx delta = a * d - b * c;

  auto require = [tol](double residual, const char* what) {
    if (!(residual <= tol)) {
      throw Error(ErrorKind::NotUnitary, std::string(what) + " violated by " + std::to_string(residual));
    }
  };
  require(std::abs(std::norm(a) + std::norm(c) - 1.0), "|a|^2+|c|^2=1");
  require(std::abs(std::norm(b) + std::norm(d) - 1.0), "|b|^2+|d|^2=1");
  require(std::abs(a * std::conj(c) + b * std::conj(d)), "a conj(c)+b conj(d)=0");
  require(std::abs(std::abs(delta) - 1.0), "|det|=1");
  require(std::abs(c + delta * std::conj(b)), "c=-det conj(b)");
  require(std::abs(d - delta * std::conj(a)), "d=det conj(a)");

  CoinBranch branch = CoinBranch::Generic;
  if (std::abs(b) < tol) {
    branch = CoinBranch::BZero;
  } else if (std::abs(a) < tol) {
    branch = CoinBranch::AZero;
  }
  return Coin(a, b, c, d, branch);
}

Qubit make_qubit(cplx alpha, cplx beta, double tol) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol) {
    throw Error(ErrorKind::InvalidArgument,
                "qubit not normalized: |alpha|^2+|beta|^2=" + std::to_string(norm));
  }
  return Qubit(alpha, beta);
}

char to_char(Letter letter) noexcept {
  switch (letter) {
    case Letter::P: return 'P';
    case Letter::Q: return 'Q';
    case Letter::R: return 'R';
    case Letter::S: return 'S';
  }
  return '?';
}

Mat2 letter_matrix(const Coin& coin, Letter letter) {
  const cplx a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d();
  switch (letter) {
    case Letter::P: return {a, b, 0.0, 0.0};
    case Letter::Q: return {0.0, 0.0, c, d};
    case Letter::R: return {c, d, 0.0, 0.0};
    case Letter::S: return {0.0, 0.0, a, b};
  }
  return Mat2::zero();
}

LetterProduct pqrs_product(const Coin& coin, Letter x, Letter y) {
  // The left factor fixes the output row (P, R -> top; Q, S -> bottom), the
  // right factor fixes the row vector, and the scalar is the overlap of the
  // left factor's row with the right factor's column.
  const cplx a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d();
  using L = Letter;
  static constexpr L table[4][4] = {
      {L::P, L::R, L::R, L::P},
      {L::S, L::Q, L::Q, L::S},
      {L::P, L::R, L::R, L::P},
      {L::S, L::Q, L::Q, L::S},
  };
  const cplx scalars[4][4] = {
      {a, b, a, b},
      {c, d, c, d},
      {c, d, c, d},
      {a, b, a, b},
  };
  const auto i = static_cast<int>(x), j = static_cast<int>(y);
  return {scalars[i][j], table[i][j]};
}

PqrsCoords basis_decompose(const Coin& coin, const Mat2& m) {
  return {trace_inner(letter_matrix(coin, Letter::P), m), trace_inner(letter_matrix(coin, Letter::Q), m),
          trace_inner(letter_matrix(coin, Letter::R), m), trace_inner(letter_matrix(coin, Letter::S), m)};
}

Mat2 materialize(const Coin& coin, const PqrsCoords& k) {
  return k.p * letter_matrix(coin, Letter::P) + k.q * letter_matrix(coin, Letter::Q) +
         k.r * letter_matrix(coin, Letter::R) + k.s * letter_matrix(coin, Letter::S);
}

}  // namespace qwalk
