#include "qwalk/walk.hpp"

#include <string>

#include <Eigen/Dense>

namespace qwalk {

AmplitudeField::AmplitudeField(int time, std::vector<Spinor> slots)
    : time_(time), slots_(std::move(slots)) {
  if (time_ < 0 || slots_.size() != static_cast<std::size_t>(time_) + 1) {
    throw Error(ErrorKind::InvalidArgument, "field at time n needs n + 1 slots");
  }
}

Spinor AmplitudeField::at(int k) const {
  if (k < -time_ || k > time_ || (k + time_) % 2 != 0) return {};
  return slots_[static_cast<std::size_t>((k + time_) / 2)];
}

double AmplitudeField::total_probability() const {
  double total = 0.0;
  for (const Spinor& s : slots_) total += s.norm_sq();
  return total;
}

Distribution::Distribution(int time, std::vector<double> probs)
    : time_(time), probs_(std::move(probs)) {
  if (time_ < 0 || probs_.size() != static_cast<std::size_t>(time_) + 1) {
    throw Error(ErrorKind::InvalidArgument, "distribution at time n needs n + 1 entries");
  }
}

double Distribution::at(int k) const {
  if (k < -time_ || k > time_ || (k + time_) % 2 != 0) return 0.0;
  return probs_[static_cast<std::size_t>((k + time_) / 2)];
}

double Distribution::total() const {
  double total = 0.0;
  for (double p : probs_) total += p;
  return total;
}

AmplitudeField init(const Qubit& qubit) { return AmplitudeField(0, {qubit.spinor()}); }

AmplitudeField step(const Coin& coin, const AmplitudeField& field) {
  const cplx a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d();
  const auto& old = field.slots();
  const std::size_t n = old.size() - 1;
  std::vector<Spinor> next(n + 2);
  // New slot j (position -(n+1) + 2j) receives P psi from old slot j
  // (position k+1) and Q psi from old slot j-1 (position k-1).
  for (std::size_t j = 0; j <= n + 1; ++j) {
    if (j <= n) next[j].left = a * old[j].left + b * old[j].right;
    if (j >= 1) next[j].right = c * old[j - 1].left + d * old[j - 1].right;
  }
  return AmplitudeField(field.time() + 1, std::move(next));
}

AmplitudeField evolve(const Coin& coin, const Qubit& qubit, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "time must be non-negative");
  AmplitudeField field = init(qubit);
  for (int t = 0; t < n; ++t) field = step(coin, field);
  return field;
}

Distribution to_distribution(const AmplitudeField& field) {
  std::vector<double> probs;
  probs.reserve(field.slots().size());
  for (const Spinor& s : field.slots()) probs.push_back(s.norm_sq());
  return Distribution(field.time(), std::move(probs));
}

Distribution distribution(const Coin& coin, const Qubit& qubit, int n) {
  return to_distribution(evolve(coin, qubit, n));
}

namespace {

Eigen::MatrixXcd dense_operator(const Mat2& u, int big_n) {
  if (big_n < 1 || big_n > kDenseCap) {
    throw Error(ErrorKind::CapExceeded,
                "dense operator needs 1 <= N <= " + std::to_string(kDenseCap));
  }
  const Mat2 p{u.m00, u.m01, 0.0, 0.0};
  const Mat2 q{0.0, 0.0, u.m10, u.m11};
  const int blocks = 2 * big_n + 1;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(2 * blocks, 2 * blocks);
  auto place = [&op](int row, int col, const Mat2& m) {
    op(2 * row, 2 * col) = m.m00;
    op(2 * row, 2 * col + 1) = m.m01;
    op(2 * row + 1, 2 * col) = m.m10;
    op(2 * row + 1, 2 * col + 1) = m.m11;
  };
  for (int row = 0; row < blocks; ++row) {
    place(row, (row + blocks - 1) % blocks, q);
    place(row, (row + 1) % blocks, p);
  }
  return op;
}

}  // namespace

double dense_unitary_check(const Mat2& coin_matrix, int big_n) {
  const Eigen::MatrixXcd op = dense_operator(coin_matrix, big_n);
  const Eigen::MatrixXcd gram = op.adjoint() * op;
  return (gram - Eigen::MatrixXcd::Identity(op.rows(), op.cols())).cwiseAbs().maxCoeff();
}

double dense_unitary_check(const Coin& coin, int big_n) {
  return dense_unitary_check(coin.matrix(), big_n);
}

AmplitudeField dense_evolve(const Coin& coin, const Qubit& qubit, int big_n, int n) {
  if (n < 0 || n > big_n) {
    throw Error(ErrorKind::InvalidArgument, "dense evolution needs 0 <= n <= N");
  }
  const Eigen::MatrixXcd op = dense_operator(coin.matrix(), big_n);
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(op.rows());
  state(2 * big_n) = qubit.alpha();
  state(2 * big_n + 1) = qubit.beta();
  for (int t = 0; t < n; ++t) state = op * state;

  std::vector<Spinor> slots;
  for (int k = -n; k <= n; k += 2) {
    const int block = k + big_n;
    slots.push_back({state(2 * block), state(2 * block + 1)});
  }
  return AmplitudeField(n, std::move(slots));
}

}  // namespace qwalk
