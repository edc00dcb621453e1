#pragma once

#include <cmath>
#include <cstdint>

namespace qwalk {

// Neumaier-compensated accumulator. Order dependent but deterministic.
template <typename T>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_{0};
  T comp_{0};
};

// Componentwise compensated accumulator for complex values.
template <typename T>
class CompensatedComplexSum {
 public:
  template <typename C>
  CompensatedComplexSum& operator+=(const C& z) {
    re_ += static_cast<T>(z.real());
    im_ += static_cast<T>(z.imag());
    return *this;
  }

  T real() const { return re_.value(); }
  T imag() const { return im_.value(); }

 private:
  CompensatedSum<T> re_;
  CompensatedSum<T> im_;
};

__extension__ typedef unsigned __int128 u128;

// Largest n for which binomial_exact is guaranteed not to overflow.
inline constexpr int kExactBinomialMax = 60;

// C(n, k) as an exact integer; zero outside 0 <= k <= n. Requires n <= 60.
u128 binomial_exact(int n, int k);

// C(n, k) as long double: exact route for n <= 60, multiplicative beyond.
long double binomial(int n, int k);

}  // namespace qwalk
