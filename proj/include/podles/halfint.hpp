#pragma once

#include <compare>

namespace podles {

/// Exact half-integer, stored as twice its value so that shifts by 1/2
/// and selection rules stay integer arithmetic.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT: implicit by design

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator*(int n, HalfInt a) { return from_twice(n * a.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

 private:
  int twice_ = 0;
};

/// n/2 as a HalfInt; halves(1) is 1/2, halves(3) is 3/2.
constexpr HalfInt halves(int n) { return HalfInt::from_twice(n); }

}  // namespace podles
