#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace isod4 {

/// Exact fraction over 64-bit integers.
///
/// Always stored reduced with a positive denominator, so two equal values
/// have identical representations and `==` is structural. Every operation
/// that would overflow throws `std::overflow_error` instead of wrapping.
class Rational {
public:
  using int_type = std::int64_t;

  Rational() noexcept : num_(0), den_(1) {}
  constexpr Rational(int_type n) : num_(n), den_(1) {} // NOLINT: implicit by design of a number type
  Rational(int_type n, int_type d) : num_(n), den_(d) {
    if (d == 0)
      throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  [[nodiscard]] constexpr int_type num() const { return num_; }
  [[nodiscard]] constexpr int_type den() const { return den_; }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

  /// Numerator of an integral value; throws if the value has a denominator.
  [[nodiscard]] int_type to_integer() const {
    if (den_ != 1)
      throw std::domain_error("Rational: " + str() + " is not an integer");
    return num_;
  }

  [[nodiscard]] std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const { return Rational(checked_neg(num_), den_, raw_tag{}); }

  friend Rational operator+(const Rational &a, const Rational &b) {
    const int_type g = std::gcd(a.den_, b.den_);
    const int_type da = a.den_ / g;
    const int_type db = b.den_ / g;
    return Rational(checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da)),
                    checked_mul(a.den_, db));
  }
  friend Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }
  friend Rational operator*(const Rational &a, const Rational &b) {
    // cross-reduce first to keep intermediates small
    const int_type g1 = std::gcd(a.num_, b.den_);
    const int_type g2 = std::gcd(b.num_, a.den_);
    const int_type n1 = g1 ? a.num_ / g1 : 0, d2 = g1 ? b.den_ / g1 : b.den_;
    const int_type n2 = g2 ? b.num_ / g2 : 0, d1 = g2 ? a.den_ / g2 : a.den_;
    return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0)
      throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }
  Rational &operator/=(const Rational &o) { return *this = *this / o; }

  friend constexpr bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
  struct raw_tag {};
  constexpr Rational(int_type n, int_type d, raw_tag) : num_(n), den_(d) {}

  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    const int_type g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0)
      den_ = 1;
  }

  static int_type checked_mul(int_type a, int_type b) {
    int_type r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("Rational: multiplication overflow");
    return r;
  }
  static int_type checked_add(int_type a, int_type b) {
    int_type r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("Rational: addition overflow");
    return r;
  }
  static int_type checked_neg(int_type a) {
    int_type r;
    if (__builtin_sub_overflow(int_type{0}, a, &r))
      throw std::overflow_error("Rational: negation overflow");
    return r;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

} // namespace isod4
