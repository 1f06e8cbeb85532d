#pragma once

// Exact dyadic rationals p/2^k and the arbitrary-precision number types the
// rest of the library is written against.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace thompson {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats a rational as `p/q` in lowest terms, or `p` when q = 1.
inline std::string to_string(Rational const& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) {
    return numerator(r).str();
  }
  return numerator(r).str() + "/" + denominator(r).str();
}

/// A number numerator / 2^exponent kept in lowest terms: the numerator is odd,
/// or it is zero and the exponent is zero.
class Dyadic {
 public:
  Dyadic() = default;

  Dyadic(BigInt numerator, std::size_t exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    normalize();
  }

  /// Throws std::invalid_argument on a negative exponent.
  static Dyadic make(BigInt numerator, std::int64_t exponent) {
    if (exponent < 0) {
      throw std::invalid_argument("Dyadic: exponent must be non-negative, got "
                                  + std::to_string(exponent));
    }
    return Dyadic(std::move(numerator), static_cast<std::size_t>(exponent));
  }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  /// 2^-k
  static Dyadic inverse_power_of_two(std::size_t k) { return Dyadic(1, k); }

  BigInt const& numerator() const noexcept { return num_; }
  std::size_t exponent() const noexcept { return exp_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }

  Rational to_rational() const {
    BigInt den = 1;
    den <<= exp_;
    return Rational(num_, den);
  }

  std::string str() const {
    if (exp_ == 0) {
      return num_.str();
    }
    BigInt den = 1;
    den <<= exp_;
    return num_.str() + "/" + den.str();
  }

  /// Multiplies by 2^k, k of either sign.
  Dyadic scaled(std::int64_t k) const {
    if (is_zero()) {
      return *this;
    }
    if (k >= 0) {
      auto uk = static_cast<std::size_t>(k);
      if (uk <= exp_) {
        return Dyadic(num_, exp_ - uk);
      }
      return Dyadic(num_ << (uk - exp_), 0);
    }
    return Dyadic(num_, exp_ + static_cast<std::size_t>(-k));
  }

  friend Dyadic operator+(Dyadic const& a, Dyadic const& b) {
    auto e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
  }

  friend Dyadic operator-(Dyadic const& a, Dyadic const& b) {
    auto e = std::max(a.exp_, b.exp_);
    return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
  }

  friend Dyadic operator-(Dyadic const& a) { return Dyadic(-a.num_, a.exp_); }

  friend bool operator==(Dyadic const& a, Dyadic const& b) noexcept {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }

  friend std::strong_ordering operator<=>(Dyadic const& a, Dyadic const& b) {
    auto e = std::max(a.exp_, b.exp_);
    BigInt lhs = a.num_ << (e - a.exp_);
    BigInt rhs = b.num_ << (e - b.exp_);
    if (lhs < rhs) {
      return std::strong_ordering::less;
    }
    if (rhs < lhs) {
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, Dyadic const& d) {
    return os << d.str();
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      exp_ = 0;
      return;
    }
    auto twos = boost::multiprecision::lsb(boost::multiprecision::abs(num_));
    auto k    = std::min<std::size_t>(twos, exp_);
    num_ >>= k;
    exp_ -= k;
  }

  BigInt num_ = 0;
  std::size_t exp_ = 0;
};

inline Dyadic make_dyadic(BigInt numerator, std::int64_t exponent) {
  return Dyadic::make(std::move(numerator), exponent);
}

}  // namespace thompson
