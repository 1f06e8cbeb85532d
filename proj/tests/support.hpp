#pragma once

// Shared helpers for the test suites: seeded generators for property tests
// and the generator maps written out directly from their piecewise formulas.

#include <cstdint>
#include <random>
#include <string>

#include "thompson/thompson.hpp"

namespace testing_support {

using thompson::Rational;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  std::string binary(std::size_t len) {
    std::string s;
    for (std::size_t i = 0; i < len; ++i) {
      s.push_back(below(2) ? '1' : '0');
    }
    return s;
  }

  thompson::Word word(std::size_t max_len) {
    thompson::Word w;
    auto len = below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(thompson::all_letters[below(4)]);
    }
    return w;
  }

  /// Canonical point with |v| <= max_v, 1 <= |w| <= max_w (before
  /// canonicalization).
  thompson::RationalPoint point(std::size_t max_v, std::size_t max_w) {
    auto v = binary(below(max_v + 1));
    auto w = binary(1 + below(max_w));
    return {v, w};
  }

 private:
  std::mt19937_64 rng_;
};

// x0 and x1 straight from their defining piecewise formulas.
inline Rational formula_x0(Rational const& t) {
  if (t <= Rational(1, 2)) return t / 2;
  if (t <= Rational(3, 4)) return t - Rational(1, 4);
  return 2 * t - 1;
}

inline Rational formula_x1(Rational const& t) {
  if (t <= Rational(1, 2)) return t;
  if (t <= Rational(3, 4)) return t / 2 + Rational(1, 4);
  if (t <= Rational(7, 8)) return t - Rational(1, 8);
  return 2 * t - 1;
}

inline Rational formula_x0_inv(Rational const& t) {
  if (t <= Rational(1, 4)) return 2 * t;
  if (t <= Rational(1, 2)) return t + Rational(1, 4);
  return (t + 1) / 2;
}

inline Rational formula_x1_inv(Rational const& t) {
  if (t <= Rational(1, 2)) return t;
  if (t <= Rational(5, 8)) return 2 * (t - Rational(1, 4));
  if (t <= Rational(3, 4)) return t + Rational(1, 8);
  return (t + 1) / 2;
}

/// Image of t under a word, using only the formulas above.
inline Rational formula_eval(thompson::Word const& w, Rational t) {
  for (auto l : w) {
    switch (l) {
      case thompson::Letter::X0: t = formula_x0(t); break;
      case thompson::Letter::X0inv: t = formula_x0_inv(t); break;
      case thompson::Letter::X1: t = formula_x1(t); break;
      case thompson::Letter::X1inv: t = formula_x1_inv(t); break;
    }
  }
  return t;
}

/// Decimal-free binary expansion value of prefix + tail^omega computed as a
/// partial geometric sum, for cross-checking point_value.
inline Rational series_value(std::string const& v, std::string const& w) {
  Rational head = 0;
  Rational scale = 1;
  for (char c : v) {
    scale /= 2;
    head += (c == '1' ? 1 : 0) * scale;
  }
  Rational block = 0;
  Rational bscale = 1;
  for (char c : w) {
    bscale /= 2;
    block += (c == '1' ? 1 : 0) * bscale;
  }
  // sum over k >= 0 of block * bscale^k = block / (1 - bscale)
  return head + scale * block / (1 - bscale);
}

}  // namespace testing_support
