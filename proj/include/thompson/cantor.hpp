#pragma once

// Rational points of the Cantor set {0,1}^omega as eventually periodic
// sequences v w w w ..., and the action of F on them by prefix rewriting.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "thompson/dyadic.hpp"
#include "thompson/word.hpp"

namespace thompson {

namespace detail {

  inline void require_binary(std::string_view s, char const* what) {
    for (char c : s) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument(std::string(what) + " must be a binary string");
      }
    }
  }

  /// Shortest u with s = u^k.
  inline std::string primitive_root(std::string_view s) {
    auto n = s.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = s[i] == s[i - d];
      }
      if (periodic) {
        return std::string(s.substr(0, d));
      }
    }
    return std::string(s);
  }

  inline bool is_primitive(std::string_view s) {
    return !s.empty() && primitive_root(s).size() == s.size();
  }

  inline BigInt binary_value(std::string_view s) {
    BigInt v = 0;
    for (char c : s) {
      v <<= 1;
      v += c == '1' ? 1 : 0;
    }
    return v;
  }

}  // namespace detail

/// The point v w^omega in canonical form: w is primitive and, when v is
/// nonempty, v and w end in different letters. Every eventually periodic
/// sequence has exactly one such form.
class RationalPoint {
 public:
  /// 0^omega
  RationalPoint() : period_("0") {}

  /// Canonicalizes the pair; throws std::invalid_argument if w is empty or
  /// either string is not binary.
  RationalPoint(std::string preperiod, std::string period)
      : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) {
      throw std::invalid_argument("RationalPoint: period must be nonempty");
    }
    detail::require_binary(preperiod_, "preperiod");
    detail::require_binary(period_, "period");
    canonicalize();
  }

  static RationalPoint zero_tail() { return RationalPoint("", "0"); }
  static RationalPoint one_tail() { return RationalPoint("", "1"); }

  std::string const& preperiod() const noexcept { return preperiod_; }
  std::string const& period() const noexcept { return period_; }

  /// 0^omega or 1^omega, the two points fixed by all of F.
  bool is_global_fixed_point() const noexcept {
    return preperiod_.empty() && period_.size() == 1;
  }

  /// True for sequences ending in 0^omega or 1^omega.
  bool is_dyadic() const noexcept { return period_.size() == 1; }

  /// Letter i of the infinite sequence.
  char at(std::size_t i) const {
    if (i < preperiod_.size()) {
      return preperiod_[i];
    }
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  /// First n letters of the infinite sequence.
  std::string unrolled(std::size_t n) const {
    std::string s;
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      s.push_back(at(i));
    }
    return s;
  }

  /// `v(w)`, e.g. `1(0010)` or `(01)`.
  std::string str() const { return preperiod_ + "(" + period_ + ")"; }

  friend bool operator==(RationalPoint const&, RationalPoint const&) = default;
  friend auto operator<=>(RationalPoint const&, RationalPoint const&) = default;

  friend std::ostream& operator<<(std::ostream& os, RationalPoint const& p) {
    return os << p.str();
  }

 private:
  void canonicalize() {
    period_ = detail::primitive_root(period_);
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
      preperiod_.pop_back();
      std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
  }

  std::string preperiod_;
  std::string period_;
};

inline RationalPoint canonicalize(std::string v, std::string w) {
  return RationalPoint(std::move(v), std::move(w));
}

inline bool point_equal(RationalPoint const& p, RationalPoint const& q) {
  return p == q;
}

/// The point 10 w^omega, the base point of the part-(a) generating sets.
inline RationalPoint base_point(std::string const& period) {
  return RationalPoint("10", period);
}

namespace detail {

  struct Rule {
    std::string_view from;
    std::string_view to;
  };

  // Each rule set is a complete prefix code, so exactly one rule applies.
  inline std::array<Rule, 4> const& rules(Letter l) {
    static std::array<Rule, 4> const table[] = {
        {{{"0", "00"}, {"10", "01"}, {"11", "1"}, {"", ""}}},
        {{{"00", "0"}, {"01", "10"}, {"1", "11"}, {"", ""}}},
        {{{"0", "0"}, {"10", "100"}, {"110", "101"}, {"111", "11"}}},
        {{{"0", "0"}, {"100", "10"}, {"101", "110"}, {"11", "111"}}},
    };
    return table[static_cast<std::size_t>(l)];
  }

}  // namespace detail

/// Image of p under one generator letter.
inline RationalPoint act_letter(RationalPoint const& p, Letter l) {
  // Unroll until the preperiod is long enough to hold any rule prefix.
  std::string v = p.preperiod();
  std::string w = p.period();
  while (v.size() < 3) {
    v.push_back(w.front());
    std::rotate(w.begin(), w.begin() + 1, w.end());
  }
  for (auto const& rule : detail::rules(l)) {
    if (rule.from.empty()) {
      break;
    }
    if (std::string_view(v).starts_with(rule.from)) {
      std::string image(rule.to);
      image.append(v, rule.from.size());
      return RationalPoint(std::move(image), std::move(w));
    }
  }
  throw std::logic_error("act_letter: no rule matched " + v);
}

/// Applies the letters left to right.
inline RationalPoint act_word(RationalPoint p, Word const& w) {
  for (auto l : w) {
    p = act_letter(p, l);
  }
  return p;
}

/// The real number 0.v w w w ... in [0,1].
inline Rational point_value(RationalPoint const& p) {
  auto const& v = p.preperiod();
  auto const& w = p.period();
  BigInt cycle = (BigInt(1) << w.size()) - 1;
  BigInt num   = detail::binary_value(v) * cycle + detail::binary_value(w);
  BigInt den   = (BigInt(1) << v.size()) * cycle;
  return Rational(num, den);
}

/// Binary expansion of r in [0,1] by long division. Dyadic rationals in (0,1)
/// get the 0^omega tail; 1 is 1^omega.
inline RationalPoint value_to_point(Rational const& r) {
  if (r < 0 || r > 1) {
    throw DomainError("value_to_point: " + to_string(r) + " outside [0,1]");
  }
  if (r == 1) {
    return RationalPoint::one_tail();
  }
  BigInt const den = boost::multiprecision::denominator(r);
  BigInt rem       = boost::multiprecision::numerator(r);
  std::map<BigInt, std::size_t> seen;
  std::string digits;
  while (seen.find(rem) == seen.end()) {
    seen.emplace(rem, digits.size());
    rem <<= 1;
    if (rem >= den) {
      digits.push_back('1');
      rem -= den;
    } else {
      digits.push_back('0');
    }
  }
  auto start = seen[rem];
  return RationalPoint(digits.substr(0, start), digits.substr(start));
}

/// The one-sided shift: drops the first letter.
inline RationalPoint shift(RationalPoint const& p) {
  if (!p.preperiod().empty()) {
    return RationalPoint(p.preperiod().substr(1), p.period());
  }
  std::string w = p.period();
  std::rotate(w.begin(), w.begin() + 1, w.end());
  return RationalPoint("", std::move(w));
}

/// Parses `v(w)` or a fraction `p/q` with 0 <= p <= q.
inline RationalPoint parse_point(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty point", 0);
  }
  auto open = text.find('(');
  if (open != std::string_view::npos) {
    for (std::size_t i = 0; i < open; ++i) {
      if (text[i] != '0' && text[i] != '1') {
        throw ParseError("expected binary digit in preperiod", i);
      }
    }
    auto close = text.find(')', open);
    if (close == std::string_view::npos) {
      throw ParseError("missing ')'", text.size());
    }
    if (close != text.size() - 1) {
      throw ParseError("trailing characters after ')'", close + 1);
    }
    if (close == open + 1) {
      throw ParseError("empty period", close);
    }
    for (auto i = open + 1; i < close; ++i) {
      if (text[i] != '0' && text[i] != '1') {
        throw ParseError("expected binary digit in period", i);
      }
    }
    return RationalPoint(std::string(text.substr(0, open)),
                         std::string(text.substr(open + 1, close - open - 1)));
  }

  auto slash = text.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from == to) {
      throw ParseError("expected digits", from);
    }
    for (auto i = from; i < to; ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw ParseError("expected decimal digit", i);
      }
    }
    return BigInt(std::string(text.substr(from, to - from)));
  };
  if (slash == std::string_view::npos) {
    auto n = digits(0, text.size());
    if (n > 1) {
      throw ParseError("value outside [0,1]", 0);
    }
    return value_to_point(Rational(n));
  }
  auto p = digits(0, slash);
  auto q = digits(slash + 1, text.size());
  if (q == 0) {
    throw ParseError("zero denominator", slash + 1);
  }
  if (p > q) {
    throw ParseError("value outside [0,1]", 0);
  }
  return value_to_point(Rational(p, q));
}

}  // namespace thompson

template <>
struct std::hash<thompson::RationalPoint> {
  std::size_t operator()(thompson::RationalPoint const& p) const noexcept {
    auto h = std::hash<std::string>{}(p.preperiod());
    return h ^ (std::hash<std::string>{}(p.period()) + 0x9e3779b97f4a7c15ULL
                + (h << 6) + (h >> 2));
  }
};
