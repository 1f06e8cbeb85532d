#pragma once

// Elements of Thompson's group F as piecewise-linear homeomorphisms of [0,1].
//
// Products follow the right-action convention: compose(f, g) is "f then g",
// i.e. t -> g(f(t)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/dyadic.hpp"

namespace thompson {

struct Breakpoint {
  Dyadic t;
  Dyadic ft;

  friend bool operator==(Breakpoint const&, Breakpoint const&) = default;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

  // log2 of (b.ft - a.ft) / (b.t - a.t), or nullopt when the slope is not a
  // positive power of two.
  inline std::optional<std::int64_t> slope_log2(Breakpoint const& a,
                                                Breakpoint const& b) {
    Dyadic dx = b.t - a.t;
    Dyadic dy = b.ft - a.ft;
    if (dx.sign() <= 0 || dy.sign() <= 0) {
      return std::nullopt;
    }
    // Both numerators are odd, so the ratio is a power of two iff they agree.
    if (dx.numerator() != dy.numerator()) {
      return std::nullopt;
    }
    return static_cast<std::int64_t>(dx.exponent())
           - static_cast<std::int64_t>(dy.exponent());
  }

}  // namespace detail

/// An element of F, stored as its normalized breakpoint list. Two PLMaps are
/// equal as group elements iff their breakpoint lists are equal.
class PLMap {
 public:
  /// The identity.
  PLMap() : points_{{Dyadic::zero(), Dyadic::zero()}, {Dyadic::one(), Dyadic::one()}} {}

  /// Validates and normalizes; throws std::invalid_argument if the points do
  /// not describe an element of F.
  explicit PLMap(std::vector<Breakpoint> points) : points_(std::move(points)) {
    if (auto why = validate(points_, false)) {
      throw std::invalid_argument("PLMap: " + *why);
    }
    normalize();
  }

  static PLMap identity() { return PLMap(); }

  std::vector<Breakpoint> const& breakpoints() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool is_identity() const noexcept { return points_.size() == 2; }

  /// Returns a description of the first violated invariant, if any.
  static std::optional<std::string> validate(std::vector<Breakpoint> const& pts,
                                             bool require_normalized = true) {
    if (pts.size() < 2) {
      return "fewer than two breakpoints";
    }
    if (pts.front() != Breakpoint{Dyadic::zero(), Dyadic::zero()}) {
      return "first breakpoint is not (0,0)";
    }
    if (pts.back() != Breakpoint{Dyadic::one(), Dyadic::one()}) {
      return "last breakpoint is not (1,1)";
    }
    std::optional<std::int64_t> previous;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      auto s = detail::slope_log2(pts[i], pts[i + 1]);
      if (!s) {
        return "segment " + std::to_string(i)
               + " is not increasing with power-of-two slope";
      }
      if (require_normalized && previous && *previous == *s) {
        return "breakpoint " + std::to_string(i) + " is collinear";
      }
      previous = s;
    }
    return std::nullopt;
  }

  /// f(t) for t a dyadic in [0,1].
  Dyadic operator()(Dyadic const& t) const {
    if (t.sign() < 0 || t > Dyadic::one()) {
      throw DomainError("PLMap: argument " + t.str() + " outside [0,1]");
    }
    auto i = segment_of(t, &Breakpoint::t);
    auto s = *detail::slope_log2(points_[i], points_[i + 1]);
    return points_[i].ft + (t - points_[i].t).scaled(s);
  }

  /// f(t) for an arbitrary rational t in [0,1].
  Rational operator()(Rational const& t) const {
    if (t < 0 || t > 1) {
      throw DomainError("PLMap: argument " + to_string(t) + " outside [0,1]");
    }
    std::size_t i = 0;
    while (i + 2 < points_.size() && points_[i + 1].t.to_rational() <= t) {
      ++i;
    }
    auto s = *detail::slope_log2(points_[i], points_[i + 1]);
    Rational slope = 1;
    if (s >= 0) {
      slope = Rational(BigInt(1) << static_cast<std::size_t>(s));
    } else {
      slope = Rational(BigInt(1), BigInt(1) << static_cast<std::size_t>(-s));
    }
    return points_[i].ft.to_rational() + (t - points_[i].t.to_rational()) * slope;
  }

  /// f^{-1}(y) for a dyadic y in [0,1].
  Dyadic preimage(Dyadic const& y) const {
    auto i = segment_of(y, &Breakpoint::ft);
    auto s = *detail::slope_log2(points_[i], points_[i + 1]);
    return points_[i].t + (y - points_[i].ft).scaled(-s);
  }

  friend bool operator==(PLMap const&, PLMap const&) = default;

  friend std::ostream& operator<<(std::ostream& os, PLMap const& f) {
    for (std::size_t i = 0; i < f.points_.size(); ++i) {
      os << (i == 0 ? "" : " ") << '(' << f.points_[i].t << ", "
         << f.points_[i].ft << ')';
    }
    return os;
  }

 private:
  struct Unchecked {};
  PLMap(std::vector<Breakpoint> points, Unchecked) : points_(std::move(points)) {
    normalize();
  }

  friend PLMap compose(PLMap const&, PLMap const&);
  friend PLMap inverse(PLMap const&);
  friend PLMap phi(PLMap const&);

  // Index i of the segment [p_i, p_{i+1}] containing x along the given axis.
  std::size_t segment_of(Dyadic const& x, Dyadic Breakpoint::*axis) const {
    auto it = std::upper_bound(
        points_.begin() + 1, points_.end() - 1, x,
        [axis](Dyadic const& v, Breakpoint const& p) { return v < p.*axis; });
    return static_cast<std::size_t>(it - points_.begin()) - 1;
  }

  void normalize() {
    std::vector<Breakpoint> out;
    out.reserve(points_.size());
    for (auto& p : points_) {
      if (!out.empty() && out.back().t == p.t) {
        continue;
      }
      while (out.size() >= 2
             && detail::slope_log2(out[out.size() - 2], out.back())
                    == detail::slope_log2(out.back(), p)) {
        out.pop_back();
      }
      out.push_back(std::move(p));
    }
    points_ = std::move(out);
  }

  std::vector<Breakpoint> points_;
};

/// The product "f then g": t -> g(f(t)).
inline PLMap compose(PLMap const& f, PLMap const& g) {
  // Break points of the product, measured in the middle copy of [0,1]: the
  // images of f's breakpoints together with g's breakpoints.
  auto const& fp = f.breakpoints();
  auto const& gp = g.breakpoints();
  std::vector<Breakpoint> out;
  out.reserve(fp.size() + gp.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fp.size() || j < gp.size()) {
    Dyadic middle;
    if (j == gp.size() || (i < fp.size() && fp[i].ft < gp[j].t)) {
      middle = fp[i].ft;
      out.push_back({fp[i].t, g(middle)});
      ++i;
    } else if (i == fp.size() || gp[j].t < fp[i].ft) {
      middle = gp[j].t;
      out.push_back({f.preimage(middle), gp[j].ft});
      ++j;
    } else {
      out.push_back({fp[i].t, gp[j].ft});
      ++i;
      ++j;
    }
  }
  return PLMap(std::move(out), PLMap::Unchecked{});
}

inline PLMap inverse(PLMap const& f) {
  std::vector<Breakpoint> out;
  out.reserve(f.size());
  for (auto const& p : f.breakpoints()) {
    out.push_back({p.ft, p.t});
  }
  return PLMap(std::move(out), PLMap::Unchecked{});
}

/// Conjugation by the central symmetry of the square: t -> 1 - f(1 - t).
/// An automorphism of F of order two.
inline PLMap phi(PLMap const& f) {
  std::vector<Breakpoint> out;
  auto const& pts = f.breakpoints();
  out.reserve(pts.size());
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    out.push_back({Dyadic::one() - it->t, Dyadic::one() - it->ft});
  }
  return PLMap(std::move(out), PLMap::Unchecked{});
}

inline bool plmap_equal(PLMap const& f, PLMap const& g) { return f == g; }

enum class Generator : std::uint8_t { x0, x1 };

inline PLMap plmap_generator(Generator which) {
  auto d = [](long n, std::size_t k) { return Dyadic(n, k); };
  if (which == Generator::x0) {
    static PLMap const x0({{d(0, 0), d(0, 0)},
                           {d(1, 1), d(1, 2)},
                           {d(3, 2), d(1, 1)},
                           {d(1, 0), d(1, 0)}});
    return x0;
  }
  static PLMap const x1({{d(0, 0), d(0, 0)},
                         {d(1, 1), d(1, 1)},
                         {d(3, 2), d(5, 3)},
                         {d(7, 3), d(3, 2)},
                         {d(1, 0), d(1, 0)}});
  return x1;
}

/// x_n for n >= 1: the identity on [0, 1 - 2^-n], then a copy of x_1 squeezed
/// into [1 - 2^-n, 1].
inline PLMap build_xn(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("build_xn: n must be >= 1, got " + std::to_string(n));
  }
  auto k   = static_cast<std::size_t>(n);
  auto one = Dyadic::one();
  auto p   = [](std::size_t e) { return Dyadic::inverse_power_of_two(e); };
  return PLMap({{Dyadic::zero(), Dyadic::zero()},
                {one - p(k), one - p(k)},
                {one - p(k + 1), one - Dyadic(3, k + 2)},
                {one - p(k + 2), one - p(k + 1)},
                {one, one}});
}

/// y_n = x_0^{-n-1} x_1 x_0^n for n >= 1: a copy of x_1 mirrored into
/// [0, 2^-n], the identity on [2^-n, 1].
inline PLMap build_yn(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("build_yn: n must be >= 1, got " + std::to_string(n));
  }
  auto k = static_cast<std::size_t>(n);
  auto p = [](std::size_t e) { return Dyadic::inverse_power_of_two(e); };
  return PLMap({{Dyadic::zero(), Dyadic::zero()},
                {p(k + 2), p(k + 1)},
                {p(k + 1), Dyadic(3, k + 2)},
                {p(k), p(k)},
                {Dyadic::one(), Dyadic::one()}});
}

}  // namespace thompson
