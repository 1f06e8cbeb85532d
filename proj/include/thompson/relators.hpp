#pragma once

// Defining relations of F, checked as identities of PL maps.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "thompson/plmap.hpp"
#include "thompson/report.hpp"
#include "thompson/word.hpp"

namespace thompson {

namespace words {

  /// The two relators of the finite presentation (right-action form):
  /// [x1^-1 x0, x0 x1 x0^-1] and [x1^-1 x0, x0^2 x1 x0^-2].
  inline Word finite_relator(int which) {
    Word lhs = x1().inverse() + x0();
    Word rhs = which == 1 ? x(2) : x(3);
    return commutator(lhs, rhs);
  }

}  // namespace words

namespace detail {

  inline std::string idx(char name, std::int64_t i) {
    return std::string(1, name) + std::to_string(i);
  }

}  // namespace detail

/// Checks the finite presentation relators and, up to `depth`:
///   x_k x_n x_k^-1 = x_{n+1}   for 0 <= k < n <= depth,
///   y_k y_n y_k^-1 = y_{n+1}   for 1 <= k < n <= depth,
///   [x_i, y_j] = 1             for 1 <= i, j <= depth.
inline Report check_relators(std::int64_t depth = 8) {
  if (depth < 2) {
    throw std::invalid_argument("check_relators: depth must be >= 2");
  }
  Report report;
  for (int r = 1; r <= 2; ++r) {
    auto rel = words::finite_relator(r);
    report.add("finite relator " + std::to_string(r) + " " + rel.str(),
               word_to_plmap(rel).is_identity());
  }

  // x_n as maps: x_0 is the generator, the rest use the closed form.
  auto xmap = [](std::int64_t n) {
    return n == 0 ? plmap_generator(Generator::x0) : build_xn(n);
  };
  for (std::int64_t n = 1; n <= depth; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      auto xk  = xmap(k);
      auto lhs = compose(compose(xk, xmap(n)), inverse(xk));
      report.add(detail::idx('x', k) + " " + detail::idx('x', n) + " "
                     + detail::idx('x', k) + "^-1 = " + detail::idx('x', n + 1),
                 lhs == xmap(n + 1));
    }
  }
  for (std::int64_t n = 2; n <= depth; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      auto yk  = build_yn(k);
      auto lhs = compose(compose(yk, build_yn(n)), inverse(yk));
      report.add(detail::idx('y', k) + " " + detail::idx('y', n) + " "
                     + detail::idx('y', k) + "^-1 = " + detail::idx('y', n + 1),
                 lhs == build_yn(n + 1));
    }
  }
  for (std::int64_t i = 1; i <= depth; ++i) {
    for (std::int64_t j = 1; j <= depth; ++j) {
      auto xi = build_xn(i);
      auto yj = build_yn(j);
      report.add("[" + detail::idx('x', i) + ", " + detail::idx('y', j) + "] = 1",
                 compose(xi, yj) == compose(yj, xi));
    }
  }
  return report;
}

}  // namespace thompson
