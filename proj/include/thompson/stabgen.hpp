#pragma once

// Generating sets for stabilizers St_F(b) of rational points b.
//
// For a = 10 w^omega the Reidemeister-Schreier generators collapse to
//   x2, x3, y1, y2, w(x1^-1, x1^-1 x0),
// and for any other rational b != 0^omega, 1^omega the same five words are
// conjugated by a word h carrying b to 10 w^omega.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thompson/cantor.hpp"
#include "thompson/plmap.hpp"
#include "thompson/relators.hpp"
#include "thompson/report.hpp"
#include "thompson/schreier.hpp"
#include "thompson/word.hpp"

namespace thompson {

enum class SchreierKind { X, Y, Z };

/// The Schreier generators x_{W,n}, y_{W,n} and z_w as words.
///
/// For X and Y, `period` may be empty; when given, W must not start with
/// w^R(B,A). For Z, `label` and `n` are ignored and `period` must be primitive.
inline Word schreier_generator(SchreierKind kind, std::string const& label,
                               std::int64_t n, std::string const& period = {}) {
  if (kind == SchreierKind::Z) {
    detail::require_binary(period, "period");
    if (!detail::is_primitive(period)) {
      throw std::invalid_argument("schreier_generator: period '" + period
                                  + "' is empty or a proper power");
    }
    return loop_word(period);
  }
  if (n < 1) {
    throw std::invalid_argument("schreier_generator: n must be >= 1, got "
                                + std::to_string(n));
  }
  if (!period.empty()
      && std::string_view(label).starts_with(forbidden_grey_prefix(period))) {
    throw std::invalid_argument("schreier_generator: label '" + label
                                + "' has the forbidden prefix for w=" + period);
  }
  auto core = kind == SchreierKind::X ? words::x(n + 1) : words::y(n);
  return words::conjugate(core, grey_label_word(label));
}

namespace detail {

  inline std::int64_t count(std::string const& s, char c) {
    return static_cast<std::int64_t>(std::count(s.begin(), s.end(), c));
  }

}  // namespace detail

/// x_{W,n} = x_{n+1+#B(W)} and y_{W,n} = y_{n+#A(W)} for every {A,B}-label W
/// with |W| <= max_label_len and 1 <= n <= max_n.
inline Report check_reduction(std::size_t max_label_len, std::int64_t max_n) {
  if (max_n < 1) {
    throw std::invalid_argument("check_reduction: max_n must be >= 1");
  }
  Report report;
  std::size_t checked = 0;
  for (auto const& label : grey_labels_up_to(max_label_len)) {
    auto nb = detail::count(label, 'B');
    auto na = detail::count(label, 'A');
    for (std::int64_t n = 1; n <= max_n; ++n) {
      auto x = word_to_plmap(schreier_generator(SchreierKind::X, label, n));
      auto y = word_to_plmap(schreier_generator(SchreierKind::Y, label, n));
      auto name = "W='" + label + "' n=" + std::to_string(n);
      if (x != build_xn(n + 1 + nb)) {
        report.add("x_{" + name + "} = x" + std::to_string(n + 1 + nb), false);
      }
      if (y != build_yn(n + na)) {
        report.add("y_{" + name + "} = y" + std::to_string(n + na), false);
      }
      checked += 2;
    }
  }
  report.add("reduction x_{W,n}, y_{W,n} for |W| <= " + std::to_string(max_label_len)
                 + ", n <= " + std::to_string(max_n) + " (" + std::to_string(checked)
                 + " identities)",
             report.ok());
  return report;
}

/// A generating set of St_F(point) as words.
struct StabilizerGens {
  RationalPoint point;
  Word conjugator;                 // h, with act_word(point, h) = 10 w^omega
  std::string period;              // w used for the fifth generator
  std::vector<Word> generators;    // 5 words, or x0, x1 for 0^omega / 1^omega

  /// Header line then one word per line.
  std::string to_text() const {
    std::string s = "# point=" + point.str() + " h=" + conjugator.str() + " w="
                    + period + "\n";
    for (auto const& g : generators) {
      s += g.str() + "\n";
    }
    return s;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["point"] = point.str();
    j["h"]     = conjugator.str();
    j["w"]     = period;
    auto& gs = j["generators"] = nlohmann::ordered_json::array();
    for (auto const& g : generators) {
      gs.push_back(g.str());
    }
    return j;
  }

  /// Inverse of to_text.
  static StabilizerGens from_text(std::istream& in) {
    StabilizerGens g;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty()) {
        continue;
      }
      if (line.front() == '#') {
        std::istringstream fields(line.substr(1));
        std::string field;
        while (fields >> field) {
          auto eq = field.find('=');
          if (eq == std::string::npos) {
            throw ParseError("malformed header field '" + field + "'", 0);
          }
          auto key = field.substr(0, eq);
          auto val = field.substr(eq + 1);
          if (key == "point") {
            g.point = parse_point(val);
            header  = true;
          } else if (key == "h") {
            g.conjugator = Word::parse(val);
          } else if (key == "w") {
            g.period = val;
          }
        }
        continue;
      }
      g.generators.push_back(Word::parse(line));
    }
    if (!header) {
      throw ParseError("missing '# point=' header", 0);
    }
    return g;
  }
};

/// The five words x2, x3, y1, y2, w(x1^-1, x1^-1 x0) generating St_F(10 w^omega).
inline std::vector<Word> base_generators(std::string const& period) {
  Word fifth;
  for (char c : period) {
    fifth.push_back(Letter::X1inv);
    if (c == '1') {
      fifth.push_back(Letter::X0);
    }
  }
  return {words::x(2), words::x(3), words::y(1), words::y(2), fifth};
}

/// The generating set for St_F(b). When b already reads 10 u^omega for a
/// rotation u of its period, h is empty and u is used; otherwise h is a
/// shortest word moving b to 10 w^omega with w the canonical period.
/// Throws PathNotFound when no conjugator exists within max_radius.
inline StabilizerGens theorem_generators(RationalPoint const& b,
                                         std::optional<std::size_t> max_radius = {}) {
  StabilizerGens g;
  g.point = b;
  if (b.is_global_fixed_point()) {
    g.period     = b.period();
    g.generators = {words::x0(), words::x1()};
    return g;
  }
  if (b.at(0) == '1' && b.at(1) == '0') {
    auto tail = shift(shift(b));
    if (tail.preperiod().empty()) {
      g.period     = tail.period();
      g.generators = base_generators(g.period);
      return g;
    }
  }
  g.period     = b.period();
  g.conjugator = find_path(b, base_point(g.period),
                           max_radius.value_or(default_path_radius(b)));
  for (auto const& s : base_generators(g.period)) {
    g.generators.push_back(words::conjugate(s, g.conjugator));
  }
  return g;
}

/// Reproducible pseudorandom source for sampling (raw mt19937_64 outputs).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, bound).
  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(engine_() % bound);
  }

  /// Product of between 1 and max_factors factors, each a random element of
  /// `pool` or its inverse.
  Word product(std::vector<Word> const& pool, std::size_t max_factors) {
    Word w;
    auto factors = 1 + below(max_factors);
    for (std::size_t i = 0; i < factors; ++i) {
      auto const& g = pool[below(pool.size())];
      w += below(2) == 0 ? g : g.inverse();
    }
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

/// Checks that `word` fixes p symbolically and as a PL map at p's value.
inline void check_fixes(Report& report, std::string const& name, Word const& word,
                        RationalPoint const& p) {
  auto image  = act_word(p, word);
  auto value  = point_value(p);
  auto mapped = eval_word(word, value);
  bool symbolic = image == p;
  bool numeric  = mapped == value;
  std::string detail;
  if (!symbolic) {
    detail += "symbolic image " + image.str();
  }
  if (!numeric) {
    detail += (detail.empty() ? "" : "; ") + std::string("value image ")
              + to_string(mapped);
  }
  report.add(name + " fixes " + p.str(), symbolic && numeric, detail);
}

/// Generators fix the point under both actions, sampled products fix it, and
/// the x_n, y_n needed by the reduction are recovered from x2, x3, y1, y2.
inline Report verify_stabilizer(StabilizerGens const& g, std::size_t samples = 100,
                                std::size_t word_len = 12, std::uint64_t seed = 1) {
  Report report;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    check_fixes(report, "generator " + std::to_string(i + 1) + " ("
                            + g.generators[i].str() + ")",
                g.generators[i], g.point);
  }

  if (samples > 0 && !g.generators.empty() && word_len > 0) {
    Sampler rng(seed);
    std::size_t bad = 0;
    std::string first_bad;
    for (std::size_t s = 0; s < samples; ++s) {
      auto w = rng.product(g.generators, word_len);
      if (act_word(g.point, w) != g.point) {
        if (bad++ == 0) {
          first_bad = w.str();
        }
      }
    }
    report.add(std::to_string(samples) + " sampled products of <= "
                   + std::to_string(word_len) + " factors fix " + g.point.str(),
               bad == 0, bad == 0 ? "" : std::to_string(bad) + " failures, e.g. " + first_bad);
  }

  auto x2 = build_xn(2);
  auto x3 = build_xn(3);
  auto y1 = build_yn(1);
  auto y2 = build_yn(2);
  auto conj_power = [](PLMap const& base, PLMap const& f, std::int64_t k) {
    PLMap c;
    for (std::int64_t i = 0; i < k; ++i) {
      c = compose(c, base);
    }
    return compose(compose(c, f), inverse(c));
  };
  for (std::int64_t n = 4; n <= 8; ++n) {
    report.add("x" + std::to_string(n) + " = x2^" + std::to_string(n - 3)
                   + " x3 x2^-" + std::to_string(n - 3),
               conj_power(x2, x3, n - 3) == build_xn(n));
  }
  for (std::int64_t n = 3; n <= 8; ++n) {
    report.add("y" + std::to_string(n) + " = y1^" + std::to_string(n - 2)
                   + " y2 y1^-" + std::to_string(n - 2),
               conj_power(y1, y2, n - 2) == build_yn(n));
  }
  return report;
}

/// The eight relators of the finite presentation fragment for
/// <x2, x3, y1, y2>: both relators of F transported to <x2, x3> and to
/// <y1, y2>, and [x_i, y_j] for i in {2, 3}, j in {1, 2}.
inline Report check_fp_relators() {
  Report report;
  auto x2 = words::x(2);
  auto x3 = words::x(3);
  auto y1 = words::y(1);
  auto y2 = words::y(2);
  for (int r = 1; r <= 2; ++r) {
    auto rel = words::finite_relator(r);
    report.add("relator " + std::to_string(r) + " in <x2, x3>",
               word_to_plmap(words::substitute(rel, x2, x3)).is_identity());
    report.add("relator " + std::to_string(r) + " in <y1, y2>",
               word_to_plmap(words::substitute(rel, y1, y2)).is_identity());
  }
  for (int i = 2; i <= 3; ++i) {
    for (int j = 1; j <= 2; ++j) {
      auto c = words::commutator(words::x(i), words::y(j));
      report.add("[x" + std::to_string(i) + ", y" + std::to_string(j) + "] = 1",
                 word_to_plmap(c).is_identity());
    }
  }
  return report;
}

/// v10^omega and v01^omega are different points of the Cantor set with the
/// same real value; each one's generators must fix the other.
inline Report twin_stabilizer_check(std::string const& v) {
  detail::require_binary(v, "preperiod");
  RationalPoint p(v + "1", "0");
  RationalPoint q(v + "0", "1");
  auto gp = theorem_generators(p);
  auto gq = theorem_generators(q);
  Report report;
  for (auto const& [gens, label] : {std::pair{&gp, "p"}, std::pair{&gq, "q"}}) {
    for (std::size_t i = 0; i < gens->generators.size(); ++i) {
      auto const& word = gens->generators[i];
      auto name = std::string(label) + "-generator " + std::to_string(i + 1);
      bool own   = act_word(gens->point, word) == gens->point;
      auto other = gens == &gp ? q : p;
      bool twin  = act_word(other, word) == other;
      report.add(name + " fixes " + p.str() + " and " + q.str(), own && twin);
    }
  }
  return report;
}

/// The dyadic case 1/2: x3 = x1 x2 x1^-1, and sampled elements of <x1, x2>
/// commute with sampled elements of <y1, y2>.
inline Report check_half_product_structure(std::size_t pairs = 50,
                                           std::size_t word_len = 8,
                                           std::uint64_t seed = 1) {
  Report report;
  auto x1 = build_xn(1);
  report.add("x3 = x1 x2 x1^-1",
             compose(compose(x1, build_xn(2)), inverse(x1)) == build_xn(3));
  Sampler rng(seed);
  std::vector<Word> left{words::x(1), words::x(2)};
  std::vector<Word> right{words::y(1), words::y(2)};
  std::size_t bad = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    auto f = word_to_plmap(rng.product(left, word_len));
    auto g = word_to_plmap(rng.product(right, word_len));
    bad += compose(f, g) == compose(g, f) ? 0 : 1;
  }
  report.add(std::to_string(pairs) + " sampled pairs from <x1,x2> x <y1,y2> commute",
             bad == 0, bad == 0 ? "" : std::to_string(bad) + " non-commuting pairs");
  return report;
}

}  // namespace thompson
