#include <numeric>
#include <set>

#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "thompson/thompson.hpp"

using namespace thompson;
using testing_support::Gen;

namespace {

RationalPoint pt(std::string v, std::string w) { return RationalPoint(std::move(v), std::move(w)); }

// Prefix comparison of two points, independent of canonical forms.
bool same_sequence(RationalPoint const& p, RationalPoint const& q) {
  auto len = p.preperiod().size() + q.preperiod().size()
             + 2 * std::lcm(p.period().size(), q.period().size());
  return p.unrolled(len) == q.unrolled(len);
}

}  // namespace

TEST_CASE("canonicalize", "[cantor]") {
  auto a = canonicalize("0", "1000");
  CHECK(a.preperiod().empty());
  CHECK(a.period() == "0100");

  auto b = canonicalize("", "0101");
  CHECK(b.preperiod().empty());
  CHECK(b.period() == "01");

  auto c = canonicalize("1", "1");
  CHECK(c.preperiod().empty());
  CHECK(c.period() == "1");

  // 10(0100) absorbs one letter
  CHECK(canonicalize("10", "0100") == pt("1", "0010"));
  CHECK(canonicalize("0110", "0110") == pt("", "0110"));

  CHECK_THROWS_AS(canonicalize("01", ""), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize("2", "0"), std::invalid_argument);
}

TEST_CASE("canonical form invariants", "[cantor][property]") {
  Gen gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto v = gen.binary(gen.below(9));
    auto w = gen.binary(1 + gen.below(6));
    auto p = canonicalize(v, w);
    // idempotent
    CHECK(canonicalize(p.preperiod(), p.period()) == p);
    // primitive period, distinct endings
    CHECK(detail::is_primitive(p.period()));
    if (!p.preperiod().empty()) {
      CHECK(p.preperiod().back() != p.period().back());
    }
    // same sequence as the raw pair
    std::string raw = v;
    while (raw.size() < v.size() + 3 * w.size()) {
      raw += w;
    }
    raw.resize(v.size() + 3 * w.size());
    CHECK(p.unrolled(raw.size()) == raw);
  }
}

TEST_CASE("point_equal", "[cantor]") {
  CHECK(point_equal(pt("", "0100"), canonicalize("0", "1000")));
  CHECK_FALSE(point_equal(pt("1", "0"), pt("0", "1")));
  auto p = pt("10", "0100");
  CHECK(point_equal(p, p));

  Gen gen(11);
  for (int trial = 0; trial < 400; ++trial) {
    auto p1 = gen.point(4, 3);
    auto p2 = gen.point(4, 3);
    CHECK(point_equal(p1, p2) == same_sequence(p1, p2));
  }
}

TEST_CASE("act_letter follows the prefix rules", "[cantor]") {
  CHECK(act_letter(pt("10", "0100"), Letter::X0) == canonicalize("01", "0100"));
  CHECK(act_letter(pt("", "01"), Letter::X1) == pt("", "01"));
  CHECK(act_letter(pt("", "1"), Letter::X0) == pt("", "1"));
  CHECK(act_letter(pt("", "0"), Letter::X0) == pt("", "0"));
  CHECK(act_letter(pt("", "0"), Letter::X1inv) == pt("", "0"));

  // rule-by-rule on a fixed tail
  auto tail = std::string("011");
  auto on   = [&](std::string head, Letter l) { return act_letter(pt(head, tail), l); };
  CHECK(on("0", Letter::X0) == pt("00", tail));
  CHECK(on("10", Letter::X0) == pt("01", tail));
  CHECK(on("11", Letter::X0) == pt("1", tail));
  CHECK(on("00", Letter::X0inv) == pt("0", tail));
  CHECK(on("01", Letter::X0inv) == pt("10", tail));
  CHECK(on("1", Letter::X0inv) == pt("11", tail));
  CHECK(on("10", Letter::X1) == pt("100", tail));
  CHECK(on("110", Letter::X1) == pt("101", tail));
  CHECK(on("111", Letter::X1) == pt("11", tail));
  CHECK(on("100", Letter::X1inv) == pt("10", tail));
  CHECK(on("101", Letter::X1inv) == pt("110", tail));
  CHECK(on("11", Letter::X1inv) == pt("111", tail));
}

TEST_CASE("act_word", "[cantor]") {
  auto p = pt("10", "0100");
  CHECK(act_word(p, Word{}) == p);
  CHECK(act_word(p, Word::parse("aA")) == p);
  // x1 fixes 10^omega: 10 0^omega -> 100 0^omega
  CHECK(act_word(pt("1", "0"), Word::parse("b")) == pt("1", "0"));
}

TEST_CASE("point_value and value_to_point", "[cantor]") {
  CHECK(point_value(pt("", "0100")) == Rational(4, 15));
  CHECK(point_value(pt("1", "0")) == Rational(1, 2));
  CHECK(point_value(pt("10", "0100")) == Rational(17, 30));
  CHECK(point_value(pt("", "1")) == 1);
  CHECK(point_value(pt("0", "1")) == Rational(1, 2));

  CHECK(value_to_point(Rational(4, 15)) == pt("", "0100"));
  CHECK(value_to_point(Rational(1, 2)) == pt("1", "0"));
  CHECK(value_to_point(Rational(17, 30)) == canonicalize("10", "0100"));
  CHECK(value_to_point(Rational(0)) == pt("", "0"));
  CHECK(value_to_point(Rational(1)) == pt("", "1"));
  CHECK(value_to_point(Rational(5, 6)) == pt("1", "10"));
  CHECK_THROWS_AS(value_to_point(Rational(4, 3)), DomainError);
  CHECK_THROWS_AS(value_to_point(Rational(-1, 3)), DomainError);

  Gen gen(3);
  for (int trial = 0; trial < 400; ++trial) {
    auto p = gen.point(8, 6);
    CHECK(point_value(p) == testing_support::series_value(p.preperiod(), p.period()));
    if (p.period() != "1" || p == pt("", "1")) {
      CHECK(value_to_point(point_value(p)) == p);
    }
  }
}

TEST_CASE("shift", "[cantor]") {
  CHECK(shift(canonicalize("10", "0100")) == pt("0", "0100"));
  CHECK(shift(pt("", "01")) == pt("", "10"));
  CHECK(shift(pt("", "0")) == pt("", "0"));
}

TEST_CASE("action and value agree", "[cantor][property]") {
  Gen gen(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = gen.point(8, 6);
    auto u = gen.word(20);
    CHECK(point_value(act_word(p, u)) == word_to_plmap(u)(point_value(p)));
  }
}

TEST_CASE("letters act bijectively", "[cantor][property]") {
  Gen gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = gen.point(6, 5);
    for (auto l : all_letters) {
      CHECK(act_letter(act_letter(p, l), inverse(l)) == p);
    }
  }
}

TEST_CASE("10^omega and 01^omega lie in different orbits", "[cantor]") {
  auto start  = pt("1", "0");
  auto target = pt("0", "1");
  std::set<RationalPoint> seen{start};
  std::vector<RationalPoint> frontier{start};
  for (int r = 0; r < 8; ++r) {
    std::vector<RationalPoint> next;
    for (auto const& p : frontier) {
      for (auto l : all_letters) {
        auto q = act_letter(p, l);
        if (seen.insert(q).second) {
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  CHECK(seen.size() > 100);
  CHECK_FALSE(seen.contains(target));
}

TEST_CASE("parse_point", "[cantor]") {
  CHECK(parse_point("10(0100)") == canonicalize("10", "0100"));
  CHECK(parse_point("4/15") == pt("", "0100"));
  CHECK(parse_point("0(1000)") == pt("", "0100"));
  CHECK(parse_point("(01)") == pt("", "01"));
  CHECK(parse_point("1") == pt("", "1"));
  CHECK(parse_point("0/7") == pt("", "0"));
  CHECK(parse_point("2/4") == pt("1", "0"));
  CHECK(parse_point("1(0010)").str() == "1(0010)");

  auto position = [](std::string const& text) -> std::size_t {
    try {
      parse_point(text);
    } catch (ParseError const& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("10()") == 3);
  CHECK(position("12(0)") == 1);
  CHECK(position("1(02)") == 3);
  CHECK(position("1(0") == 3);
  CHECK(position("1(0)x") == 4);
  CHECK(position("5/3") == 0);
  CHECK(position("1/0") == 2);
  CHECK(position("") == 0);
  CHECK(position("a/3") == 0);
}
