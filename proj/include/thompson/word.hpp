#pragma once

// Words over {x0, x0^-1, x1, x1^-1}. Text syntax: a = x0, A = x0^-1, b = x1,
// B = x1^-1, read left to right in the order the letters act.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/plmap.hpp"

namespace thompson {

enum class Letter : std::uint8_t { X0, X0inv, X1, X1inv };

inline constexpr Letter all_letters[] = {Letter::X0, Letter::X0inv, Letter::X1,
                                         Letter::X1inv};

constexpr Letter inverse(Letter l) noexcept {
  switch (l) {
    case Letter::X0: return Letter::X0inv;
    case Letter::X0inv: return Letter::X0;
    case Letter::X1: return Letter::X1inv;
    case Letter::X1inv: return Letter::X1;
  }
  return l;
}

constexpr char to_char(Letter l) noexcept {
  switch (l) {
    case Letter::X0: return 'a';
    case Letter::X0inv: return 'A';
    case Letter::X1: return 'b';
    case Letter::X1inv: return 'B';
  }
  return '?';
}

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses the a/A/b/B syntax; whitespace is not allowed.
  static Word parse(std::string_view text) {
    Word w;
    w.letters_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'a': w.letters_.push_back(Letter::X0); break;
        case 'A': w.letters_.push_back(Letter::X0inv); break;
        case 'b': w.letters_.push_back(Letter::X1); break;
        case 'B': w.letters_.push_back(Letter::X1inv); break;
        default:
          throw ParseError(std::string("unexpected character '") + text[i]
                               + "' in word",
                           i);
      }
    }
    return w;
  }

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }

  Word& operator+=(Word const& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  friend Word operator+(Word lhs, Word const& rhs) { return lhs += rhs; }

  /// Reverses the order and inverts each letter.
  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(thompson::inverse(*it));
    }
    return w;
  }

  /// this^k for any integer k.
  Word power(std::int64_t k) const {
    Word base = k < 0 ? inverse() : *this;
    Word w;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
      w += base;
    }
    return w;
  }

  /// Free reduction (cancels adjacent inverse pairs).
  Word reduced() const {
    Word w;
    for (auto l : letters_) {
      if (!w.letters_.empty() && w.letters_.back() == thompson::inverse(l)) {
        w.letters_.pop_back();
      } else {
        w.letters_.push_back(l);
      }
    }
    return w;
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) {
      s.push_back(to_char(l));
    }
    return s;
  }

  friend bool operator==(Word const&, Word const&) = default;

  friend std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << w.str();
  }

 private:
  std::vector<Letter> letters_;
};

namespace words {

  inline Word x0() { return {Letter::X0}; }
  inline Word x1() { return {Letter::X1}; }

  /// x_n = x_0^{n-1} x_1 x_0^{-(n-1)}; x_0 for n = 0.
  inline Word x(std::int64_t n) {
    if (n < 0) {
      throw std::invalid_argument("words::x: n must be >= 0");
    }
    if (n == 0) {
      return x0();
    }
    return x0().power(n - 1) + x1() + x0().power(-(n - 1));
  }

  /// y_n = x_0^{-n-1} x_1 x_0^n.
  inline Word y(std::int64_t n) {
    if (n < 1) {
      throw std::invalid_argument("words::y: n must be >= 1");
    }
    return x0().power(-(n + 1)) + x1() + x0().power(n);
  }

  /// f^h = h f h^{-1}.
  inline Word conjugate(Word const& f, Word const& h) { return h + f + h.inverse(); }

  /// [f, g] = f g f^{-1} g^{-1}.
  inline Word commutator(Word const& f, Word const& g) {
    return f + g + f.inverse() + g.inverse();
  }

  /// Replaces x0 by `img0` and x1 by `img1` (and their inverses accordingly).
  inline Word substitute(Word const& w, Word const& img0, Word const& img1) {
    Word inv0 = img0.inverse();
    Word inv1 = img1.inverse();
    Word out;
    for (auto l : w) {
      switch (l) {
        case Letter::X0: out += img0; break;
        case Letter::X0inv: out += inv0; break;
        case Letter::X1: out += img1; break;
        case Letter::X1inv: out += inv1; break;
      }
    }
    return out;
  }

}  // namespace words

inline PLMap const& letter_map(Letter l) {
  static PLMap const maps[] = {
      plmap_generator(Generator::x0), inverse(plmap_generator(Generator::x0)),
      plmap_generator(Generator::x1), inverse(plmap_generator(Generator::x1))};
  return maps[static_cast<std::size_t>(l)];
}

/// Left-to-right product of the letter maps; the empty word is the identity.
inline PLMap word_to_plmap(Word const& w) {
  PLMap f;
  for (auto l : w) {
    f = compose(f, letter_map(l));
  }
  return f;
}

/// Image of a rational point of [0,1] under the word, one letter at a time.
inline Rational eval_word(Word const& w, Rational t) {
  for (auto l : w) {
    t = letter_map(l)(t);
  }
  return t;
}

}  // namespace thompson
