#pragma once

// Finite pieces of the orbital Schreier graph of a rational point under
// {x0, x1}, explored breadth first.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "thompson/cantor.hpp"
#include "thompson/report.hpp"
#include "thompson/word.hpp"

namespace thompson {

class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(std::size_t cap)
      : std::runtime_error("Schreier ball exceeds the vertex cap of "
                           + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class PathNotFound : public std::runtime_error {
 public:
  PathNotFound(RationalPoint const& from, RationalPoint const& to,
               std::size_t radius)
      : std::runtime_error("no path from " + from.str() + " to " + to.str()
                           + " within radius " + std::to_string(radius)),
        radius_(radius) {}

  std::size_t explored_radius() const noexcept { return radius_; }

 private:
  std::size_t radius_;
};

struct SchreierEdge {
  std::size_t source;
  Generator label;
  std::size_t target;

  friend bool operator==(SchreierEdge const&, SchreierEdge const&) = default;
};

struct ParentLink {
  std::size_t vertex;
  Letter letter;
};

inline char const* to_string(Generator g) noexcept {
  return g == Generator::x0 ? "x0" : "x1";
}

/// The ball of the given radius around the seed. Vertices are numbered in BFS
/// discovery order, trying letters in the order x0, x0^-1, x1, x1^-1.
/// Only x0- and x1-arrows are stored; every vertex strictly inside the ball
/// has both, boundary vertices keep those landing inside the ball.
class SchreierBall {
 public:
  RationalPoint const& seed() const noexcept { return vertices_.front(); }
  std::size_t radius() const noexcept { return radius_; }
  std::vector<RationalPoint> const& vertices() const noexcept { return vertices_; }
  std::vector<SchreierEdge> const& edges() const noexcept { return edges_; }
  std::vector<std::size_t> const& distances() const noexcept { return distance_; }

  /// Parent of vertex i on a shortest path from the seed; nullopt for the seed.
  std::optional<ParentLink> const& parent(std::size_t i) const {
    return parent_.at(i);
  }

  std::optional<std::size_t> index_of(RationalPoint const& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  /// Word u with act_word(seed, u) = vertex i and |u| = distance of i.
  Word path_to(std::size_t i) const {
    std::vector<Letter> rev;
    while (parent_.at(i)) {
      rev.push_back(parent_[i]->letter);
      i = parent_[i]->vertex;
    }
    return Word(std::vector<Letter>(rev.rbegin(), rev.rend()));
  }

 private:
  friend SchreierBall ball(RationalPoint const&, std::size_t, std::size_t);

  std::size_t radius_ = 0;
  std::vector<RationalPoint> vertices_;
  std::vector<std::size_t> distance_;
  std::vector<std::optional<ParentLink>> parent_;
  std::vector<SchreierEdge> edges_;
  std::unordered_map<RationalPoint, std::size_t> index_;
};

/// Throws CapacityError once more than `vertex_cap` vertices are discovered.
inline SchreierBall ball(RationalPoint const& seed, std::size_t radius,
                         std::size_t vertex_cap = 1'000'000) {
  if (vertex_cap < 1) {
    throw std::invalid_argument("ball: vertex_cap must be >= 1");
  }
  SchreierBall b;
  b.radius_ = radius;
  b.vertices_.push_back(seed);
  b.distance_.push_back(0);
  b.parent_.emplace_back();
  b.index_.emplace(seed, 0);

  for (std::size_t head = 0; head < b.vertices_.size(); ++head) {
    if (b.distance_[head] == radius) {
      continue;
    }
    for (auto l : all_letters) {
      auto image = act_letter(b.vertices_[head], l);
      if (b.index_.contains(image)) {
        continue;
      }
      if (b.vertices_.size() == vertex_cap) {
        throw CapacityError(vertex_cap);
      }
      b.index_.emplace(image, b.vertices_.size());
      b.vertices_.push_back(std::move(image));
      b.distance_.push_back(b.distance_[head] + 1);
      b.parent_.emplace_back(ParentLink{head, l});
    }
  }

  for (std::size_t i = 0; i < b.vertices_.size(); ++i) {
    for (auto [g, l] : {std::pair{Generator::x0, Letter::X0},
                        std::pair{Generator::x1, Letter::X1}}) {
      if (auto j = b.index_of(act_letter(b.vertices_[i], l))) {
        b.edges_.push_back({i, g, *j});
      }
    }
  }
  return b;
}

/// A shortest word h with act_word(from, h) = to, found by breadth-first
/// search out to `max_radius`.
inline Word find_path(RationalPoint const& from, RationalPoint const& to,
                      std::size_t max_radius) {
  if (from == to) {
    return {};
  }
  std::vector<RationalPoint> seen{from};
  std::vector<std::optional<ParentLink>> parent{std::nullopt};
  std::unordered_map<RationalPoint, std::size_t> index{{from, 0}};
  std::size_t level_begin = 0;
  for (std::size_t depth = 0; depth < max_radius; ++depth) {
    std::size_t level_end = seen.size();
    for (std::size_t head = level_begin; head < level_end; ++head) {
      for (auto l : all_letters) {
        auto image = act_letter(seen[head], l);
        if (index.contains(image)) {
          continue;
        }
        index.emplace(image, seen.size());
        parent.emplace_back(ParentLink{head, l});
        bool found = image == to;
        seen.push_back(std::move(image));
        if (found) {
          std::vector<Letter> rev;
          for (auto i = seen.size() - 1; parent[i]; i = parent[i]->vertex) {
            rev.push_back(parent[i]->letter);
          }
          return Word(std::vector<Letter>(rev.rbegin(), rev.rend()));
        }
      }
    }
    level_begin = level_end;
  }
  throw PathNotFound(from, to, max_radius);
}

/// Default search radius |v| + 4|w| + 8 for conjugators starting at p.
inline std::size_t default_path_radius(RationalPoint const& p) {
  return p.preperiod().size() + 4 * p.period().size() + 8;
}

// Grey labels: words over {A, B} addressing vertices below 10 w^omega, with
// A = x0^-1 x1 and B = x1.

using GreyLabel = std::string;

inline void require_grey_label(std::string_view label) {
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] != 'A' && label[i] != 'B') {
      throw ParseError("grey labels use only A and B", i);
    }
  }
}

/// W(x0^-1 x1, x1)
inline Word grey_label_word(std::string_view label) {
  require_grey_label(label);
  Word w;
  for (char c : label) {
    if (c == 'A') {
      w.push_back(Letter::X0inv);
    }
    w.push_back(Letter::X1);
  }
  return w;
}

/// w^R(B, A): reverse w, then 0 -> B and 1 -> A. Labels with this prefix
/// revisit vertices of the nontrivial loop.
inline GreyLabel forbidden_grey_prefix(std::string_view period) {
  GreyLabel s;
  for (auto it = period.rbegin(); it != period.rend(); ++it) {
    s.push_back(*it == '0' ? 'B' : 'A');
  }
  return s;
}

/// z_w = w^R(x1, x0^-1 x1), the word read around the nontrivial loop.
inline Word loop_word(std::string_view period) {
  return grey_label_word(forbidden_grey_prefix(period));
}

inline RationalPoint grey_vertex(RationalPoint const& base, std::string_view label) {
  return act_word(base, grey_label_word(label));
}

/// All {A,B}-words of length <= max_len, shortest first, then lexicographic.
inline std::vector<GreyLabel> grey_labels_up_to(std::size_t max_len) {
  std::vector<GreyLabel> out{""};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (auto i = level_begin; i < level_end; ++i) {
      out.push_back(out[i] + 'A');
      out.push_back(out[i] + 'B');
    }
    level_begin = level_end;
  }
  return out;
}

/// Grey vertices below 10 w^omega with labels avoiding w^R(B,A) as a prefix
/// are pairwise distinct, and z_w closes the loop at 10 w^omega.
inline Report check_grey_labels(std::string const& period, std::size_t max_len) {
  if (!detail::is_primitive(period)) {
    throw std::invalid_argument("check_grey_labels: period must be primitive");
  }
  detail::require_binary(period, "period");
  Report report;
  auto base      = base_point(period);
  auto forbidden = forbidden_grey_prefix(period);
  std::unordered_map<RationalPoint, GreyLabel> owner;
  std::size_t labels = 0;
  std::string clash;
  for (auto const& label : grey_labels_up_to(max_len)) {
    if (std::string_view(label).starts_with(forbidden)) {
      continue;
    }
    ++labels;
    auto [it, inserted] = owner.emplace(grey_vertex(base, label), label);
    if (!inserted && clash.empty()) {
      clash = "'" + it->second + "' and '" + label + "' both reach " + it->first.str();
    }
  }
  report.add("w=" + period + ": " + std::to_string(labels)
                 + " grey labels up to length " + std::to_string(max_len)
                 + " are distinct",
             clash.empty(), clash);
  auto z     = loop_word(period);
  auto image = act_word(base, z);
  report.add("w=" + period + ": z_w = " + z.str() + " fixes " + base.str(),
             image == base, image == base ? "" : "image " + image.str());
  return report;
}

/// Deterministic Graphviz rendering: nodes in index order named by their
/// canonical `v(w)` strings, the seed drawn with a double border, then edges
/// in (source, label) order.
inline std::string export_dot(SchreierBall const& b) {
  std::ostringstream os;
  os << "digraph schreier {\n";
  for (std::size_t i = 0; i < b.vertices().size(); ++i) {
    os << "  \"" << b.vertices()[i].str() << '"';
    if (i == 0) {
      os << " [peripheries=2]";
    }
    os << ";\n";
  }
  for (auto const& e : b.edges()) {
    os << "  \"" << b.vertices()[e.source].str() << "\" -> \""
       << b.vertices()[e.target].str() << "\" [label=\"" << to_string(e.label)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline nlohmann::ordered_json ball_to_json(SchreierBall const& b) {
  nlohmann::ordered_json j;
  j["seed"]   = b.seed().str();
  j["radius"] = b.radius();
  auto& vs    = j["vertices"] = nlohmann::ordered_json::array();
  for (auto const& v : b.vertices()) {
    vs.push_back(v.str());
  }
  auto& es = j["edges"] = nlohmann::ordered_json::array();
  for (auto const& e : b.edges()) {
    es.push_back({e.source, to_string(e.label), e.target});
  }
  return j;
}

inline std::string export_json(SchreierBall const& b) {
  return ball_to_json(b).dump(2) + "\n";
}

}  // namespace thompson
