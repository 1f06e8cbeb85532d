#pragma once

// Command-line front end. Kept in a header so the test suites can drive it
// in-process.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thompson/thompson.hpp"

namespace fstab {

enum class Command { canon, act, eval, value, graph, path, gens, verify, selftest };
enum class Format { text, dot, json };

struct CliConfig {
  Command command = Command::selftest;
  std::string point;
  std::string target;
  std::string word;
  std::optional<std::size_t> radius;
  std::size_t cap = 1'000'000;
  std::optional<Format> format;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t word_len = 12;
  std::int64_t depth = 8;
  std::size_t label_len = 5;
  std::string gens_file;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

  inline void print_point(std::ostream& out, thompson::RationalPoint const& p) {
    out << p.str() << ' ' << thompson::to_string(thompson::point_value(p)) << '\n';
  }

  inline int finish(std::ostream& out, thompson::Report const& r) {
    r.print(out);
    return r.ok() ? exit_ok : exit_failed;
  }

  inline thompson::StabilizerGens read_gens(std::string const& file) {
    if (file == "-") {
      return thompson::StabilizerGens::from_text(std::cin);
    }
    std::ifstream in(file);
    if (!in) {
      throw std::invalid_argument("cannot open " + file);
    }
    return thompson::StabilizerGens::from_text(in);
  }

}  // namespace detail

/// Executes one command. Exit status: 0 success, 1 a verification failed or
/// the computation gave up (cap, radius), 2 bad input.
inline int run(CliConfig const& cfg, std::ostream& out, std::ostream& err) {
  using namespace thompson;
  try {
    switch (cfg.command) {
      case Command::canon:
      case Command::value: {
        auto p = parse_point(cfg.point);
        if (cfg.command == Command::canon) {
          detail::print_point(out, p);
        } else {
          out << to_string(point_value(p)) << '\n';
        }
        return exit_ok;
      }
      case Command::act:
        detail::print_point(out, act_word(parse_point(cfg.point), Word::parse(cfg.word)));
        return exit_ok;
      case Command::eval: {
        auto map = word_to_plmap(Word::parse(cfg.word));
        for (auto const& bp : map.breakpoints()) {
          out << '(' << bp.t << ", " << bp.ft << ")\n";
        }
        return exit_ok;
      }
      case Command::graph: {
        auto b = ball(parse_point(cfg.point), cfg.radius.value_or(4), cfg.cap);
        switch (cfg.format.value_or(Format::text)) {
          case Format::dot: out << export_dot(b); break;
          case Format::json: out << export_json(b); break;
          case Format::text:
            for (std::size_t i = 0; i < b.vertices().size(); ++i) {
              out << i << ' ' << b.vertices()[i].str() << " d=" << b.distances()[i]
                  << '\n';
            }
            for (auto const& e : b.edges()) {
              out << e.source << ' ' << to_string(e.label) << ' ' << e.target << '\n';
            }
            break;
        }
        return exit_ok;
      }
      case Command::path: {
        auto from = parse_point(cfg.point);
        auto to   = parse_point(cfg.target);
        out << find_path(from, to, cfg.radius.value_or(default_path_radius(from))).str()
            << '\n';
        return exit_ok;
      }
      case Command::gens: {
        auto g = theorem_generators(parse_point(cfg.point), cfg.radius);
        if (cfg.format.value_or(Format::text) == Format::json) {
          out << g.to_json().dump(2) << '\n';
        } else {
          out << g.to_text();
        }
        return exit_ok;
      }
      case Command::verify: {
        auto g = cfg.gens_file.empty()
                     ? theorem_generators(parse_point(cfg.point), cfg.radius)
                     : detail::read_gens(cfg.gens_file);
        Report r = verify_stabilizer(g, cfg.samples, cfg.word_len, cfg.seed);
        r.append(check_fp_relators());
        return detail::finish(out, r);
      }
      case Command::selftest: {
        Report r = check_relators(cfg.depth);
        r.append(check_reduction(cfg.label_len, 4));
        for (auto const* w : {"0", "1", "01", "10", "0100", "011"}) {
          r.append(check_grey_labels(w, cfg.label_len));
        }
        for (auto const* v : {"", "1", "01"}) {
          r.append(twin_stabilizer_check(v));
        }
        return detail::finish(out, r);
      }
    }
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::domain_error const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_usage;
}

/// Parses argv into a config and runs it.
inline int main_entry(std::vector<std::string> args, std::ostream& out,
                      std::ostream& err) {
  CLI::App app{"Stabilizers of rational points in Thompson's group F"};
  app.require_subcommand(1);
  CliConfig cfg;

  std::map<std::string, Format> const formats{
      {"text", Format::text}, {"dot", Format::dot}, {"json", Format::json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_radius = [&](CLI::App* sub, char const* help) {
    sub->add_option("--radius", cfg.radius, help)->check(CLI::NonNegativeNumber);
  };

  auto* canon = app.add_subcommand("canon", "Canonical form and exact value of a point");
  canon->add_option("point", cfg.point, "v(w) or p/q")->required();
  canon->callback([&] { cfg.command = Command::canon; });

  auto* act = app.add_subcommand("act", "Image of a point under a word");
  act->add_option("point", cfg.point, "v(w) or p/q")->required();
  act->add_option("word", cfg.word, "word over a,A,b,B")->required();
  act->callback([&] { cfg.command = Command::act; });

  auto* eval = app.add_subcommand("eval", "Breakpoints of the PL map of a word");
  eval->add_option("word", cfg.word, "word over a,A,b,B")->required();
  eval->callback([&] { cfg.command = Command::eval; });

  auto* value = app.add_subcommand("value", "Exact value of a point");
  value->add_option("point", cfg.point, "v(w) or p/q")->required();
  value->callback([&] { cfg.command = Command::value; });

  auto* graph = app.add_subcommand("graph", "Ball in the Schreier graph");
  graph->add_option("point", cfg.point, "v(w) or p/q")->required();
  add_radius(graph, "Ball radius (default 4)");
  graph->add_option("--cap", cfg.cap, "Vertex cap")->check(CLI::PositiveNumber);
  add_format(graph);
  graph->callback([&] { cfg.command = Command::graph; });

  auto* path = app.add_subcommand("path", "Shortest word carrying one point to another");
  path->add_option("from", cfg.point, "v(w) or p/q")->required();
  path->add_option("to", cfg.target, "v(w) or p/q")->required();
  add_radius(path, "Search radius (default |v|+4|w|+8)");
  path->callback([&] { cfg.command = Command::path; });

  auto* gens = app.add_subcommand("gens", "Generating set of the stabilizer");
  gens->add_option("point", cfg.point, "v(w) or p/q")->required();
  add_radius(gens, "Conjugator search radius");
  add_format(gens);
  gens->callback([&] { cfg.command = Command::gens; });

  auto* verify = app.add_subcommand("verify", "Verify a generating set");
  verify->add_option("point", cfg.point, "v(w) or p/q");
  verify->add_option("--gens", cfg.gens_file, "Read generators from a file ('-' for stdin)");
  verify->add_option("--samples", cfg.samples, "Sampled products")->check(CLI::NonNegativeNumber);
  verify->add_option("--length", cfg.word_len, "Maximum factors per sample")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Sampling seed");
  add_radius(verify, "Conjugator search radius");
  verify->callback([&] { cfg.command = Command::verify; });

  auto* selftest = app.add_subcommand("selftest", "Run the built-in identity checks");
  selftest->add_option("--depth", cfg.depth, "Relator depth")->check(CLI::Range(2, 64));
  selftest->add_option("--label-length", cfg.label_len, "Grey label length")->check(CLI::Range(0, 12));
  selftest->callback([&] { cfg.command = Command::selftest; });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (cfg.command == Command::verify && cfg.point.empty() == cfg.gens_file.empty()) {
      throw CLI::ValidationError("verify", "give either a point or --gens");
    }
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return exit_ok;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return run(cfg, out, err);
}

}  // namespace fstab
