#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopq/error.hpp"
#include "loopq/parse.hpp"
#include "loopq/space.hpp"

namespace loopq {

/*
 * The data of a pullback fibration over a connected sum: a fibration
 * F -> L -> C with L and C Poincare duality forms, another PD form B of
 * the same dimension as C, and the assertion that the fibre inclusion
 * F -> M into the pulled-back total space is rationally null homotopic.
 *
 * inertness_overrides lists PD expressions (canonical text) whose
 * top-cell attaching map the scenario asserts to be rationally inert,
 * for use where the more-than-one-generator criterion cannot decide.
 */
struct FibrationScenario {
  std::string name;
  SpaceRef fibre;    // F
  SpaceRef total;    // L
  SpaceRef base;     // C
  SpaceRef summand;  // B
  bool alpha_null = false;
  std::vector<std::pair<std::string, bool>> inertness_overrides;
  std::optional<int> max_degree;
};

/*
 * Line-oriented scenario format:
 *
 *   # whole-line comment
 *   name = hopf-pullback
 *   F = S^1
 *   L = S^3 x S^4
 *   C = S^2 x S^4
 *   B = S^3 x S^3
 *   alpha_null = true
 *   max_degree = 32          (optional)
 *   inert = S^3 x S^4        (optional, repeatable)
 *
 * '#' starts a comment only as the first non-blank character of a line,
 * since '#' is also the connected-sum operator inside expression values.
 * Unknown or duplicated keys are errors.
 */
inline FibrationScenario parse_scenario_text(std::string_view text,
                                             std::string_view default_name = "scenario") {
  FibrationScenario s;
  s.name = std::string(default_name);
  bool have_name = false, have_f = false, have_l = false, have_c = false,
       have_b = false, have_alpha = false;

  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r'))
      v.remove_suffix(1);
    return v;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    const std::size_t eq = stripped.find('=');
    auto fail = [&](const std::string& what) -> void {
      throw parse_error("line " + std::to_string(line_no) + ": " + what, line_no);
    };
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string key(trim(stripped.substr(0, eq)));
    const std::string value(trim(stripped.substr(eq + 1)));
    if (key.empty()) fail("empty key");
    if (value.empty()) fail("empty value for key '" + key + "'");

    auto parse_expr_value = [&](const char* what) -> SpaceRef {
      try {
        return parse_space(value);
      } catch (const error& ex) {
        fail(std::string(what) + ": " + ex.what());
        throw;  // unreachable
      }
    };
    auto once = [&](bool& flag) {
      if (flag) fail("duplicate key '" + key + "'");
      flag = true;
    };

    if (key == "name") {
      once(have_name);
      s.name = value;
    } else if (key == "F") {
      once(have_f);
      s.fibre = parse_expr_value("F");
    } else if (key == "L") {
      once(have_l);
      s.total = parse_expr_value("L");
    } else if (key == "C") {
      once(have_c);
      s.base = parse_expr_value("C");
    } else if (key == "B") {
      once(have_b);
      s.summand = parse_expr_value("B");
    } else if (key == "alpha_null") {
      once(have_alpha);
      if (value == "true")
        s.alpha_null = true;
      else if (value == "false")
        s.alpha_null = false;
      else
        fail("alpha_null must be 'true' or 'false', got '" + value + "'");
    } else if (key == "max_degree") {
      if (s.max_degree) fail("duplicate key 'max_degree'");
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        fail("max_degree must be an integer, got '" + value + "'");
      }
      if (n < 1 || n > 512) fail("max_degree must be in [1, 512]");
      s.max_degree = n;
    } else if (key == "inert") {
      SpaceRef e = parse_expr_value("inert");
      s.inertness_overrides.emplace_back(to_text(*e), true);
    } else {
      fail("unknown key '" + key + "'");
    }
  }

  if (!have_f) throw parse_error("missing required key 'F'");
  if (!have_l) throw parse_error("missing required key 'L'");
  if (!have_c) throw parse_error("missing required key 'C'");
  if (!have_b) throw parse_error("missing required key 'B'");
  if (!have_alpha) throw parse_error("missing required key 'alpha_null'");
  return s;
}

inline FibrationScenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (const auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0)
    stem = stem.substr(0, dot);
  return parse_scenario_text(buf.str(), stem);
}

}  // namespace loopq
