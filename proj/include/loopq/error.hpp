#pragma once

#include <stdexcept>
#include <string>

namespace loopq {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Malformed input text. position is a 1-based offset into the input when
 * known, 0 otherwise. */
struct parse_error : error {
  explicit parse_error(const std::string& what, std::size_t pos = 0)
      : error(what), position(pos) {}
  std::size_t position;
};

/* A structurally valid expression that violates a semantic requirement
 * (connected sum of non-PD forms, unsupported skeleton, ...). */
struct semantic_error : error {
  using error::error;
};

/* The rule engine cannot (or refuses to) evaluate: no applicable rule,
 * a hypothesis such as simple connectivity or inertness is not
 * established, or an asserted hypothesis turned out inconsistent. */
struct rule_error : error {
  using error::error;
};

/* Misuse of series arithmetic: mismatched truncation bounds, inverting a
 * non-unit, shifting a series with nonzero constant term. */
struct series_error : error {
  using error::error;
};

}  // namespace loopq
