#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "loopq/loop.hpp"
#include "loopq/ranks.hpp"
#include "loopq/series.hpp"
#include "loopq/verifier.hpp"

namespace loopq {

/* Series render as arrays of decimal strings indexed from degree 0, since
 * coefficients routinely exceed every native integer width. */
inline nlohmann::json series_json(const GradedSeries& s) {
  return nlohmann::json(coefficient_strings(s));
}

inline nlohmann::json trace_json(const LoopRuleTrace& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const TraceStep& s : t.steps)
    out.push_back(std::string("[") + rule_name(s.rule) + "] " + s.subject +
                  ": " + s.form);
  return out;
}

inline nlohmann::json ranks_json(const RankTable& ranks) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 1; k < ranks.size(); ++k)
    out.push_back({{"k", k + 1}, {"rank", ranks[k].str()}});
  return out;
}

inline nlohmann::json eval_json(const std::string& expression, int max_degree,
                                const GradedSeries& series) {
  return {{"command", "eval"},
          {"expression", expression},
          {"max_degree", max_degree},
          {"series", series_json(series)},
          {"text", to_text(series)}};
}

inline nlohmann::json loops_json(const std::string& expression, int max_degree,
                                 const LoopResult& r) {
  return {{"command", "loops"},
          {"expression", expression},
          {"max_degree", max_degree},
          {"series", series_json(r.series)},
          {"closed_form", detail::reciprocal_form(r.denominator)},
          {"trace", trace_json(r.trace)}};
}

inline nlohmann::json ranks_command_json(const std::string& expression,
                                         int max_degree, const RankTable& ranks) {
  return {{"command", "ranks"},
          {"expression", expression},
          {"max_degree", max_degree},
          {"ranks", ranks_json(ranks)}};
}

inline nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json hyps = nlohmann::json::array();
  for (const HypothesisResult& h : r.hypotheses)
    hyps.push_back({{"id", h.id},
                    {"description", h.description},
                    {"status", to_string(h.status)},
                    {"detail", h.detail}});
  auto path = [](const std::optional<LoopResult>& p) -> nlohmann::json {
    if (!p) return {{"series", nlohmann::json::array()},
                    {"trace", nlohmann::json::array()}};
    return {{"series", series_json(p->series)}, {"trace", trace_json(p->trace)}};
  };
  return {{"name", r.name},
          {"verdict", to_string(r.verdict)},
          {"reason", r.reason},
          {"hypotheses", hyps},
          {"x_prime", r.x_prime_text},
          {"x", r.x_text},
          {"path_a", path(r.path_a)},
          {"path_b", path(r.path_b)},
          {"ranks", ranks_json(r.ranks_a)},
          {"homology", r.homology ? series_json(*r.homology)
                                  : nlohmann::json::array()},
          {"warnings", r.warnings},
          {"max_degree", r.max_degree}};
}

inline nlohmann::json hyperbolicity_json(const HyperbolicityReport& r) {
  return {{"command", "hyperbolicity"},
          {"subject", r.subject},
          {"max_degree", r.max_degree},
          {"criterion", to_string(r.criterion)},
          {"criterion_detail", r.criterion_detail},
          {"growth", to_string(r.growth.kind)},
          {"growth_detail", r.growth.detail},
          {"verdict", r.overall},
          {"ranks", ranks_json(r.ranks)}};
}

}  // namespace loopq
