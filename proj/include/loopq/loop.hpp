#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loopq/error.hpp"
#include "loopq/scenario.hpp"
#include "loopq/semantics.hpp"
#include "loopq/series.hpp"
#include "loopq/space.hpp"

namespace loopq {

/*
 * Evaluation rules for the Hilbert series of H_*(OmegaZ; Q), applied in a
 * fixed order (first match wins):
 *
 *   R1  odd sphere S^{2k+1}:    1/(1 - t^{2k})
 *   R2  even sphere S^{2k}:     (1 + t^{2k-1})/(1 - t^{4k-2})
 *   R3  product:                loop(a) * loop(b)
 *   R4  rationally spherical e with reduced series g:  1/(1 - g/t)
 *   R5  PD form with skeleton sk and inert top cell (more than one
 *       cohomology generator on sk, or asserted):
 *                               1/( 1/loop(sk) + t^{m-2} )
 *   R6  cofibration A -> B -> C with A -> B inert:
 *                               loop(B) = loop(C) * loop(Omega C |x A)
 *
 * Every rule produces the reciprocal of a polynomial; the engine carries
 * that denominator exactly, so all results are true series prefixes and
 * truncation commutes with evaluation.
 */
enum class LoopRule { r1, r2, r3, r4, r5, r6 };

inline const char* rule_name(LoopRule r) {
  switch (r) {
    case LoopRule::r1: return "R1";
    case LoopRule::r2: return "R2";
    case LoopRule::r3: return "R3";
    case LoopRule::r4: return "R4";
    case LoopRule::r5: return "R5";
    case LoopRule::r6: return "R6";
  }
  return "?";
}

struct TraceStep {
  LoopRule rule;
  std::string subject;  // the expression the rule was applied to
  std::string form;     // closed form of the resulting series
  GradedSeries series;  // the resulting loop series
};

struct LoopRuleTrace {
  std::vector<TraceStep> steps;
};

/* One line per step: "[R5] attach(S^3 v S^4, 7): 1/(1 - t^2 - t^3 + t^5)" */
inline std::string to_text(const LoopRuleTrace& trace) {
  std::string out;
  for (const TraceStep& s : trace.steps) {
    out += "[";
    out += rule_name(s.rule);
    out += "] " + s.subject + ": " + s.form + "\n";
  }
  return out;
}

struct LoopOptions {
  /* Canonical texts of PD expressions whose top-cell attaching map is
   * asserted rationally inert by scenario input. */
  std::set<std::string> asserted_inert;
};

inline LoopOptions options_from(const FibrationScenario& s) {
  LoopOptions o;
  for (const auto& [text, asserted] : s.inertness_overrides)
    if (asserted) o.asserted_inert.insert(text);
  return o;
}

struct LoopResult {
  GradedSeries series;       // H_*(OmegaZ; Q), degrees 0..N
  GradedSeries denominator;  // polynomial D with series == invert(D)
  LoopRuleTrace trace;
};

namespace detail {

inline std::string reciprocal_form(const GradedSeries& denom) {
  return "1/(" + to_text(denom) + ")";
}

inline void check_loop_series(const GradedSeries& s, const std::string& subject) {
  if (s[0] != 1)
    throw rule_error("internal: loop series of " + subject +
                     " lacks unit constant term");
  for (int k = 1; k <= s.max_degree(); ++k)
    if (s[k] < 0)
      throw rule_error(
          "loop series of " + subject + " has negative coefficient at degree " +
          std::to_string(k) +
          "; an asserted hypothesis (inertness) is inconsistent with the data");
}

inline LoopResult loop_rec(const Space& e, int n, const LoopOptions& opts);

/* R5: the top-cell route through a PD form's skeleton. */
inline LoopResult loop_via_top_cell_impl(const Space& e, const SpaceAttrs& at,
                                         int n, const LoopOptions& opts) {
  const int m = *at.pd_dim;
  if (m < 3)
    throw rule_error("the top-cell rule needs a cell of dimension >= 3: " +
                     to_text(e));
  SpaceRef skel = skeleton(e);
  const SpaceAttrs skel_at = attrs(*skel);

  bool asserted = false;
  if (skel_at.generator_count && *skel_at.generator_count > 1) {
    /* more than one cohomology generator on the skeleton certifies a
     * rationally inert attachment */
  } else if (opts.asserted_inert.count(to_text(e)) > 0) {
    asserted = true;
  } else {
    std::string count = skel_at.generator_count
                            ? skel_at.generator_count->str()
                            : std::string("unknown");
    throw rule_error(
        "rational inertness of the top-cell attaching map is not established "
        "for " + to_text(e) + " (skeleton generator count: " + count +
        ", needs > 1 or an explicit 'inert' assertion)");
  }

  if (!skel_at.simply_connected)
    throw rule_error("skeleton of " + to_text(e) +
                     " is not provably simply connected");

  LoopResult sub = loop_rec(*skel, n, opts);
  GradedSeries denom = add(sub.denominator, GradedSeries::monomial(n, m - 2));
  GradedSeries series = invert(denom);
  check_loop_series(series, to_text(e));
  LoopRuleTrace trace = std::move(sub.trace);
  trace.steps.push_back({LoopRule::r5,
                         to_text(e) + (asserted ? " [asserted inert]" : ""),
                         reciprocal_form(denom), series});
  return {std::move(series), std::move(denom), std::move(trace)};
}

inline LoopResult loop_rec(const Space& e, int n, const LoopOptions& opts) {
  const SpaceAttrs at = attrs(e);

  /* R1 / R2: spheres have closed forms. */
  if (e.kind == SpaceKind::sphere) {
    const int g = e.n - 1;  // degree of the algebra generator
    GradedSeries denom =
        sub(GradedSeries::one(n), GradedSeries::monomial(n, g));
    if (e.n % 2 == 1) {
      GradedSeries series = invert(denom);
      TraceStep step{LoopRule::r1, to_text(e), reciprocal_form(denom), series};
      return {std::move(series), std::move(denom), {{step}}};
    }
    /* Exterior-times-polynomial form; equals invert(denom) exactly. */
    GradedSeries series =
        mul(add(GradedSeries::one(n), GradedSeries::monomial(n, g)),
            invert(sub(GradedSeries::one(n),
                       GradedSeries::monomial(n, 2 * g))));
    std::string form = "(" + to_text(add(GradedSeries::one(n),
                                         GradedSeries::monomial(n, g))) +
                       ")/(" +
                       to_text(sub(GradedSeries::one(n),
                                   GradedSeries::monomial(n, 2 * g))) +
                       ")";
    TraceStep step{LoopRule::r2, to_text(e), form, series};
    return {std::move(series), std::move(denom), {{step}}};
  }

  /* R3: loops commute with products. */
  if (e.kind == SpaceKind::product) {
    LoopResult la = loop_rec(*e.a, n, opts);
    LoopResult lb = loop_rec(*e.b, n, opts);
    GradedSeries series = mul(la.series, lb.series);
    GradedSeries denom = mul(la.denominator, lb.denominator);
    LoopRuleTrace trace = std::move(la.trace);
    for (TraceStep& s : lb.trace.steps) trace.steps.push_back(std::move(s));
    trace.steps.push_back(
        {LoopRule::r3, to_text(e), reciprocal_form(denom), series});
    return {std::move(series), std::move(denom), std::move(trace)};
  }

  /* Rationally trivial input loops to the trivial algebra. */
  if (rationally_trivial(e)) {
    GradedSeries one = GradedSeries::one(n);
    TraceStep step{LoopRule::r4, to_text(e), "1", one};
    return {one, one, {{step}}};
  }

  /* R4: Bott-Samelson for a wedge of spheres: tensor algebra on the
   * desuspended reduced homology. The reduced series is computed one
   * degree past the bound so shift_down loses nothing. */
  if (at.rationally_spherical) {
    GradedSeries g = reduced_homology(e, n + 1);
    if (g[1] != 0)
      throw rule_error("the co-H rule needs reduced homology to vanish in "
                       "degrees <= 1: " + to_text(e));
    GradedSeries denom =
        sub(GradedSeries::one(n), truncated(shift_down(g), n));
    GradedSeries series = invert(denom);
    TraceStep step{LoopRule::r4, to_text(e), reciprocal_form(denom), series};
    return {std::move(series), std::move(denom), {{step}}};
  }

  /* R5: Poincare duality forms via their top cell. */
  if (at.pd_dim &&
      (e.kind == SpaceKind::attach || e.kind == SpaceKind::connected_sum))
    return loop_via_top_cell_impl(e, at, n, opts);

  throw rule_error("no applicable loop rule for: " + to_text(e));
}

}  // namespace detail

/* Full (unreduced) Hilbert series of H_*(OmegaZ; Q) up to degree
 * max_degree, with the rule trace that produced it. */
inline LoopResult loop_series(const Space& e, int max_degree,
                              const LoopOptions& opts = {}) {
  const SpaceAttrs at = attrs(e);
  if (!at.simply_connected)
    throw rule_error("loop series requires a provably simply connected "
                     "space: " + to_text(e));
  LoopResult r = detail::loop_rec(e, max_degree, opts);
  detail::check_loop_series(r.series, to_text(e));
  return r;
}

/* Force the R5 route for any supported PD form (including spheres and
 * products of two spheres, which loop_series would dispatch to R1-R3).
 * Used to cross-check path independence. */
inline LoopResult loop_series_via_top_cell(const Space& e, int max_degree,
                                           const LoopOptions& opts = {}) {
  const SpaceAttrs at = attrs(e);
  if (!at.simply_connected)
    throw rule_error("loop series requires a provably simply connected "
                     "space: " + to_text(e));
  if (!at.pd_dim)
    throw rule_error("the top-cell route needs a Poincare duality form: " +
                     to_text(e));
  return detail::loop_via_top_cell_impl(e, at, max_degree, opts);
}

/*
 * R6. For a homotopy cofibration A -> B -> C of simply connected spaces
 * with A -> B inert, looping splits the induced fibration:
 *
 *   loop(B) = loop(C) * loop(Omega C |x A),
 *
 * where the half-smash factor is spherical whenever A is, with reduced
 * series loop(C) * red(A). The caller vouches for the inertness of
 * A -> B; c_label names C in the trace.
 */
inline LoopResult cofibration_loop_series(const LoopResult& loop_c,
                                          const Space& a, int max_degree,
                                          const std::string& c_label) {
  const int n = max_degree;
  if (loop_c.series.max_degree() != n)
    throw series_error("cofibration_loop_series: bound mismatch");
  const SpaceAttrs at = attrs(a);
  if (!at.rationally_spherical && !rationally_trivial(a))
    throw rule_error("the splitting rule needs a rationally spherical "
                     "cofibre: " + to_text(a));
  GradedSeries red_a = reduced_homology(a, n + 1);
  if (!rationally_trivial(a) && red_a[1] != 0)
    throw rule_error("cofibre homology must vanish in degrees <= 1: " +
                     to_text(a));
  /* loop(B) = loop(C) / (1 - shift_down(loop(C) * red(A)))
             = 1 / (D_C - shift_down(red(A))), exactly. */
  GradedSeries denom =
      sub(loop_c.denominator, truncated(shift_down(red_a), n));
  GradedSeries series = invert(denom);
  const std::string subject =
      "Omega(" + c_label + ") |x " + to_text(a);
  detail::check_loop_series(series, subject);
  LoopRuleTrace trace = loop_c.trace;
  trace.steps.push_back({LoopRule::r6, subject,
                         detail::reciprocal_form(denom), series});
  return {std::move(series), std::move(denom), std::move(trace)};
}

/*
 * Path A for a fibration scenario: with X' = F |x skel(B),
 *
 *   loop(M) = loop(L) * loop(Omega L |x X').
 *
 * Requires the skeleton of B to be provably a wedge of spheres, directly
 * or through the suspension bound.
 */
inline LoopResult pullback_loop_series(const FibrationScenario& s,
                                       int max_degree,
                                       const LoopOptions& opts = {}) {
  std::optional<SkeletonModel> model;
  try {
    model = spherical_skeleton_model(*s.summand);
  } catch (const semantic_error& ex) {
    throw rule_error(std::string("cannot form the skeleton of B: ") +
                     ex.what());
  }
  if (!model)
    throw rule_error(
        "skeleton of B (" + to_text(*skeleton(*s.summand)) +
        ") is not provably a wedge of spheres: it is not a co-H form and "
        "the suspension bound does not apply");
  SpaceRef x_prime = half_smash(s.fibre, model->space);
  LoopResult loop_l = loop_series(*s.total, max_degree, opts);
  return cofibration_loop_series(loop_l, *x_prime, max_degree,
                                 to_text(*s.total));
}

}  // namespace loopq
