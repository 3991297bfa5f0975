#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopq/error.hpp"
#include "loopq/loop.hpp"
#include "loopq/ranks.hpp"
#include "loopq/scenario.hpp"
#include "loopq/semantics.hpp"

namespace loopq {

enum class HypothesisStatus { pass, fail, not_checkable };

inline const char* to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::pass: return "pass";
    case HypothesisStatus::fail: return "fail";
    case HypothesisStatus::not_checkable: return "not-checkable";
  }
  return "?";
}

struct HypothesisResult {
  std::string id;
  std::string description;
  HypothesisStatus status = HypothesisStatus::not_checkable;
  std::string detail;
};

enum class Verdict { verified, mismatch, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "VERIFIED";
    case Verdict::mismatch: return "MISMATCH";
    case Verdict::not_applicable: return "NOT_APPLICABLE";
  }
  return "?";
}

/*
 * Outcome of checking loop(M) = loop(X # L) on a scenario. Path A loops
 * the fibration pullback; path B loops the connected sum through its top
 * cell. The two routes share only primitive series arithmetic. The
 * homology table lists H_*(M; Q) through the top degree m, assembled as
 * red(X') + red(L) below m plus the top cell.
 */
struct VerificationReport {
  std::string name;
  Verdict verdict = Verdict::not_applicable;
  std::string reason;  // why NOT_APPLICABLE; empty otherwise
  std::vector<HypothesisResult> hypotheses;
  std::string x_prime_text;
  std::string x_text;
  std::optional<LoopResult> path_a;
  std::optional<LoopResult> path_b;
  RankTable ranks_a;
  RankTable ranks_b;
  std::optional<GradedSeries> homology;  // full series of M, degrees 0..m
  std::vector<std::string> warnings;
  int max_degree = 0;
};

/* X' = F |x skel(B), as written in the scenario (no rational rewriting). */
inline SpaceRef build_x_prime(const FibrationScenario& s) {
  return half_smash(s.fibre, skeleton(*s.summand));
}

/* X = X' with one m-cell attached, m = dim(L); the attaching map is not
 * part of the data. */
inline SpaceRef build_x(const FibrationScenario& s) {
  const SpaceAttrs at = attrs(*s.total);
  if (!at.pd_dim)
    throw semantic_error("L must be a Poincare duality form: " +
                         to_text(*s.total));
  return attach(build_x_prime(s), *at.pd_dim);
}

namespace detail {

inline std::optional<SpaceAttrs> try_attrs(const Space& e, std::string& err) {
  try {
    return attrs(e);
  } catch (const error& ex) {
    err = ex.what();
    return std::nullopt;
  }
}

inline std::string generator_count_text(const std::optional<Int>& c) {
  return c ? c->str() : std::string("unknown");
}

}  // namespace detail

inline std::vector<HypothesisResult> check_hypotheses(const FibrationScenario& s) {
  std::vector<HypothesisResult> out;

  /* (i) the fibre inclusion into M is rationally null homotopic. */
  out.push_back({"(i)",
                 "fibre inclusion F -> M is rationally null homotopic",
                 s.alpha_null ? HypothesisStatus::pass : HypothesisStatus::fail,
                 s.alpha_null ? "asserted by the scenario (alpha_null = true)"
                              : "the scenario sets alpha_null = false"});

  /* (ii) the skeleta of C and L have more than one cohomology generator. */
  auto generator_hypothesis = [&](const char* which, const SpaceRef& space) {
    HypothesisResult h;
    h.id = "(ii)";
    h.description = std::string("H*(skeleton of ") + which +
                    "; Q) is generated by more than one element";
    try {
      SpaceRef skel = skeleton(*space);
      const SpaceAttrs at = attrs(*skel);
      if (!at.generator_count) {
        h.status = HypothesisStatus::not_checkable;
        h.detail = "generator count of " + to_text(*skel) + " is unknown";
      } else if (*at.generator_count > 1) {
        h.status = HypothesisStatus::pass;
        h.detail = to_text(*skel) + " has " + at.generator_count->str() +
                   " generators";
      } else {
        h.status = HypothesisStatus::fail;
        h.detail = to_text(*skel) + " has " + at.generator_count->str() +
                   " generator(s); more than one is required";
      }
    } catch (const error& ex) {
      h.status = HypothesisStatus::not_checkable;
      h.detail = ex.what();
    }
    out.push_back(std::move(h));
  };
  generator_hypothesis("C", s.base);
  generator_hypothesis("L", s.total);

  /* Dimensions: C and B share one, L carries the cell that closes X. */
  {
    HypothesisResult h;
    h.id = "dimension";
    h.description =
        "L, C, B are Poincare duality forms, dim(B) = dim(C), and the top "
        "cell of X lands above X'";
    std::string err;
    std::optional<SpaceAttrs> al = detail::try_attrs(*s.total, err);
    std::optional<SpaceAttrs> ac, ab;
    if (al) ac = detail::try_attrs(*s.base, err);
    if (ac) ab = detail::try_attrs(*s.summand, err);
    if (!al || !ac || !ab) {
      h.status = HypothesisStatus::fail;
      h.detail = err;
    } else if (!al->pd_dim || !ac->pd_dim || !ab->pd_dim) {
      h.status = HypothesisStatus::fail;
      h.detail = std::string("missing Poincare duality dimension for ") +
                 (!al->pd_dim ? "L" : !ac->pd_dim ? "C" : "B");
    } else if (*ac->pd_dim != *ab->pd_dim) {
      h.status = HypothesisStatus::fail;
      h.detail = "dim(C) = " + std::to_string(*ac->pd_dim) +
                 " but dim(B) = " + std::to_string(*ab->pd_dim);
    } else {
      const int m = *al->pd_dim;
      /* dim X' = dim F + dim skel(B). */
      int dim_skel_b = 0;
      try {
        dim_skel_b = homological_dimension(*skeleton(*s.summand));
      } catch (const error&) {
        dim_skel_b = *ab->pd_dim - 1;
      }
      const int dim_xp = homological_dimension(*s.fibre) + dim_skel_b;
      if (dim_xp >= m) {
        h.status = HypothesisStatus::fail;
        h.detail = "X' already has homology in degree " +
                   std::to_string(dim_xp) + " >= dim(L) = " +
                   std::to_string(m);
      } else {
        h.status = HypothesisStatus::pass;
        h.detail = "dim(L) = " + std::to_string(m) + ", dim(C) = dim(B) = " +
                   std::to_string(*ac->pd_dim);
      }
    }
    out.push_back(std::move(h));
  }

  /* Simple connectivity of the three PD forms (F only needs to be
   * connected, which every expression is). */
  {
    HypothesisResult h;
    h.id = "simple-connectivity";
    h.description = "L, C and B are simply connected";
    std::string err;
    std::optional<SpaceAttrs> al = detail::try_attrs(*s.total, err);
    std::optional<SpaceAttrs> ac, ab;
    if (al) ac = detail::try_attrs(*s.base, err);
    if (ac) ab = detail::try_attrs(*s.summand, err);
    if (!al || !ac || !ab) {
      h.status = HypothesisStatus::fail;
      h.detail = err;
    } else if (!al->simply_connected || !ac->simply_connected ||
               !ab->simply_connected) {
      h.status = HypothesisStatus::fail;
      h.detail = std::string("cannot establish simple connectivity of ") +
                 (!al->simply_connected ? "L" : !ac->simply_connected ? "C" : "B");
    } else {
      h.status = HypothesisStatus::pass;
      h.detail = "connectivity bounds are all >= 1";
    }
    out.push_back(std::move(h));
  }

  /* Path A needs Omega L |x X' spherical, i.e. skel(B) a wedge of
   * spheres, directly or through the suspension bound. */
  {
    HypothesisResult h;
    h.id = "skeleton-sphericality";
    h.description =
        "skeleton of B is rationally a wedge of spheres (co-H form, or the "
        "suspension bound n <= 3k+1 applies)";
    try {
      const auto model = spherical_skeleton_model(*s.summand);
      if (!model) {
        h.status = HypothesisStatus::fail;
        h.detail = "skeleton " + to_text(*skeleton(*s.summand)) +
                   " is not a co-H form and the suspension bound fails";
      } else {
        h.status = HypothesisStatus::pass;
        h.detail = model->via_suspension_bound
                       ? "suspension bound applies; rational model " +
                             to_text(*model->space)
                       : "co-H form " + to_text(*model->space);
      }
    } catch (const error& ex) {
      h.status = HypothesisStatus::fail;
      h.detail = ex.what();
    }
    out.push_back(std::move(h));
  }

  /* Path B runs the top-cell rule through X, so X' must contribute more
   * than one cohomology generator. */
  {
    HypothesisResult h;
    h.id = "x-prime-generators";
    h.description = "H*(X'; Q) is generated by more than one element";
    try {
      const auto model = spherical_skeleton_model(*s.summand);
      SpaceRef xp = half_smash(s.fibre, model ? model->space
                                              : skeleton(*s.summand));
      const SpaceAttrs at = attrs(*xp);
      if (!at.generator_count) {
        h.status = HypothesisStatus::not_checkable;
        h.detail = "generator count of " + to_text(*xp) + " is unknown";
      } else if (*at.generator_count > 1) {
        h.status = HypothesisStatus::pass;
        h.detail = to_text(*xp) + " has " + at.generator_count->str() +
                   " generators";
      } else {
        h.status = HypothesisStatus::fail;
        h.detail = to_text(*xp) + " has " + at.generator_count->str() +
                   " generator(s)";
      }
    } catch (const error& ex) {
      h.status = HypothesisStatus::not_checkable;
      h.detail = ex.what();
    }
    out.push_back(std::move(h));
  }

  return out;
}

inline VerificationReport verify_main_theorem(const FibrationScenario& s,
                                              int max_degree) {
  VerificationReport r;
  r.name = s.name;
  r.max_degree = max_degree;
  r.hypotheses = check_hypotheses(s);

  /* Best-effort construction data for the report, independent of verdict. */
  std::optional<SkeletonModel> model;
  SpaceRef x_prime_eff, x_eff;
  std::optional<int> m;
  try {
    model = spherical_skeleton_model(*s.summand);
    if (model) {
      x_prime_eff = half_smash(s.fibre, model->space);
      r.x_prime_text = to_text(*x_prime_eff);
      const SpaceAttrs al = attrs(*s.total);
      if (al.pd_dim) {
        m = *al.pd_dim;
        x_eff = attach(x_prime_eff, *m);
        r.x_text = to_text(*x_eff);
      }
    }
  } catch (const error&) {
    /* reported through the hypothesis list */
  }

  for (const HypothesisResult& h : r.hypotheses) {
    if (h.status != HypothesisStatus::pass) {
      r.verdict = Verdict::not_applicable;
      r.reason = "hypothesis " + h.id + ": " + h.description + " [" +
                 to_string(h.status) + ": " + h.detail + "]";
      return r;
    }
  }

  const LoopOptions opts = options_from(s);
  try {
    if (!x_eff)
      throw rule_error("could not construct X = X' with its top cell");
    LoopResult path_a = pullback_loop_series(s, max_degree, opts);
    SpaceRef sum = connected_sum(x_eff, s.total);
    LoopResult path_b = loop_series(*sum, max_degree, opts);

    r.ranks_a = pbw_invert(path_a.series);
    r.ranks_b = pbw_invert(path_b.series);

    /* Homology table of M through its top degree. */
    GradedSeries table = add(GradedSeries::one(*m),
                             add(reduced_homology(*x_prime_eff, *m),
                                 reduced_homology(*s.total, *m)));
    r.homology = table;

    const bool series_equal = path_a.series == path_b.series;
    const bool ranks_equal = r.ranks_a == r.ranks_b;
    r.verdict = (series_equal && ranks_equal) ? Verdict::verified
                                              : Verdict::mismatch;
    if (!series_equal)
      r.reason = "path A and path B series disagree";
    else if (!ranks_equal)
      r.reason = "path A and path B rank tables disagree";

    for (const SpaceRef& pd : {x_eff, s.total, s.base, s.summand}) {
      if (pd->kind == SpaceKind::attach && !satisfies_poincare_duality(*pd))
        r.warnings.push_back(
            "attach form " + to_text(*pd) +
            " does not satisfy Poincare duality at homology level");
    }
    for (int k = 0; k <= *m; ++k) {
      if (table[k] != table[*m - k]) {
        r.warnings.push_back(
            "homology table of M is not self-dual; the scenario data do "
            "not describe genuine duality complexes");
        break;
      }
    }

    r.path_a = std::move(path_a);
    r.path_b = std::move(path_b);
  } catch (const error& ex) {
    r.verdict = Verdict::not_applicable;
    r.reason = std::string("rule engine: ") + ex.what();
  }
  return r;
}

inline std::string to_text(const VerificationReport& r) {
  std::string out;
  out += "scenario: " + r.name + "\n";
  out += "verdict: " + std::string(to_string(r.verdict));
  if (!r.reason.empty()) out += " (" + r.reason + ")";
  out += "\n";
  out += "hypotheses:\n";
  for (const HypothesisResult& h : r.hypotheses)
    out += "  [" + std::string(to_string(h.status)) + "] " + h.id + " " +
           h.description + " -- " + h.detail + "\n";
  if (!r.x_prime_text.empty()) out += "X' = " + r.x_prime_text + "\n";
  if (!r.x_text.empty()) out += "X  = " + r.x_text + "\n";
  auto path_text = [](const char* label, const LoopResult& p) {
    std::string t;
    t += std::string(label) + ": " + detail::reciprocal_form(p.denominator) +
         "\n";
    t += "  series: ";
    bool first = true;
    for (int k = 0; k <= p.series.max_degree(); ++k) {
      if (!first) t += ", ";
      t += p.series[k].str();
      first = false;
    }
    t += "\n  trace:\n";
    for (const TraceStep& s : p.trace.steps)
      t += "    [" + std::string(rule_name(s.rule)) + "] " + s.subject +
           ": " + s.form + "\n";
    return t;
  };
  if (r.path_a) out += path_text("path A (fibration pullback)", *r.path_a);
  if (r.path_b) out += path_text("path B (connected sum)", *r.path_b);
  if (!r.ranks_a.empty()) {
    out += "rational homotopy ranks (both paths agree):\n";
    bool any = false;
    for (std::size_t k = 1; k < r.ranks_a.size(); ++k)
      if (r.ranks_a[k] != 0) {
        out += "  pi_" + std::to_string(k + 1) + "⊗Q " +
               r.ranks_a[k].str() + "\n";
        any = true;
      }
    if (!any) out += "  (none)\n";
  }
  if (r.homology) {
    out += "homology of M (degrees 0.." +
           std::to_string(r.homology->max_degree()) + "): ";
    bool first = true;
    for (int k = 0; k <= r.homology->max_degree(); ++k) {
      if (!first) out += ", ";
      out += (*r.homology)[k].str();
      first = false;
    }
    out += "\n";
  }
  for (const std::string& w : r.warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace loopq
