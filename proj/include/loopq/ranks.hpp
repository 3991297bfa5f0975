#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "loopq/error.hpp"
#include "loopq/loop.hpp"
#include "loopq/series.hpp"

namespace loopq {

/*
 * ranks[k] for k = 1..N is the dimension of the degree-k part of the
 * rational homotopy Lie algebra of Z, i.e. the rank of pi_{k+1}(Z) (x) Q.
 * Index 0 is unused and zero.
 */
using RankTable = std::vector<Int>;

namespace detail {

/* C(n, j) for big n, exact at every step. */
inline Int binomial(const Int& n, int j) {
  Int c = 1;
  for (int i = 1; i <= j; ++i) {
    c *= n - (i - 1);
    c /= i;
  }
  return c;
}

/* The PBW factor a single degree contributes to the enveloping-algebra
 * series: (1 + t^k)^l for odd k, (1 - t^k)^{-l} for even k. Exponents may
 * be huge, so the expansions go through binomials. */
inline GradedSeries pbw_factor(int k, const Int& l, int n) {
  GradedSeries r(n);
  if (k % 2 == 1) {
    for (int j = 0; static_cast<long long>(j) * k <= n; ++j)
      r.set(j * k, j <= l ? binomial(l, j) : Int(0));
  } else {
    for (int j = 0; static_cast<long long>(j) * k <= n; ++j)
      r.set(j * k, j == 0 ? Int(1) : binomial(l + j - 1, j));
  }
  return r;
}

/* Inverse of pbw_factor: (1 + t^k)^{-l} odd, (1 - t^k)^{l} even. */
inline GradedSeries pbw_factor_inverse(int k, const Int& l, int n) {
  GradedSeries r(n);
  if (k % 2 == 1) {
    for (int j = 0; static_cast<long long>(j) * k <= n; ++j) {
      Int c = j == 0 ? Int(1) : binomial(l + j - 1, j);
      r.set(j * k, j % 2 == 0 ? c : -c);
    }
  } else {
    for (int j = 0; static_cast<long long>(j) * k <= n; ++j) {
      Int c = j <= l ? binomial(l, j) : Int(0);
      r.set(j * k, j % 2 == 0 ? c : -c);
    }
  }
  return r;
}

}  // namespace detail

/*
 * Recover homotopy Lie algebra dimensions from the series of a universal
 * enveloping algebra by peeling PBW factors degree by degree: l_k is the
 * coefficient of t^k in the residual, which is then divided by
 * (1 + t^k)^{l_k} (k odd) or multiplied by (1 - t^k)^{l_k} (k even).
 * A negative l_k means the input is not such a series; fatal.
 */
inline RankTable pbw_invert(const GradedSeries& ser) {
  const int n = ser.max_degree();
  if (ser[0] != 1)
    throw rule_error("rank inversion requires constant coefficient 1");
  for (int k = 0; k <= n; ++k)
    if (ser[k] < 0)
      throw rule_error("rank inversion requires nonnegative coefficients; "
                       "coefficient at degree " + std::to_string(k) +
                       " is " + ser[k].str());
  RankTable ranks(static_cast<std::size_t>(n) + 1, Int(0));
  GradedSeries residual = ser;
  for (int k = 1; k <= n; ++k) {
    const Int l = residual[k];
    if (l < 0)
      throw rule_error(
          "not the series of a universal enveloping algebra: residual has "
          "negative coefficient " + l.str() + " at degree " + std::to_string(k));
    ranks[static_cast<std::size_t>(k)] = l;
    if (l == 0) continue;
    residual = mul(residual, detail::pbw_factor_inverse(k, l, n));
  }
  return ranks;
}

/* The enveloping-algebra series of a rank table:
 * prod_{k odd} (1 + t^k)^{l_k} * prod_{k even} (1 - t^k)^{-l_k}. */
inline GradedSeries pbw_forward(const RankTable& ranks, int max_degree) {
  GradedSeries r = GradedSeries::one(max_degree);
  const int top = std::min<int>(static_cast<int>(ranks.size()) - 1, max_degree);
  for (int k = 1; k <= top; ++k) {
    if (ranks[static_cast<std::size_t>(k)] == 0) continue;
    r = mul(r, detail::pbw_factor(k, ranks[static_cast<std::size_t>(k)],
                                  max_degree));
  }
  return r;
}

/* --------------------------------------------------------------------- */

/*
 * Empirical growth diagnostic over a rank table truncated at N:
 *  - elliptic-consistent when no rank is nonzero beyond some degree
 *    <= N/2;
 *  - hyperbolic-consistent when every doubling window strictly grows:
 *    sum_{k=n+1..2n} l_k > sum_{k<=n} l_k for all n in [n0, N/2], n0 the
 *    first nonzero rank degree;
 *  - inconclusive otherwise. Finite data can never prove hyperbolicity;
 *    these labels are advisory.
 */
struct GrowthDiagnostic {
  enum class Kind { elliptic_consistent, hyperbolic_consistent, inconclusive };
  Kind kind = Kind::inconclusive;
  std::string detail;
};

inline const char* to_string(GrowthDiagnostic::Kind k) {
  switch (k) {
    case GrowthDiagnostic::Kind::elliptic_consistent: return "elliptic-consistent";
    case GrowthDiagnostic::Kind::hyperbolic_consistent: return "hyperbolic-consistent";
    case GrowthDiagnostic::Kind::inconclusive: return "inconclusive";
  }
  return "?";
}

inline GrowthDiagnostic growth_diagnostic(const RankTable& ranks) {
  const int n = static_cast<int>(ranks.size()) - 1;
  int first = 0, last = 0;
  for (int k = 1; k <= n; ++k)
    if (ranks[static_cast<std::size_t>(k)] > 0) {
      if (first == 0) first = k;
      last = k;
    }
  GrowthDiagnostic d;
  if (last <= n / 2) {
    d.kind = GrowthDiagnostic::Kind::elliptic_consistent;
    d.detail = last == 0 ? "no nonzero ranks at all"
                         : "no nonzero ranks beyond degree " +
                               std::to_string(last) + " (window bound " +
                               std::to_string(n / 2) + ")";
    return d;
  }
  if (first > 0 && first <= n / 2) {
    bool grows = true;
    std::string why;
    for (int w = first; w <= n / 2; ++w) {
      Int low = 0, high = 0;
      for (int k = 1; k <= w; ++k) low += ranks[static_cast<std::size_t>(k)];
      for (int k = w + 1; k <= 2 * w; ++k)
        high += ranks[static_cast<std::size_t>(k)];
      if (high <= low) {
        grows = false;
        why = "window at n = " + std::to_string(w) + " does not grow (" +
              high.str() + " <= " + low.str() + ")";
        break;
      }
    }
    if (grows) {
      d.kind = GrowthDiagnostic::Kind::hyperbolic_consistent;
      d.detail = "every doubling window from degree " + std::to_string(first) +
                 " through " + std::to_string(n / 2) + " strictly grows";
      return d;
    }
    d.detail = why;
  } else if (first == 0) {
    d.detail = "no nonzero ranks";
  } else {
    d.detail = "first nonzero rank (degree " + std::to_string(first) +
               ") lies beyond the window bound " + std::to_string(n / 2);
  }
  d.kind = GrowthDiagnostic::Kind::inconclusive;
  return d;
}

/*
 * Hyperbolicity report. For scenarios the sufficient criterion is
 * evaluated: loops on X' retract off loops on M, so M is rationally
 * hyperbolic when the skeleton of B contributes more than one cohomology
 * generator of degree >= 2, or exactly one such generator while F is not
 * rationally contractible. The growth diagnostic is attached in both
 * cases; only the criterion ever yields a definitive verdict.
 */
struct HyperbolicityReport {
  std::string subject;
  enum class Criterion { satisfied, not_satisfied, not_checkable, not_applicable };
  Criterion criterion = Criterion::not_applicable;
  std::string criterion_detail;
  GrowthDiagnostic growth;
  std::string overall;
  RankTable ranks;
  int max_degree = 0;
};

inline const char* to_string(HyperbolicityReport::Criterion c) {
  switch (c) {
    case HyperbolicityReport::Criterion::satisfied: return "satisfied";
    /* an unfired sufficient criterion decides nothing */
    case HyperbolicityReport::Criterion::not_satisfied: return "inconclusive";
    case HyperbolicityReport::Criterion::not_checkable: return "not-checkable";
    case HyperbolicityReport::Criterion::not_applicable: return "not-applicable";
  }
  return "?";
}

namespace detail {

inline void finish_hyperbolicity(HyperbolicityReport& r) {
  r.growth = growth_diagnostic(r.ranks);
  if (r.criterion == HyperbolicityReport::Criterion::satisfied)
    r.overall = "rationally hyperbolic (sufficient criterion)";
  else
    r.overall = to_string(r.growth.kind);
}

}  // namespace detail

inline HyperbolicityReport hyperbolicity_report(const Space& e, int max_degree,
                                                const LoopOptions& opts = {}) {
  HyperbolicityReport r;
  r.subject = to_text(e);
  r.max_degree = max_degree;
  r.criterion = HyperbolicityReport::Criterion::not_applicable;
  r.criterion_detail =
      "the sufficient criterion needs fibration scenario data (B and F)";
  r.ranks = pbw_invert(loop_series(e, max_degree, opts).series);
  detail::finish_hyperbolicity(r);
  return r;
}

inline HyperbolicityReport hyperbolicity_report(const FibrationScenario& s,
                                                int max_degree) {
  HyperbolicityReport r;
  r.subject = "scenario " + s.name;
  r.max_degree = max_degree;
  try {
    const auto model = spherical_skeleton_model(*s.summand);
    if (!model) {
      r.criterion = HyperbolicityReport::Criterion::not_checkable;
      r.criterion_detail =
          "skeleton of B is not provably a wedge of spheres";
    } else {
      const int d = homological_dimension(*model->space);
      GradedSeries red = reduced_homology(*model->space, d);
      Int gens = 0;
      for (int k = 2; k <= d; ++k) gens += red[k];
      const bool f_contractible = rationally_trivial(*s.fibre);
      if (gens > 1) {
        r.criterion = HyperbolicityReport::Criterion::satisfied;
        r.criterion_detail = "skeleton of B carries " + gens.str() +
                             " cohomology generators of degree >= 2";
      } else if (gens == 1 && !f_contractible) {
        r.criterion = HyperbolicityReport::Criterion::satisfied;
        r.criterion_detail =
            "skeleton of B carries one generator of degree >= 2 and F is "
            "not rationally contractible";
      } else {
        r.criterion = HyperbolicityReport::Criterion::not_satisfied;
        r.criterion_detail =
            "skeleton of B carries " + gens.str() +
            " generators of degree >= 2" +
            (f_contractible ? " and F is rationally contractible" : "");
      }
    }
  } catch (const error& ex) {
    r.criterion = HyperbolicityReport::Criterion::not_checkable;
    r.criterion_detail = ex.what();
  }
  r.ranks = pbw_invert(pullback_loop_series(s, max_degree, options_from(s)).series);
  detail::finish_hyperbolicity(r);
  return r;
}

/* "pi_k (x) Q" rank rows for k = 2..N+1 (Lie degree + 1). */
inline std::string rank_table_text(const RankTable& ranks) {
  std::string out;
  const int n = static_cast<int>(ranks.size()) - 1;
  for (int k = 1; k <= n; ++k)
    out += "pi_" + std::to_string(k + 1) + "⊗Q " +
           ranks[static_cast<std::size_t>(k)].str() + "\n";
  return out;
}

inline std::string to_text(const HyperbolicityReport& r) {
  std::string out;
  out += "subject: " + r.subject + "\n";
  out += "paper criterion: " + std::string(to_string(r.criterion)) + " (" +
         r.criterion_detail + ")\n";
  out += "growth diagnostic: " + std::string(to_string(r.growth.kind)) +
         " (" + r.growth.detail + ")\n";
  out += "verdict: " + r.overall + "\n";
  out += "nonzero ranks:\n";
  bool any = false;
  for (std::size_t k = 1; k < r.ranks.size(); ++k)
    if (r.ranks[k] != 0) {
      out += "  pi_" + std::to_string(k + 1) + "⊗Q " + r.ranks[k].str() +
             "\n";
      any = true;
    }
  if (!any) out += "  (none)\n";
  return out;
}

}  // namespace loopq
