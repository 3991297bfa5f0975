#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "loopq/error.hpp"
#include "loopq/series.hpp"
#include "loopq/space.hpp"

namespace loopq {

/* Connectivity sentinel for spaces with no reduced rational homology at
 * all (the point and anything built only from it). Large enough that the
 * additive rules below never overflow. */
constexpr int k_contractible_connectivity = 1 << 28;

/*
 * Structural facts inferred for an expression. connectivity is a sound
 * lower bound (the greatest c for which the rules can prove the space
 * c-connected), never claimed exact. rationally_spherical means provably
 * rationally equivalent to a wedge of spheres (a simply connected co-H /
 * suspension form). pd_dim is present when the expression is one of the
 * recognized Poincare duality forms. generator_count is the number of
 * algebra generators of rational cohomology when computable, absent (not
 * zero) otherwise.
 */
struct SpaceAttrs {
  int connectivity = 0;
  bool simply_connected = false;
  bool rationally_spherical = false;
  std::optional<int> pd_dim;
  std::optional<Int> generator_count;
};

/* Top degree of the reduced rational homology; 0 iff it vanishes
 * entirely. Exact, independent of any truncation bound. */
inline int homological_dimension(const Space& e) {
  switch (e.kind) {
    case SpaceKind::sphere: return e.n;
    case SpaceKind::point: return 0;
    case SpaceKind::wedge:
      return std::max(homological_dimension(*e.a), homological_dimension(*e.b));
    case SpaceKind::product:
      return homological_dimension(*e.a) + homological_dimension(*e.b);
    case SpaceKind::smash: {
      const int da = homological_dimension(*e.a);
      const int db = homological_dimension(*e.b);
      return (da == 0 || db == 0) ? 0 : da + db;
    }
    case SpaceKind::suspension: {
      const int d = homological_dimension(*e.a);
      return d == 0 ? 0 : d + 1;
    }
    case SpaceKind::half_smash: {
      const int db = homological_dimension(*e.b);
      return db == 0 ? 0 : homological_dimension(*e.a) + db;
    }
    case SpaceKind::attach:
      return std::max(homological_dimension(*e.a), e.n);
    case SpaceKind::connected_sum:
      return std::max(homological_dimension(*e.a), homological_dimension(*e.b));
  }
  return 0;
}

inline bool rationally_trivial(const Space& e) {
  return homological_dimension(e) == 0;
}

inline SpaceAttrs attrs(const Space& e);

/* The complex minus its top cell, defined on the four supported Poincare
 * duality shapes. Anything else is reported, never guessed. */
inline SpaceRef skeleton(const Space& e) {
  switch (e.kind) {
    case SpaceKind::attach:
      return e.a;
    case SpaceKind::connected_sum:
      return wedge(skeleton(*e.a), skeleton(*e.b));
    case SpaceKind::product:
      if (e.a->kind == SpaceKind::sphere && e.b->kind == SpaceKind::sphere)
        return wedge(e.a, e.b);
      break;
    case SpaceKind::sphere:
      return point();
    default:
      break;
  }
  throw semantic_error("no skeleton rule for: " + to_text(e) +
                       " (supported: attach, connected sum, product of two "
                       "spheres, sphere)");
}

/* Reduced rational homology dimensions by degree, truncated at max_degree.
 * All rules are polynomial: every returned coefficient is the true one. */
inline GradedSeries reduced_homology(const Space& e, int max_degree) {
  const int n = max_degree;
  switch (e.kind) {
    case SpaceKind::sphere:
      return GradedSeries::monomial(n, e.n);
    case SpaceKind::point:
      return GradedSeries::zero(n);
    case SpaceKind::wedge:
      return add(reduced_homology(*e.a, n), reduced_homology(*e.b, n));
    case SpaceKind::product: {
      /* full(a x b) = full(a) full(b), so red = ra + rb + ra rb */
      GradedSeries ra = reduced_homology(*e.a, n);
      GradedSeries rb = reduced_homology(*e.b, n);
      return add(add(ra, rb), mul(ra, rb));
    }
    case SpaceKind::smash:
      return mul(reduced_homology(*e.a, n), reduced_homology(*e.b, n));
    case SpaceKind::suspension:
      return shift_up(reduced_homology(*e.a, n));
    case SpaceKind::half_smash: {
      /* red(a |x b) = full(a) red(b) */
      GradedSeries ra = reduced_homology(*e.a, n);
      GradedSeries rb = reduced_homology(*e.b, n);
      return add(rb, mul(ra, rb));
    }
    case SpaceKind::attach:
      return add(reduced_homology(*e.a, n), GradedSeries::monomial(n, e.n));
    case SpaceKind::connected_sum: {
      const SpaceAttrs at = attrs(e);  // validates the PD requirements
      GradedSeries skel = add(reduced_homology(*skeleton(*e.a), n),
                              reduced_homology(*skeleton(*e.b), n));
      return add(skel, GradedSeries::monomial(n, *at.pd_dim));
    }
  }
  return GradedSeries::zero(n);
}

namespace detail {

inline int cap_connectivity(long long c) {
  return static_cast<int>(
      std::min<long long>(c, k_contractible_connectivity));
}

inline Int total_reduced_dimension(const Space& e) {
  const int d = homological_dimension(e);
  GradedSeries r = reduced_homology(e, d);
  Int total = 0;
  for (int k = 0; k <= d; ++k) total += r[k];
  return total;
}

}  // namespace detail

inline SpaceAttrs attrs(const Space& e) {
  SpaceAttrs r;
  switch (e.kind) {
    case SpaceKind::sphere:
      r.connectivity = e.n - 1;
      r.rationally_spherical = e.n >= 2;
      r.pd_dim = e.n;
      r.generator_count = Int(1);
      break;
    case SpaceKind::point:
      r.connectivity = k_contractible_connectivity;
      r.generator_count = Int(0);
      break;
    case SpaceKind::wedge: {
      const SpaceAttrs a = attrs(*e.a);
      const SpaceAttrs b = attrs(*e.b);
      r.connectivity = std::min(a.connectivity, b.connectivity);
      /* rationally trivial summands are neutral (pt v X is X) */
      r.rationally_spherical =
          (a.rationally_spherical || rationally_trivial(*e.a)) &&
          (b.rationally_spherical || rationally_trivial(*e.b));
      if (a.generator_count && b.generator_count)
        r.generator_count = *a.generator_count + *b.generator_count;
      break;
    }
    case SpaceKind::product: {
      if (e.a->kind == SpaceKind::point) return attrs(*e.b);
      if (e.b->kind == SpaceKind::point) return attrs(*e.a);
      const SpaceAttrs a = attrs(*e.a);
      const SpaceAttrs b = attrs(*e.b);
      r.connectivity = std::min(a.connectivity, b.connectivity);
      if (a.pd_dim && b.pd_dim) r.pd_dim = *a.pd_dim + *b.pd_dim;
      if (a.generator_count && b.generator_count)
        r.generator_count = *a.generator_count + *b.generator_count;
      break;
    }
    case SpaceKind::smash: {
      const SpaceAttrs a = attrs(*e.a);
      const SpaceAttrs b = attrs(*e.b);
      r.connectivity = detail::cap_connectivity(
          static_cast<long long>(a.connectivity) + b.connectivity + 1);
      r.rationally_spherical = a.rationally_spherical || b.rationally_spherical;
      break;
    }
    case SpaceKind::suspension: {
      const SpaceAttrs a = attrs(*e.a);
      r.connectivity = detail::cap_connectivity(
          static_cast<long long>(a.connectivity) + 1);
      r.rationally_spherical = true;  // suspension of a connected expression
      break;
    }
    case SpaceKind::half_smash: {
      /* a |x b splits as (a ^ b) v b when b is co-H; through the quotient
       * description its fundamental group and low homology are those of b. */
      const SpaceAttrs b = attrs(*e.b);
      r.connectivity = b.connectivity;
      r.rationally_spherical = b.rationally_spherical;
      break;
    }
    case SpaceKind::attach: {
      const SpaceAttrs a = attrs(*e.a);
      r.connectivity = std::min(a.connectivity, e.n - 1);
      if (homological_dimension(*e.a) < e.n) r.pd_dim = e.n;
      break;
    }
    case SpaceKind::connected_sum: {
      const SpaceAttrs a = attrs(*e.a);
      const SpaceAttrs b = attrs(*e.b);
      if (!a.pd_dim || !b.pd_dim)
        throw semantic_error(
            "connected sum requires Poincare duality forms on both sides: " +
            to_text(e));
      if (*a.pd_dim != *b.pd_dim)
        throw semantic_error("connected sum of unequal dimensions (" +
                             std::to_string(*a.pd_dim) + " vs " +
                             std::to_string(*b.pd_dim) + "): " + to_text(e));
      r.connectivity = std::min(a.connectivity, b.connectivity);
      r.pd_dim = a.pd_dim;
      break;
    }
  }
  r.simply_connected = r.connectivity >= 1;
  /* A provably spherical expression is a wedge of one sphere per reduced
   * homology class, so its cohomology generators can be counted outright. */
  if (!r.generator_count && r.rationally_spherical)
    r.generator_count = detail::total_reduced_dimension(e);
  return r;
}

/* Suspension bound: a Poincare duality form of dimension n whose
 * connectivity bound is k has a skeleton of the homotopy type of a
 * suspension when n <= 3k + 1. */
inline bool check_ganea(const Space& pd_form) {
  const SpaceAttrs at = attrs(pd_form);
  if (!at.pd_dim)
    throw semantic_error("suspension bound requires a Poincare duality form: " +
                         to_text(pd_form));
  return static_cast<long long>(*at.pd_dim) <=
         3LL * at.connectivity + 1;
}

/* Whether the full homology series of a PD form is palindromic
 * (coeff(k) == coeff(pd_dim - k) for all k). */
inline bool satisfies_poincare_duality(const Space& pd_form) {
  const SpaceAttrs at = attrs(pd_form);
  if (!at.pd_dim)
    throw semantic_error("duality check requires a Poincare duality form: " +
                         to_text(pd_form));
  const int n = *at.pd_dim;
  GradedSeries full = add(GradedSeries::one(n), reduced_homology(pd_form, n));
  for (int k = 0; k <= n; ++k)
    if (full[k] != full[n - k]) return false;
  return true;
}

/* An explicit wedge of spheres with the given reduced homology. Used to
 * materialize the rational type of a space known to be spherical; two
 * spherical expressions with equal reduced series are interchangeable in
 * every downstream rule. */
inline SpaceRef wedge_of_spheres(const GradedSeries& reduced) {
  if (reduced[0] != 0)
    throw semantic_error("a reduced series must vanish in degree 0");
  SpaceRef acc;
  for (int k = 1; k <= reduced.max_degree(); ++k) {
    if (reduced[k] < 0)
      throw semantic_error("cannot build a wedge from a series with negative "
                           "coefficient at degree " + std::to_string(k));
    if (reduced[k] > 4096)
      throw semantic_error("refusing to build a wedge with more than 4096 "
                           "spheres in one degree");
    for (Int i = 0; i < reduced[k]; ++i) {
      SpaceRef s = sphere(k);
      acc = acc ? wedge(acc, s) : s;
    }
  }
  return acc ? acc : point();
}

/*
 * A wedge-of-spheres model for the skeleton of a PD form: the skeleton
 * itself when it is structurally spherical (or trivial), otherwise the
 * materialized wedge when the suspension bound applies. nullopt when
 * neither route certifies sphericality.
 */
struct SkeletonModel {
  SpaceRef space;
  bool via_suspension_bound = false;
};

inline std::optional<SkeletonModel> spherical_skeleton_model(const Space& pd_form) {
  SpaceRef skel = skeleton(pd_form);
  const SpaceAttrs at = attrs(*skel);
  if (at.rationally_spherical || rationally_trivial(*skel))
    return SkeletonModel{skel, false};
  if (at.simply_connected && check_ganea(pd_form)) {
    const int d = homological_dimension(*skel);
    return SkeletonModel{wedge_of_spheres(reduced_homology(*skel, d)), true};
  }
  return std::nullopt;
}

}  // namespace loopq
