#pragma once

#include <memory>
#include <string>
#include <utility>

#include "loopq/error.hpp"

namespace loopq {

enum class SpaceKind {
  sphere,
  point,
  wedge,
  product,
  smash,
  suspension,
  half_smash,
  attach,
  connected_sum,
};

class Space;
using SpaceRef = std::shared_ptr<const Space>;

/*
 * Expression tree for spaces built from spheres and the point by wedge,
 * product, smash, half-smash, suspension, cell attachment and connected
 * sum. Nodes are immutable and shared. half_smash(a, b) is a |x b, the
 * quotient of a x b by a x basepoint. attach(e, m) is e with one m-cell
 * attached; the homotopy class of the attaching map is deliberately not
 * represented.
 */
class Space {
 public:
  Space(SpaceKind kind, int n, SpaceRef a, SpaceRef b)
      : kind(kind), n(n), a(std::move(a)), b(std::move(b)) {}

  const SpaceKind kind;
  const int n;        // sphere dimension, or dimension of the attached cell
  const SpaceRef a;   // left / only child
  const SpaceRef b;   // right child
};

inline SpaceRef sphere(int n) {
  if (n < 1)
    throw semantic_error("sphere dimension must be >= 1, got S^" +
                         std::to_string(n));
  return std::make_shared<Space>(SpaceKind::sphere, n, nullptr, nullptr);
}

inline SpaceRef point() {
  return std::make_shared<Space>(SpaceKind::point, 0, nullptr, nullptr);
}

inline SpaceRef wedge(SpaceRef a, SpaceRef b) {
  return std::make_shared<Space>(SpaceKind::wedge, 0, std::move(a), std::move(b));
}

inline SpaceRef product(SpaceRef a, SpaceRef b) {
  return std::make_shared<Space>(SpaceKind::product, 0, std::move(a), std::move(b));
}

inline SpaceRef smash(SpaceRef a, SpaceRef b) {
  return std::make_shared<Space>(SpaceKind::smash, 0, std::move(a), std::move(b));
}

inline SpaceRef suspension(SpaceRef e) {
  return std::make_shared<Space>(SpaceKind::suspension, 0, std::move(e), nullptr);
}

inline SpaceRef half_smash(SpaceRef a, SpaceRef b) {
  return std::make_shared<Space>(SpaceKind::half_smash, 0, std::move(a), std::move(b));
}

inline SpaceRef attach(SpaceRef e, int cell_dim) {
  if (cell_dim < 2)
    throw semantic_error("attached cell dimension must be >= 2, got " +
                         std::to_string(cell_dim));
  return std::make_shared<Space>(SpaceKind::attach, cell_dim, std::move(e), nullptr);
}

inline SpaceRef connected_sum(SpaceRef a, SpaceRef b) {
  return std::make_shared<Space>(SpaceKind::connected_sum, 0, std::move(a), std::move(b));
}

inline bool equal(const Space& x, const Space& y) {
  if (x.kind != y.kind || x.n != y.n) return false;
  if ((x.a == nullptr) != (y.a == nullptr)) return false;
  if ((x.b == nullptr) != (y.b == nullptr)) return false;
  if (x.a && !equal(*x.a, *y.a)) return false;
  if (x.b && !equal(*x.b, *y.b)) return false;
  return true;
}

namespace detail {

/* Binding strength of the infix constructors, loosest first:
 * wedge (v) < connected sum (#) < product (x) < atoms. */
inline int precedence(SpaceKind k) {
  switch (k) {
    case SpaceKind::wedge: return 1;
    case SpaceKind::connected_sum: return 2;
    case SpaceKind::product: return 3;
    default: return 4;
  }
}

inline void render(const Space& e, int parent_prec, bool right_operand,
                   std::string& out);

inline void render_infix(const Space& e, const char* op, int parent_prec,
                         bool right_operand, std::string& out) {
  const int prec = precedence(e.kind);
  /* Infix operators are left-associative: a right operand of equal
   * precedence needs parentheses to round-trip. */
  const bool parens = prec < parent_prec || (prec == parent_prec && right_operand);
  if (parens) out += "(";
  render(*e.a, prec, false, out);
  out += op;
  render(*e.b, prec, true, out);
  if (parens) out += ")";
}

inline void render(const Space& e, int parent_prec, bool right_operand,
                   std::string& out) {
  switch (e.kind) {
    case SpaceKind::sphere:
      out += "S^" + std::to_string(e.n);
      return;
    case SpaceKind::point:
      out += "pt";
      return;
    case SpaceKind::wedge:
      render_infix(e, " v ", parent_prec, right_operand, out);
      return;
    case SpaceKind::connected_sum:
      render_infix(e, " # ", parent_prec, right_operand, out);
      return;
    case SpaceKind::product:
      render_infix(e, " x ", parent_prec, right_operand, out);
      return;
    case SpaceKind::suspension:
      out += "susp(";
      render(*e.a, 0, false, out);
      out += ")";
      return;
    case SpaceKind::smash:
    case SpaceKind::half_smash:
      out += (e.kind == SpaceKind::smash ? "smash(" : "hsmash(");
      render(*e.a, 0, false, out);
      out += ", ";
      render(*e.b, 0, false, out);
      out += ")";
      return;
    case SpaceKind::attach:
      out += "attach(";
      render(*e.a, 0, false, out);
      out += ", " + std::to_string(e.n) + ")";
      return;
  }
}

}  // namespace detail

/* Canonical text with minimal parentheses; parsing it back yields a
 * structurally equal tree. */
inline std::string to_text(const Space& e) {
  std::string out;
  detail::render(e, 0, false, out);
  return out;
}

inline std::string to_text(const SpaceRef& e) { return to_text(*e); }

}  // namespace loopq
