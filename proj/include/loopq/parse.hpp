#pragma once

#include <string>
#include <string_view>

#include "loopq/error.hpp"
#include "loopq/semantics.hpp"
#include "loopq/space.hpp"

namespace loopq {

/*
 * Recursive-descent parser for the space description grammar:
 *
 *   expr := csum ( "v" csum )*
 *   csum := prod ( "#" prod )*
 *   prod := atom ( "x" atom )*
 *   atom := "S^" INT | "pt" | "susp(" expr ")" | "smash(" expr "," expr ")"
 *         | "hsmash(" expr "," expr ")" | "attach(" expr "," INT ")"
 *         | "skel(" expr ")" | "(" expr ")"
 *
 * All infix operators are left-associative; whitespace is insignificant
 * everywhere. skel(...) is rewritten eagerly to the skeleton of its
 * argument, so parsed trees never contain a skel node.
 */
namespace detail {

class SpaceParser {
 public:
  explicit SpaceParser(std::string_view text) : text_(text) {}

  SpaceRef parse() {
    SpaceRef e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what + " at position " + std::to_string(pos_ + 1),
                      pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  bool try_consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!try_consume(token)) fail("expected '" + std::string(token) + "'");
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(value);
  }

  SpaceRef parse_expr() {
    SpaceRef e = parse_csum();
    while (try_consume("v")) e = wedge(e, parse_csum());
    return e;
  }

  SpaceRef parse_csum() {
    SpaceRef e = parse_prod();
    while (try_consume("#")) e = connected_sum(e, parse_prod());
    return e;
  }

  SpaceRef parse_prod() {
    SpaceRef e = parse_atom();
    while (try_consume("x")) e = product(e, parse_atom());
    return e;
  }

  SpaceRef parse_atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (try_consume("S^")) {
      const int n = parse_int();
      if (n < 1) {
        pos_ = start;
        fail("sphere dimension must be >= 1");
      }
      return sphere(n);
    }
    if (try_consume("pt")) return point();
    if (try_consume("susp")) {
      expect("(");
      SpaceRef inner = parse_expr();
      expect(")");
      return suspension(inner);
    }
    if (try_consume("smash")) {
      expect("(");
      SpaceRef left = parse_expr();
      expect(",");
      SpaceRef right = parse_expr();
      expect(")");
      return smash(left, right);
    }
    if (try_consume("hsmash")) {
      expect("(");
      SpaceRef left = parse_expr();
      expect(",");
      SpaceRef right = parse_expr();
      expect(")");
      return half_smash(left, right);
    }
    if (try_consume("attach")) {
      expect("(");
      SpaceRef inner = parse_expr();
      expect(",");
      const int m = parse_int();
      if (m < 2) {
        pos_ = start;
        fail("attached cell dimension must be >= 2");
      }
      expect(")");
      return attach(inner, m);
    }
    if (try_consume("skel")) {
      expect("(");
      SpaceRef inner = parse_expr();
      expect(")");
      try {
        return skeleton(*inner);
      } catch (const semantic_error& ex) {
        throw semantic_error(std::string(ex.what()) + " (in skel(...) ending at position " +
                             std::to_string(pos_) + ")");
      }
    }
    if (try_consume("(")) {
      SpaceRef e = parse_expr();
      expect(")");
      return e;
    }
    fail("expected a space expression");
  }
};

}  // namespace detail

inline SpaceRef parse_space(std::string_view text) {
  return detail::SpaceParser(text).parse();
}

}  // namespace loopq
