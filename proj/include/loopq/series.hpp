#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "loopq/error.hpp"

namespace loopq {

using Int = boost::multiprecision::cpp_int;

/*
 * Truncated power series in one variable t with exact integer coefficients.
 *
 * A series carries its truncation bound: coefficients are indexed by degree
 * 0..max_degree(). Every binary operation requires both operands to share
 * the same bound; callers that need to mix bounds re-truncate explicitly
 * with truncated(). All arithmetic is exact — results are the true
 * coefficients of the corresponding operation on formal power series,
 * reduced mod t^{N+1}.
 *
 * Negative coefficients are permitted (signed residuals occur in PBW
 * bookkeeping); nonnegativity is asserted by callers only where a series
 * claims to count dimensions.
 */
class GradedSeries {
 public:
  explicit GradedSeries(int max_degree) {
    if (max_degree < 0)
      throw series_error("truncation bound must be >= 0, got " +
                         std::to_string(max_degree));
    coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, Int(0));
  }

  static GradedSeries zero(int max_degree) { return GradedSeries(max_degree); }

  static GradedSeries one(int max_degree) {
    GradedSeries s(max_degree);
    s.coeffs_[0] = 1;
    return s;
  }

  /* c * t^degree; a degree beyond the bound truncates to the zero series. */
  static GradedSeries monomial(int max_degree, int degree, Int c = Int(1)) {
    GradedSeries s(max_degree);
    if (degree < 0) throw series_error("monomial degree must be >= 0");
    if (degree <= max_degree) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
    return s;
  }

  int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Int& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  void set(int k, Int v) { coeffs_[static_cast<std::size_t>(k)] = std::move(v); }

  bool operator==(const GradedSeries&) const = default;

 private:
  std::vector<Int> coeffs_;
};

namespace detail {
inline void require_same_bound(const GradedSeries& a, const GradedSeries& b,
                               const char* op) {
  if (a.max_degree() != b.max_degree())
    throw series_error(std::string(op) + ": mismatched truncation bounds " +
                       std::to_string(a.max_degree()) + " vs " +
                       std::to_string(b.max_degree()));
}
}  // namespace detail

inline GradedSeries add(const GradedSeries& a, const GradedSeries& b) {
  detail::require_same_bound(a, b, "add");
  GradedSeries r(a.max_degree());
  for (int k = 0; k <= a.max_degree(); ++k) r.set(k, a[k] + b[k]);
  return r;
}

inline GradedSeries sub(const GradedSeries& a, const GradedSeries& b) {
  detail::require_same_bound(a, b, "sub");
  GradedSeries r(a.max_degree());
  for (int k = 0; k <= a.max_degree(); ++k) r.set(k, a[k] - b[k]);
  return r;
}

/* Cauchy product truncated at the common bound. */
inline GradedSeries mul(const GradedSeries& a, const GradedSeries& b) {
  detail::require_same_bound(a, b, "mul");
  const int n = a.max_degree();
  GradedSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      r.set(i + j, r[i + j] + a[i] * b[j]);
    }
  }
  return r;
}

/* Multiplicative inverse mod t^{N+1} by the triangular recursion
 * b_k = -sum_{j=1..k} a_j b_{k-j}. Requires constant coefficient 1 so that
 * all coefficients stay integral. */
inline GradedSeries invert(const GradedSeries& a) {
  if (a[0] != 1)
    throw series_error("invert requires constant coefficient 1, got " +
                       a[0].str());
  const int n = a.max_degree();
  GradedSeries b(n);
  b.set(0, Int(1));
  for (int k = 1; k <= n; ++k) {
    Int acc = 0;
    for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b.set(k, -acc);
  }
  return b;
}

/* a^e for e >= 0 (a^0 = 1). */
inline GradedSeries pow(const GradedSeries& a, int e) {
  if (e < 0) throw series_error("pow requires a nonnegative exponent");
  GradedSeries r = GradedSeries::one(a.max_degree());
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

/* Divide by t: coefficient at k becomes the input's coefficient at k+1;
 * the top degree is padded with 0 (the input carries no knowledge there). */
inline GradedSeries shift_down(const GradedSeries& a) {
  if (a[0] != 0)
    throw series_error("shift_down requires zero constant term, got " +
                       a[0].str());
  const int n = a.max_degree();
  GradedSeries r(n);
  for (int k = 0; k < n; ++k) r.set(k, a[k + 1]);
  return r;
}

/* Multiply by t (the top coefficient falls off the truncation bound). */
inline GradedSeries shift_up(const GradedSeries& a) {
  const int n = a.max_degree();
  GradedSeries r(n);
  for (int k = 1; k <= n; ++k) r.set(k, a[k - 1]);
  return r;
}

/* Restriction to a smaller bound. */
inline GradedSeries truncated(const GradedSeries& a, int max_degree) {
  if (max_degree > a.max_degree())
    throw series_error("truncated cannot extend a series (bound " +
                       std::to_string(a.max_degree()) + " -> " +
                       std::to_string(max_degree) + ")");
  GradedSeries r(max_degree);
  for (int k = 0; k <= max_degree; ++k) r.set(k, a[k]);
  return r;
}

inline bool is_zero(const GradedSeries& a) {
  for (int k = 0; k <= a.max_degree(); ++k)
    if (a[k] != 0) return false;
  return true;
}

inline bool nonnegative(const GradedSeries& a) {
  for (int k = 0; k <= a.max_degree(); ++k)
    if (a[k] < 0) return false;
  return true;
}

/* Largest degree with a nonzero coefficient, or -1 for the zero series. */
inline int top_degree(const GradedSeries& a) {
  for (int k = a.max_degree(); k >= 0; --k)
    if (a[k] != 0) return k;
  return -1;
}

/* "c0 + c1*t + c2*t^2 + ..." omitting zero terms; coefficients of
 * magnitude one print as bare powers of t. */
inline std::string to_text(const GradedSeries& a) {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= a.max_degree(); ++k) {
    if (a[k] == 0) continue;
    Int c = a[k];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (k == 0) {
      out << c.str();
    } else {
      if (c != 1) out << c.str() << "*";
      out << "t";
      if (k != 1) out << "^" << k;
    }
  }
  if (first) return "0";
  return out.str();
}

/* Coefficients as decimal strings, degree 0 first. */
inline std::vector<std::string> coefficient_strings(const GradedSeries& a) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(a.max_degree()) + 1);
  for (int k = 0; k <= a.max_degree(); ++k) out.push_back(a[k].str());
  return out;
}

inline GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) { return add(a, b); }
inline GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) { return sub(a, b); }
inline GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return mul(a, b); }

}  // namespace loopq
