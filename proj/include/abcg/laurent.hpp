#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace abcg {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial over Z: a finite map exponent -> coefficient.
// Exponents may be negative.  Invariant: no stored coefficient is zero, so
// equality of values is equality of the underlying maps.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c) : LaurentPoly(Int(c), 0) {}  // NOLINT: implicit
  LaurentPoly(Int c, std::int64_t e);

  static LaurentPoly variable() { return LaurentPoly(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  // True iff the polynomial is c*X^e for a single term.
  bool is_monomial() const { return terms_.size() == 1; }
  std::int64_t min_exp() const;  // requires !is_zero()
  std::int64_t max_exp() const;  // requires !is_zero()
  Int coeff(std::int64_t e) const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::int64_t, Int>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  LaurentPoly operator-() const;
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Multiplication by X^k.
  LaurentPoly shifted(std::int64_t k) const;
  // Multiplication by the scalar c.
  LaurentPoly scaled(const Int& c) const;

  Int evaluate_at_one() const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  // Lexicographic on the canonical term list; only used to fix orderings.
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  // Canonical text form: terms in strictly decreasing exponent, e.g.
  // "3*X^-2 + X^1 - 5*X^0".  The zero polynomial prints as "0".
  std::string str() const;
  // Accepts the canonical grammar with free whitespace, bare integers,
  // "X" without an exponent, and omitted "*".  Throws ParseError.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(std::int64_t e, const Int& c);
  std::map<std::int64_t, Int> terms_;
};

// Exact division of Laurent polynomials: returns h with f = p*h, or nullopt
// when p does not divide f.  Monomials are units, so both operands are
// normalized to lowest exponent 0 before ordinary integer polynomial
// division.  Convention for p = 0: divides iff f = 0, with quotient 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p,
                                        const LaurentPoly& f);

// The Laurent polynomial s with s*(X^d - 1) = X^{m d} - 1, i.e.
// sum_{i=0}^{m-1} X^{i d} for m >= 0 and -sum_{i=1}^{-m} X^{-i d} for m < 0.
LaurentPoly geometric_sum(std::int64_t d, std::int64_t m);

// (f(1), f'(1), ..., f^{(k-1)}(1)) for k in {1,2,3}; all zero iff
// (X-1)^k divides f.
std::vector<Int> taylor_at_one(const LaurentPoly& f, int k);

LaurentPoly x_minus_one_pow(int k);

// A fixed-rank vector of Laurent polynomials.
class LaurentVec {
 public:
  LaurentVec() = default;
  explicit LaurentVec(int rank) : entries_(rank) {}
  explicit LaurentVec(std::vector<LaurentPoly> entries)
      : entries_(std::move(entries)) {}

  int rank() const { return static_cast<int>(entries_.size()); }
  const LaurentPoly& operator[](int i) const { return entries_[i]; }
  LaurentPoly& operator[](int i) { return entries_[i]; }
  const std::vector<LaurentPoly>& entries() const { return entries_; }

  bool is_zero() const;
  LaurentVec& operator+=(const LaurentVec& o);
  LaurentVec& operator-=(const LaurentVec& o);
  friend LaurentVec operator+(LaurentVec a, const LaurentVec& b) {
    a += b;
    return a;
  }
  friend LaurentVec operator-(LaurentVec a, const LaurentVec& b) {
    a -= b;
    return a;
  }
  LaurentVec operator-() const;
  // Scalar action of Z[X^±].
  friend LaurentVec operator*(const LaurentPoly& s, const LaurentVec& v);
  LaurentVec shifted(std::int64_t k) const;
  LaurentVec scaled(const Int& c) const;

  bool operator==(const LaurentVec& o) const { return entries_ == o.entries_; }
  bool operator<(const LaurentVec& o) const { return entries_ < o.entries_; }

  // "(p1, p2, ..., pD)" with canonical polynomial entries.
  std::string str() const;

 private:
  std::vector<LaurentPoly> entries_;
};

LaurentVec unit_vec(int rank, int pos, const LaurentPoly& p);

}  // namespace abcg
