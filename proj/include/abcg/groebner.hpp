#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abcg/laurent.hpp"
#include "abcg/zlinalg.hpp"

namespace abcg {

// Monomial X^x Y^y with x, y >= 0.  Y plays the role of X^-1 via the
// relation XY = 1, which enters every computation as explicit relation rows.
struct Mono {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Mono&) const = default;
  auto operator<=>(const Mono&) const = default;  // structural; not the term order
  bool divides(const Mono& o) const { return x <= o.x && y <= o.y; }
  Mono operator*(const Mono& o) const { return {x + o.x, y + o.y}; }
  Mono operator/(const Mono& o) const { return {x - o.x, y - o.y}; }
  static Mono lcm(const Mono& a, const Mono& b) {
    return {a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y};
  }
};

// Bivariate polynomial over Z in canonical form (no zero coefficients).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(const Int& c) {
    if (c != 0) terms_.emplace(Mono{0, 0}, c);
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Int>& terms() const { return terms_; }
  void add_term(const Mono& m, const Int& c);
  BiPoly& operator+=(const BiPoly& o);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  bool operator==(const BiPoly&) const = default;

  std::string str() const;

 private:
  std::map<Mono, Int> terms_;
};

BiPoly encode_poly(const LaurentPoly& p);   // X^e -> X^e or Y^-e
LaurentPoly decode_poly(const BiPoly& p);   // X^a Y^b -> X^(a-b)

// Vector of bivariate polynomials of a fixed rank.
class PolyVecXY {
 public:
  PolyVecXY() = default;
  explicit PolyVecXY(int rank) : entries_(rank) {}
  explicit PolyVecXY(std::vector<BiPoly> entries) : entries_(std::move(entries)) {}

  int rank() const { return static_cast<int>(entries_.size()); }
  const BiPoly& operator[](int i) const { return entries_[i]; }
  BiPoly& operator[](int i) { return entries_[i]; }
  bool is_zero() const;
  bool operator==(const PolyVecXY&) const = default;
  std::string str() const;

 private:
  std::vector<BiPoly> entries_;
};

PolyVecXY encode_laurent(const LaurentVec& v);
LaurentVec decode_vec(const PolyVecXY& v);

// Module term orders.  Monomials are always compared by total degree first,
// then lexicographically with X > Y.  PotGraded ranks position before
// monomial; ElimGraded ranks monomial before position, which makes leading
// monomial 1 certify a constant vector.
struct TermOrder {
  enum class Kind { PotGraded, ElimGraded };
  Kind kind = Kind::PotGraded;
};

struct GBOptions {
  std::int64_t step_budget = 10'000'000;
};

// One strong Groebner computation over the free module Z[X,Y]^rank,
// with optional coefficient tracking for membership certificates and
// syzygy extraction.  Tracked generators occupy an auxiliary position
// block ordered strictly below the ambient block.
class GrobnerEngine {
 public:
  GrobnerEngine(int rank, TermOrder order, GBOptions opts = {});

  void add_tracked(const PolyVecXY& v);
  void add_untracked(const PolyVecXY& v);
  // Appends the saturation rows (XY-1)e_i for every ambient position.
  void add_laurent_rows();

  void build();

  // Basis elements with nonzero ambient part, in a deterministic order.
  const std::vector<PolyVecXY>& basis() const { return basis_; }
  // For each basis element, coefficients over the tracked inputs that
  // reproduce it modulo the untracked rows.
  const std::vector<std::vector<BiPoly>>& basis_origin() const { return origin_; }
  // Generators of the syzygy module of the tracked inputs (each vector c
  // satisfies sum c_i * tracked_i = 0 modulo the untracked rows).
  const std::vector<std::vector<BiPoly>>& syzygies() const { return syzygies_; }

  // Fully reduced normal form of the ambient part. 0 iff member.
  PolyVecXY normal_form(const PolyVecXY& v) const;
  bool is_member(const PolyVecXY& v) const;
  // Coefficients over the tracked inputs expressing v, when v is a member.
  std::optional<std::vector<BiPoly>> certificate(const PolyVecXY& v) const;

  int rank() const { return rank_; }
  int tracked_count() const { return tracked_count_; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  int rank_;
  int tracked_count_ = 0;
  bool built_ = false;
  std::vector<PolyVecXY> basis_;
  std::vector<std::vector<BiPoly>> origin_;
  std::vector<std::vector<BiPoly>> syzygies_;
};

// Spec-facing wrappers ------------------------------------------------------

struct StrongGB {
  TermOrder order;
  std::vector<PolyVecXY> elements;
  // origin[i] expresses elements[i] as an exact combination of the inputs.
  std::vector<std::vector<BiPoly>> origin;
  std::shared_ptr<const GrobnerEngine> engine;  // for normal_form
};

// gens must already include the Laurent rows (XY-1)e_i and any module
// relation rows; everything is tracked.
StrongGB strong_groebner(const std::vector<PolyVecXY>& gens, TermOrder order,
                         GBOptions opts = {});

PolyVecXY normal_form(const PolyVecXY& v, const StrongGB& gb);

// Generators of {(f_1..f_k) : sum f_i gens_i = 0 over Z[X^±]}.  The Laurent
// rows for the ambient rank are appended internally (untracked).
std::vector<PolyVecXY> syzygy_basis(const std::vector<PolyVecXY>& gens,
                                    GBOptions opts = {});

// Z-generators of {v in Z^rank : v in <gens>}; gens must include the Laurent
// rows.  Rows are returned as a canonical HNF lattice basis.
IntMatrix constant_intersection(const std::vector<PolyVecXY>& gens, int rank,
                                GBOptions opts = {});

}  // namespace abcg
