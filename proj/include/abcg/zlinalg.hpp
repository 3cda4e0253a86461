#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abcg/laurent.hpp"  // for Int

namespace abcg {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  std::vector<Int> row(int r) const;
  bool row_is_zero(int r) const;

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& o) const = default;
  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> data_;
};

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, u * input = h
};

// Row-style HNF: pivots positive, entries above each pivot reduced into
// [0, pivot).  Zero rows sink to the bottom.
HnfResult hermite_normal_form(const IntMatrix& m);

// det(U) up to sign is enough for the tests; returns +1 or -1.
Int unimodular_det_sign(const IntMatrix& u);

// Basis (as rows, HNF-canonical, no zero rows) of {s : M s^T = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Canonical basis of the lattice spanned by the rows: HNF with zero rows
// dropped.
IntMatrix lattice_basis(const IntMatrix& rows);

// Membership of v in the row span of an HNF basis (as from lattice_basis).
bool lattice_contains(const IntMatrix& hnf_basis, const std::vector<Int>& v);

// Minimal-|m| solution of m*dg = n*dh + zh, if any.
std::optional<std::pair<Int, Int>> solve_affine(const Int& dg, const Int& dh,
                                                const Int& zh);

// Whether some integer combination of the basis rows has last coordinate
// exactly 1; decided by the gcd of the last coordinates.
bool lattice_hits_last_one(const IntMatrix& basis);

// A concrete lattice vector with last coordinate 1, when one exists.
std::optional<std::vector<Int>> lattice_vector_with_last_one(
    const IntMatrix& basis);

// gcd(a, b) >= 0 together with x, y such that a*x + b*y = g.
struct ExtGcd {
  Int g, x, y;
};
ExtGcd ext_gcd(Int a, Int b);

// Floor division (rounds toward -infinity), so a - floor_div(a,b)*b lies in
// [0, b) for b > 0.
Int floor_div(const Int& a, const Int& b);

// Coefficients n with sum n_i z_i = gcd(z) > 0, canonicalized by reducing
// modulo the kernel lattice of z.  Requires z not all zero.
std::vector<Int> bezout_coefficients(const std::vector<Int>& z);

}  // namespace abcg
