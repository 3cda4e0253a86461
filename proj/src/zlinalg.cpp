#include "abcg/zlinalg.hpp"

#include <cassert>
#include <sstream>

namespace abcg {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    assert(static_cast<int>(rows[i].size()) == m.cols());
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(int r) const {
  std::vector<Int> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
  return out;
}

bool IntMatrix::row_is_zero(int r) const {
  for (int j = 0; j < cols_; ++j)
    if ((*this)(r, j) != 0) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols() == b.rows());
  IntMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j);
    }
    out << "]";
    if (i + 1 < rows_) out << "\n";
  }
  return out.str();
}

ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division is fine for the invariants
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

namespace {

// Row operation helpers acting simultaneously on H and U.
void combine_rows(IntMatrix& h, IntMatrix& u, int dst, int src, int col) {
  // Replace rows (dst, src) by a unimodular combination that puts
  // gcd(h(dst,col), h(src,col)) at (dst, col) and 0 at (src, col).
  const Int a = h(dst, col), b = h(src, col);
  if (b == 0) return;
  if (a == 0) {
    for (int j = 0; j < h.cols(); ++j) std::swap(h(dst, j), h(src, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u(dst, j), u(src, j));
    return;
  }
  auto [g, p, q] = ext_gcd(a, b);
  const Int ag = a / g, bg = b / g;
  for (int j = 0; j < h.cols(); ++j) {
    Int hd = h(dst, j), hs = h(src, j);
    h(dst, j) = p * hd + q * hs;
    h(src, j) = ag * hs - bg * hd;
  }
  for (int j = 0; j < u.cols(); ++j) {
    Int ud = u(dst, j), us = u(src, j);
    u(dst, j) = p * ud + q * us;
    u(src, j) = ag * us - bg * ud;
  }
}

void add_multiple(IntMatrix& h, IntMatrix& u, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < h.cols(); ++j) h(dst, j) += q * h(src, j);
  for (int j = 0; j < u.cols(); ++j) u(dst, j) += q * u(src, j);
}

void negate_row(IntMatrix& h, IntMatrix& u, int r) {
  for (int j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
  for (int j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  int pivot_row = 0;
  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (int r = pivot_row + 1; r < h.rows(); ++r)
      combine_rows(h, u, pivot_row, r, col);
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) negate_row(h, u, pivot_row);
    for (int r = 0; r < pivot_row; ++r) {
      Int q = floor_div(h(r, col), h(pivot_row, col));
      add_multiple(h, u, r, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {h, u};
}

Int unimodular_det_sign(const IntMatrix& u) {
  // Fraction-free Gaussian elimination; for unimodular u the result is +-1.
  IntMatrix a = u;
  int n = a.rows();
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      int sw = -1;
      for (int r = k + 1; r < n; ++r)
        if (a(r, k) != 0) {
          sw = r;
          break;
        }
      if (sw < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(sw, j));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int j = k + 1; j < n; ++j)
        a(r, j) = (a(r, j) * a(k, k) - a(r, k) * a(k, j)) / prev;
      a(r, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? sign : sign * a(n - 1, n - 1);
}

IntMatrix lattice_basis(const IntMatrix& rows) {
  HnfResult hn = hermite_normal_form(rows);
  std::vector<std::vector<Int>> keep;
  for (int r = 0; r < hn.h.rows(); ++r)
    if (!hn.h.row_is_zero(r)) keep.push_back(hn.h.row(r));
  IntMatrix out = IntMatrix::from_rows(keep);
  if (out.rows() == 0) return IntMatrix(0, rows.cols());
  return out;
}

bool lattice_contains(const IntMatrix& hnf_basis, const std::vector<Int>& v) {
  std::vector<Int> w = v;
  for (int r = 0; r < hnf_basis.rows(); ++r) {
    int pc = 0;
    while (pc < hnf_basis.cols() && hnf_basis(r, pc) == 0) ++pc;
    if (pc == hnf_basis.cols()) continue;
    if (w[pc] % hnf_basis(r, pc) != 0) return false;
    Int q = w[pc] / hnf_basis(r, pc);
    for (int j = pc; j < hnf_basis.cols(); ++j) w[j] -= q * hnf_basis(r, j);
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // {s : M s^T = 0} = left kernel of M^T; read it off the U rows matching
  // zero rows of HNF(M^T).
  IntMatrix t = m.transposed();
  HnfResult hn = hermite_normal_form(t);
  std::vector<std::vector<Int>> gens;
  for (int r = 0; r < hn.h.rows(); ++r)
    if (hn.h.row_is_zero(r)) gens.push_back(hn.u.row(r));
  if (gens.empty()) return IntMatrix(0, m.cols());
  return lattice_basis(IntMatrix::from_rows(gens));
}

std::optional<std::pair<Int, Int>> solve_affine(const Int& dg, const Int& dh,
                                                const Int& zh) {
  auto [g, x, y] = ext_gcd(dg, dh);
  if (zh % g != 0) return std::nullopt;
  // m*dg - n*dh = zh; particular solution from the Bezout pair.
  Int m0 = x * (zh / g);
  Int step = dh / g;  // m is free modulo |step|
  if (step < 0) step = -step;
  if (step != 0) {
    Int mr = m0 - floor_div(m0, step) * step;  // in [0, step)
    Int alt = mr - step;
    m0 = (mr < -alt || (mr == -alt && mr > 0)) ? mr : alt;
  }
  Int n0 = (m0 * dg - zh) / dh;
  return std::make_pair(m0, n0);
}

bool lattice_hits_last_one(const IntMatrix& basis) {
  if (basis.rows() == 0 || basis.cols() == 0) return false;
  Int g = 0;
  for (int r = 0; r < basis.rows(); ++r)
    g = ext_gcd(g, basis(r, basis.cols() - 1)).g;
  return g == 1;
}

std::optional<std::vector<Int>> lattice_vector_with_last_one(
    const IntMatrix& basis) {
  if (basis.rows() == 0 || basis.cols() == 0) return std::nullopt;
  const int last = basis.cols() - 1;
  Int g = 0;
  std::vector<Int> coeff(basis.rows(), 0);
  for (int r = 0; r < basis.rows(); ++r) {
    auto [g2, x, y] = ext_gcd(g, basis(r, last));
    for (int i = 0; i < r; ++i) coeff[i] *= x;
    coeff[r] = y;
    g = g2;
  }
  if (g != 1) return std::nullopt;
  std::vector<Int> v(basis.cols(), 0);
  for (int r = 0; r < basis.rows(); ++r)
    for (int j = 0; j < basis.cols(); ++j) v[j] += coeff[r] * basis(r, j);
  assert(v[last] == 1);
  return v;
}

std::vector<Int> bezout_coefficients(const std::vector<Int>& z) {
  const int k = static_cast<int>(z.size());
  std::vector<Int> n(k, 0);
  Int g = 0;
  for (int i = 0; i < k; ++i) {
    auto [g2, x, y] = ext_gcd(g, z[i]);
    for (int j = 0; j < i; ++j) n[j] *= x;
    n[i] = y;
    g = g2;
  }
  assert(g > 0);
  // Canonicalize modulo the kernel lattice of z.
  IntMatrix zrow(1, k);
  for (int i = 0; i < k; ++i) zrow(0, i) = z[i];
  IntMatrix ker = integer_kernel(zrow);
  for (int r = 0; r < ker.rows(); ++r) {
    int pc = 0;
    while (pc < k && ker(r, pc) == 0) ++pc;
    if (pc == k) continue;
    Int q = floor_div(n[pc], ker(r, pc));
    for (int j = 0; j < k; ++j) n[j] -= q * ker(r, j);
  }
  return n;
}

}  // namespace abcg
