#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace abcg::oracle {

namespace {

struct Window {
  std::int64_t lo = 0, hi = 0;  // inclusive exponent range per coordinate
  int rank = 1;
  int cols() const { return rank * static_cast<int>(hi - lo + 1); }
  int col(int coord, std::int64_t e) const {
    return coord * static_cast<int>(hi - lo + 1) + static_cast<int>(e - lo);
  }
};

void grow_range(const LaurentVec& v, std::int64_t& lo, std::int64_t& hi) {
  for (int i = 0; i < v.rank(); ++i) {
    if (v[i].is_zero()) continue;
    lo = std::min(lo, v[i].min_exp());
    hi = std::max(hi, v[i].max_exp());
  }
}

std::vector<Int> flatten(const LaurentVec& v, const Window& w) {
  std::vector<Int> row(w.cols(), 0);
  for (int i = 0; i < v.rank(); ++i)
    for (const auto& [e, c] : v[i].terms()) row[w.col(i, e)] = c;
  return row;
}

// Rows of all shifts X^j gens_i for |j| <= d, over a window covering them.
struct ShiftSetup {
  Window win;
  std::vector<std::vector<Int>> rows;
};

ShiftSetup shifted_rows(const std::vector<LaurentVec>& gens, int rank,
                        std::int64_t d, const LaurentVec* extra) {
  std::int64_t lo = 0, hi = 0;
  for (const auto& g : gens) grow_range(g, lo, hi);
  if (extra) grow_range(*extra, lo, hi);
  ShiftSetup s;
  s.win = Window{lo - d, hi + d, rank};
  for (const auto& g : gens)
    for (std::int64_t j = -d; j <= d; ++j)
      s.rows.push_back(flatten(g.shifted(j), s.win));
  return s;
}

}  // namespace

bool member(const std::vector<LaurentVec>& gens, const LaurentVec& target,
            int window_slack) {
  if (target.is_zero()) return true;
  if (gens.empty()) return false;
  const int rank = target.rank();
  for (int d = window_slack; d <= window_slack + 4; d += 2) {
    ShiftSetup s = shifted_rows(gens, rank, d, &target);
    IntMatrix m = IntMatrix::from_rows(s.rows);
    if (lattice_contains(lattice_basis(m), flatten(target, s.win))) return true;
  }
  return false;
}

MemberOracle::MemberOracle(std::vector<LaurentVec> gens, int window_slack,
                           int target_span)
    : gens_(std::move(gens)), slack_(window_slack) {
  if (gens_.empty()) return;
  const int rank = gens_[0].rank();
  std::int64_t lo = -target_span, hi = target_span;
  for (const auto& g : gens_) grow_range(g, lo, hi);
  for (int d = window_slack; d <= window_slack + 4; d += 2) {
    PreparedWindow pw;
    pw.lo = lo - d;
    pw.hi = hi + d;
    pw.rank = rank;
    Window win{pw.lo, pw.hi, rank};
    std::vector<std::vector<Int>> rows;
    for (const auto& g : gens_)
      for (std::int64_t j = -d; j <= d; ++j)
        rows.push_back(flatten(g.shifted(j), win));
    pw.basis = lattice_basis(IntMatrix::from_rows(rows));
    windows_.push_back(std::move(pw));
  }
}

bool MemberOracle::contains(const LaurentVec& target) const {
  if (target.is_zero()) return true;
  if (gens_.empty()) return false;
  bool every_window_applied = true;
  for (const auto& pw : windows_) {
    bool inside = target.rank() == pw.rank;
    for (int i = 0; i < target.rank() && inside; ++i)
      if (!target[i].is_zero())
        inside = target[i].min_exp() >= pw.lo && target[i].max_exp() <= pw.hi;
    if (!inside) {
      every_window_applied = false;
      continue;
    }
    if (lattice_contains(pw.basis, flatten(target, Window{pw.lo, pw.hi, pw.rank})))
      return true;
  }
  if (every_window_applied) return false;
  // one-off path for targets outside the prepared windows
  return member(gens_, target, slack_);
}

IntMatrix constant_lattice(const std::vector<LaurentVec>& gens, int rank,
                           int window_slack) {
  IntMatrix prev;
  for (int d = window_slack; d <= window_slack + 8; d += 2) {
    ShiftSetup s = shifted_rows(gens, rank, d, nullptr);
    if (s.rows.empty()) return IntMatrix(0, rank);
    const int m = static_cast<int>(s.rows.size());
    // split columns into the exponent-zero block and the rest
    std::vector<int> const_cols(rank);
    for (int i = 0; i < rank; ++i) const_cols[i] = s.win.col(i, 0);
    std::vector<bool> is_const(s.win.cols(), false);
    for (int c : const_cols) is_const[c] = true;
    IntMatrix noncst(m, s.win.cols() - rank);
    IntMatrix cst(m, rank);
    for (int r = 0; r < m; ++r) {
      int nc = 0;
      for (int c = 0; c < s.win.cols(); ++c) {
        if (is_const[c]) continue;
        noncst(r, nc++) = s.rows[r][c];
      }
      for (int i = 0; i < rank; ++i) cst(r, i) = s.rows[r][const_cols[i]];
    }
    IntMatrix ker = integer_kernel(noncst.transposed());
    IntMatrix lat = lattice_basis(ker * cst);
    if (d > window_slack && lat == prev) return lat;
    prev = lat;
  }
  return prev;
}

std::vector<std::vector<LaurentPoly>> window_syzygies(
    const std::vector<LaurentVec>& gens, int window) {
  if (gens.empty()) return {};
  const int rank = gens[0].rank();
  ShiftSetup s = shifted_rows(gens, rank, window, nullptr);
  IntMatrix m = IntMatrix::from_rows(s.rows);
  IntMatrix ker = integer_kernel(m.transposed());
  const int per_gen = 2 * window + 1;
  std::vector<std::vector<LaurentPoly>> out;
  for (int r = 0; r < ker.rows(); ++r) {
    std::vector<LaurentPoly> syz(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      for (int j = 0; j < per_gen; ++j) {
        const Int& c = ker(r, static_cast<int>(gi) * per_gen + j);
        if (c != 0) syz[gi] += LaurentPoly(c, -window + j);
      }
    out.push_back(std::move(syz));
  }
  return out;
}

namespace {

std::string state_key(const AbcGroup& grp, const GroupElement& g) {
  return grp.presentation().reduce(g.a).str() + "|" + std::to_string(g.z);
}

}  // namespace

bool Ball::contains(const AbcGroup& grp, const GroupElement& g) const {
  return keys.count(state_key(grp, g)) > 0;
}

Ball bfs_ball(const AbcGroup& grp, const std::vector<GroupElement>& gens,
              int max_len, std::int64_t z_cap) {
  std::vector<GroupElement> steps;
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(grp.inv(g));
  }
  Ball ball;
  std::vector<GroupElement> frontier{grp.identity()};
  ball.keys.insert(state_key(grp, frontier[0]));
  ball.elements.push_back(frontier[0]);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : steps) {
        GroupElement t = grp.mul(g, s);
        if (t.z > z_cap || t.z < -z_cap) continue;
        std::string key = state_key(grp, t);
        if (!ball.keys.insert(key).second) continue;
        ball.elements.push_back(t);
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return ball;
}

bool bfs_coset_nonempty(const AbcGroup& grp,
                        const std::vector<GroupElement>& gens_g,
                        const std::vector<GroupElement>& gens_h,
                        const GroupElement& h, int max_len,
                        std::int64_t z_cap) {
  Ball ball_g = bfs_ball(grp, gens_g, max_len, z_cap);
  Ball ball_h = bfs_ball(grp, gens_h, max_len, z_cap);
  const GroupElement hinv = grp.inv(h);
  for (const auto& w : ball_g.elements)
    if (ball_h.contains(grp, grp.mul(hinv, w))) return true;
  return false;
}

LaurentPoly random_poly(Rng& rng, int max_terms, std::int64_t exp_lo,
                        std::int64_t exp_hi, std::int64_t coeff_lo,
                        std::int64_t coeff_hi) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng.range(0, max_terms));
  for (int t = 0; t < terms; ++t)
    p += LaurentPoly(rng.range(coeff_lo, coeff_hi), rng.range(exp_lo, exp_hi));
  return p;
}

LaurentVec random_vec(Rng& rng, int rank, int max_terms, std::int64_t exp_lo,
                      std::int64_t exp_hi, std::int64_t coeff_lo,
                      std::int64_t coeff_hi) {
  LaurentVec v(rank);
  for (int i = 0; i < rank; ++i)
    v[i] = random_poly(rng, max_terms, exp_lo, exp_hi, coeff_lo, coeff_hi);
  return v;
}

}  // namespace abcg::oracle
