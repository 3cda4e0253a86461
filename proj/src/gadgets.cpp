#include "abcg/gadgets.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace abcg {

LaurentPoly square_gadget_poly(std::int64_t z1, std::int64_t z2,
                               std::int64_t z3) {
  LaurentPoly one_minus_x = LaurentPoly(1) - LaurentPoly::variable();
  return LaurentPoly(1, z1) + LaurentPoly(1, z2) * one_minus_x +
         LaurentPoly(1, z3) + LaurentPoly::variable() - LaurentPoly(3);
}

LaurentPoly sum_gadget_poly(std::int64_t z1, std::int64_t z2, std::int64_t z3) {
  return LaurentPoly(1, z1) + LaurentPoly(1, z2) - LaurentPoly(1, z3) -
         LaurentPoly(1);
}

namespace {

bool all_zero(const std::vector<Int>& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool gadget_holds(GadgetKind kind, const std::array<std::int64_t, 3>& z) {
  if (kind == GadgetKind::Square)
    return all_zero(taylor_at_one(square_gadget_poly(z[0], z[1], z[2]), 3));
  return all_zero(taylor_at_one(sum_gadget_poly(z[0], z[1], z[2]), 2));
}

std::array<std::int64_t, 12> derive_product_witness(std::int64_t z1,
                                                    std::int64_t z2,
                                                    std::int64_t z3) {
  return {z1,
          z2,
          z3,
          z1 * z1,
          z2 * z2,
          z1 * z1 + z2 * z2,
          z1 + z2,
          (z1 + z2) * (z1 + z2),
          2 * z3,
          -z1,
          -z2,
          -z1 - z2};
}

bool product_rows_hold(const std::array<std::int64_t, 12>& t) {
  return gadget_holds(GadgetKind::Square, {t[0], t[3], t[9]}) &&
         gadget_holds(GadgetKind::Square, {t[1], t[4], t[10]}) &&
         gadget_holds(GadgetKind::Sum, {t[3], t[4], t[5]}) &&
         gadget_holds(GadgetKind::Sum, {t[0], t[1], t[6]}) &&
         gadget_holds(GadgetKind::Square, {t[6], t[7], t[11]}) &&
         gadget_holds(GadgetKind::Sum, {t[2], t[2], t[8]}) &&
         gadget_holds(GadgetKind::Sum, {t[5], t[8], t[7]});
}

bool evaluate_system(const DivisibilitySystem& sys,
                     const std::vector<std::int64_t>& z) {
  if (static_cast<int>(z.size()) != sys.n)
    throw std::invalid_argument("assignment arity does not match the system");
  static const LaurentPoly kSq2 = x_minus_one_pow(2);
  static const LaurentPoly kSq3 = x_minus_one_pow(3);
  for (const DivRow& row : sys.rows) {
    LaurentPoly f = -row.rhs;
    for (int i = 0; i < sys.n; ++i) {
      if (row.coeffs[i].is_zero()) continue;
      f += row.coeffs[i].shifted(z[i]);
    }
    if (row.p.is_zero()) {
      if (!f.is_zero()) return false;
    } else if (row.p == kSq2) {
      if (!all_zero(taylor_at_one(f, 2))) return false;
    } else if (row.p == kSq3) {
      if (!all_zero(taylor_at_one(f, 3))) return false;
    } else {
      if (!divide_exact(row.p, f)) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> EquationChain::extend(
    const std::vector<std::int64_t>& originals) const {
  if (static_cast<int>(originals.size()) != orig_vars)
    throw std::invalid_argument("wrong number of original variables");
  std::vector<std::int64_t> v(num_vars, 0);
  std::copy(originals.begin(), originals.end(), v.begin());
  for (const Eq& e : eqs) {
    switch (e.op) {
      case Eq::Op::Prod:
        v[e.k - 1] = v[e.i - 1] * v[e.j - 1];
        break;
      case Eq::Op::Sum:
        v[e.k - 1] = v[e.i - 1] + v[e.j - 1];
        break;
      case Eq::Op::Const:
        v[e.k - 1] = e.b;
        break;
    }
  }
  return v;
}

EquationChain flatten_polynomial(
    const std::vector<std::pair<Int, std::vector<int>>>& monomials,
    int orig_vars) {
  EquationChain chain;
  chain.orig_vars = orig_vars;
  chain.num_vars = orig_vars;
  auto fresh = [&chain] { return ++chain.num_vars; };

  std::vector<std::pair<Int, std::vector<int>>> monos = monomials;
  std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int e : a.second) da += e;
    for (int e : b.second) db += e;
    if (da != db) return da > db;
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
  });

  int neg_one_var = 0;  // allocated on first use
  auto ensure_neg_one = [&] {
    if (neg_one_var) return;
    neg_one_var = fresh();
    chain.eqs.push_back({EquationChain::Eq::Op::Const, neg_one_var, 0, 0, -1});
  };

  int acc = 0;
  for (const auto& [coeff, exps] : monos) {
    if (coeff == 0) continue;
    // monomial value: product of variable powers
    int mono_var = 0;
    for (int vi = 0; vi < orig_vars; ++vi) {
      for (int t = 0; t < exps[vi]; ++t) {
        if (!mono_var) {
          mono_var = vi + 1;
        } else {
          int k = fresh();
          chain.eqs.push_back(
              {EquationChain::Eq::Op::Prod, k, mono_var, vi + 1, 0});
          mono_var = k;
        }
      }
    }
    int term_var;
    if (!mono_var) {
      // constant monomial
      term_var = fresh();
      chain.eqs.push_back({EquationChain::Eq::Op::Const, term_var, 0, 0,
                           static_cast<std::int64_t>(coeff)});
    } else {
      Int c = coeff < 0 ? Int(-coeff) : coeff;
      // c * mono_var by binary doubling
      int val = mono_var;
      std::vector<int> bits;
      for (Int t = c; t > 0; t >>= 1) bits.push_back(static_cast<int>(t & 1));
      for (int bi = static_cast<int>(bits.size()) - 2; bi >= 0; --bi) {
        int k = fresh();
        chain.eqs.push_back({EquationChain::Eq::Op::Sum, k, val, val, 0});
        val = k;
        if (bits[bi]) {
          int k2 = fresh();
          chain.eqs.push_back({EquationChain::Eq::Op::Sum, k2, val, mono_var, 0});
          val = k2;
        }
      }
      if (coeff < 0) {
        ensure_neg_one();
        int k = fresh();
        chain.eqs.push_back({EquationChain::Eq::Op::Prod, k, val, neg_one_var, 0});
        val = k;
      }
      term_var = val;
    }
    if (!acc) {
      acc = term_var;
    } else {
      int k = fresh();
      chain.eqs.push_back({EquationChain::Eq::Op::Sum, k, acc, term_var, 0});
      acc = k;
    }
  }
  if (!acc) {
    acc = fresh();
    chain.eqs.push_back({EquationChain::Eq::Op::Const, acc, 0, 0, 0});
  }
  chain.out_var = acc;
  return chain;
}

namespace {

void add_sum_row(DivisibilitySystem& sys, int i, int j, int k) {
  DivRow row;
  row.p = x_minus_one_pow(2);
  row.coeffs.assign(sys.n, LaurentPoly());
  row.coeffs[i - 1] += LaurentPoly(1);
  row.coeffs[j - 1] += LaurentPoly(1);
  row.coeffs[k - 1] += LaurentPoly(-1);
  row.rhs = LaurentPoly(1);
  sys.rows.push_back(std::move(row));
}

void add_square_row(DivisibilitySystem& sys, int i, int j, int k) {
  DivRow row;
  row.p = x_minus_one_pow(3);
  row.coeffs.assign(sys.n, LaurentPoly());
  row.coeffs[i - 1] += LaurentPoly(1);
  row.coeffs[j - 1] += LaurentPoly(1) - LaurentPoly::variable();
  row.coeffs[k - 1] += LaurentPoly(1);
  row.rhs = LaurentPoly(3) - LaurentPoly::variable();
  sys.rows.push_back(std::move(row));
}

void add_const_row(DivisibilitySystem& sys, int k, std::int64_t b) {
  DivRow row;
  row.p = LaurentPoly();
  row.coeffs.assign(sys.n, LaurentPoly());
  row.coeffs[k - 1] += LaurentPoly(1);
  row.rhs = LaurentPoly(1, b);
  sys.rows.push_back(std::move(row));
}

}  // namespace

CompiledSystem compile_system(const EquationChain& chain, std::int64_t a) {
  CompiledSystem out;
  out.chain = chain;
  out.a = a;
  int total = chain.num_vars;
  for (const auto& e : chain.eqs)
    if (e.op == EquationChain::Eq::Op::Prod) total += 9;
  out.sys.n = total;

  int next_aux = chain.num_vars + 1;
  for (const auto& e : chain.eqs) {
    switch (e.op) {
      case EquationChain::Eq::Op::Prod: {
        // nine fresh globals in the gadget-local order z4..z12
        CompiledSystem::ProdAux pa;
        pa.i = e.i;
        pa.j = e.j;
        pa.k = e.k;
        for (int t = 0; t < 9; ++t) pa.aux[t] = next_aux++;
        const auto& x = pa.aux;  // x[0..8] = z4..z12
        add_square_row(out.sys, e.i, x[0], x[6]);
        add_square_row(out.sys, e.j, x[1], x[7]);
        add_sum_row(out.sys, x[0], x[1], x[2]);
        add_sum_row(out.sys, e.i, e.j, x[3]);
        add_square_row(out.sys, x[3], x[4], x[8]);
        add_sum_row(out.sys, e.k, e.k, x[5]);
        add_sum_row(out.sys, x[2], x[5], x[4]);
        out.prods.push_back(pa);
        break;
      }
      case EquationChain::Eq::Op::Sum:
        add_sum_row(out.sys, e.i, e.j, e.k);
        break;
      case EquationChain::Eq::Op::Const:
        add_const_row(out.sys, e.k, e.b);
        break;
    }
  }
  add_const_row(out.sys, chain.out_var, a);
  return out;
}

std::vector<std::int64_t> CompiledSystem::assignment_from_originals(
    const std::vector<std::int64_t>& originals) const {
  std::vector<std::int64_t> chain_vals = chain.extend(originals);
  std::vector<std::int64_t> full(sys.n, 0);
  std::copy(chain_vals.begin(), chain_vals.end(), full.begin());
  for (const auto& pa : prods) {
    auto w = derive_product_witness(full[pa.i - 1], full[pa.j - 1],
                                    full[pa.k - 1]);
    for (int t = 0; t < 9; ++t) full[pa.aux[t] - 1] = w[3 + t];
  }
  return full;
}

ModuleInstance to_module_instance(const DivisibilitySystem& sys) {
  const int k = static_cast<int>(sys.rows.size());
  ModuleInstance mi;
  mi.n = sys.n;
  std::vector<LaurentVec> rels;
  for (int j = 0; j < k; ++j) {
    if (sys.rows[j].p.is_zero()) continue;
    rels.push_back(unit_vec(k, j, sys.rows[j].p));
  }
  mi.pres = ModulePresentation(k, std::move(rels));
  mi.f.assign(sys.n + 1, LaurentVec(k));
  for (int j = 0; j < k; ++j) {
    mi.f[0][j] = sys.rows[j].rhs;
    for (int i = 0; i < sys.n; ++i) mi.f[i + 1][j] = sys.rows[j].coeffs[i];
  }
  return mi;
}

bool verify_module_equation(const ModuleInstance& mi,
                            const std::vector<std::int64_t>& z) {
  if (static_cast<int>(z.size()) != mi.n)
    throw std::invalid_argument("assignment arity mismatch");
  LaurentVec lhs(mi.pres.ambient_rank());
  for (int i = 0; i < mi.n; ++i) lhs += mi.f[i + 1].shifted(z[i]);
  return mi.pres.elem_equal(lhs, mi.f[0]);
}

namespace {

std::string xvar(int i) { return "x" + std::to_string(i); }

}  // namespace

QuadraticInstance to_quadratic_instance(const ModuleInstance& mi) {
  QuadraticInstance qi{AbcGroup(mi.pres), {}, {}};
  qi.h.push_back(qi.grp.element(-mi.f[0], 0));
  for (int i = 1; i <= mi.n; ++i) qi.h.push_back(qi.grp.element(mi.f[i], 0));
  for (int i = 0; i <= mi.n; ++i) {
    qi.word.append(Word::var(xvar(i)));
    qi.word.append(Word::constant(qi.h[i]));
    qi.word.append(Word::var(xvar(i)).inverse());
  }
  return qi;
}

bool verify_quadratic(const QuadraticInstance& qi,
                      const std::vector<std::int64_t>& z) {
  if (static_cast<int>(z.size()) != static_cast<int>(qi.h.size()) - 1)
    throw std::invalid_argument("assignment arity mismatch");
  std::map<std::string, GroupElement> asg;
  asg[xvar(0)] = qi.grp.identity();
  for (std::size_t i = 0; i < z.size(); ++i)
    asg[xvar(static_cast<int>(i) + 1)] =
        qi.grp.element(qi.grp.presentation().zero(), z[i]);
  return qi.grp.is_identity(evaluate_word(qi.grp, qi.word, asg));
}

KnapsackInstance to_knapsack_instance(const ModuleInstance& mi) {
  KnapsackInstance ki{AbcGroup(mi.pres), {}, {}};
  const GroupElement shift = ki.grp.element(mi.pres.zero(), 1);
  GroupElement prefix = ki.grp.identity();
  ki.g.push_back(shift);
  for (int i = 1; i <= mi.n; ++i) {
    prefix = ki.grp.mul(prefix, ki.grp.element(mi.f[i], 0));
    ki.g.push_back(ki.grp.conj(prefix, shift));
  }
  ki.target = ki.grp.mul(ki.grp.element(mi.f[0], 0), ki.grp.inv(prefix));
  return ki;
}

bool verify_knapsack_int(const KnapsackInstance& ki,
                         const std::vector<std::int64_t>& b) {
  if (b.size() != ki.g.size())
    throw std::invalid_argument("assignment arity mismatch");
  GroupElement acc = ki.grp.identity();
  for (std::size_t i = 0; i < b.size(); ++i)
    acc = ki.grp.mul(acc, ki.grp.pow(ki.g[i], b[i]));
  return ki.grp.equal(acc, ki.target);
}

bool verify_knapsack_doubled(const KnapsackInstance& ki,
                             const std::vector<std::int64_t>& z,
                             const std::vector<std::int64_t>& zp) {
  if (z.size() != ki.g.size() || zp.size() != ki.g.size())
    throw std::invalid_argument("assignment arity mismatch");
  GroupElement acc = ki.grp.identity();
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 0 || zp[i] < 0)
      throw std::invalid_argument("doubled form needs nonnegative exponents");
    acc = ki.grp.mul(acc, ki.grp.pow(ki.g[i], z[i]));
    acc = ki.grp.mul(acc, ki.grp.pow(ki.grp.inv(ki.g[i]), zp[i]));
  }
  return ki.grp.equal(acc, ki.target);
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
doubled_from_int(const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> z, zp;
  for (std::int64_t x : b) {
    z.push_back(x > 0 ? x : 0);
    zp.push_back(x < 0 ? -x : 0);
  }
  return {z, zp};
}

WreathInstance to_wreath_instance(const DivisibilitySystem& sys) {
  static const LaurentPoly kSq2 = x_minus_one_pow(2);
  static const LaurentPoly kSq3 = x_minus_one_pow(3);
  WreathInstance wi{AbcGroup::wreath_zz(), sys.n, sys, {}, {}};
  for (std::size_t j = 0; j < sys.rows.size(); ++j) {
    const DivRow& row = sys.rows[j];
    int depth;
    if (row.p.is_zero())
      depth = 0;
    else if (row.p == kSq2)
      depth = 2;
    else if (row.p == kSq3)
      depth = 3;
    else
      throw std::invalid_argument("row divisor must be 0, (X-1)^2 or (X-1)^3");
    Word w;
    auto constant = [&](const LaurentPoly& p) {
      return wi.wreath.element(LaurentVec(std::vector<LaurentPoly>{p}), 0);
    };
    w.append(Word::var(xvar(0)));
    w.append(Word::constant(constant(-row.rhs)));
    w.append(Word::var(xvar(0)).inverse());
    for (int i = 1; i <= sys.n; ++i) {
      w.append(Word::var(xvar(i)));
      w.append(Word::constant(constant(row.coeffs[i - 1])));
      w.append(Word::var(xvar(i)).inverse());
    }
    if (depth > 0) {
      std::vector<std::string> cv;
      for (int t = 1; t <= depth + 1; ++t)
        cv.push_back("x" + std::to_string(j + 1) + "_" + std::to_string(t));
      w.append(nested_commutator_word(cv));
    }
    wi.words.push_back(std::move(w));
    wi.comm_depth.push_back(depth);
  }
  return wi;
}

bool verify_wreath(const WreathInstance& wi, const std::vector<std::int64_t>& b) {
  if (static_cast<int>(b.size()) != wi.n + 1)
    throw std::invalid_argument("assignment needs b_0..b_n");
  const AbcGroup& wr = wi.wreath;
  std::map<std::string, GroupElement> asg;
  for (int i = 0; i <= wi.n; ++i)
    asg[xvar(i)] = wr.element(wr.presentation().zero(), b[i]);
  for (std::size_t j = 0; j < wi.words.size(); ++j) {
    const DivRow& row = wi.sys.rows[j];
    LaurentPoly f = (-row.rhs).shifted(b[0]);
    for (int i = 1; i <= wi.n; ++i) f += row.coeffs[i - 1].shifted(b[i]);
    const int depth = wi.comm_depth[j];
    if (depth > 0) {
      std::vector<GroupElement> letters;
      try {
        letters = commutator_witness(wr, f, depth);
      } catch (const std::invalid_argument&) {
        return false;  // the commutator tail cannot absorb the remainder
      }
      for (std::size_t t = 0; t < letters.size(); ++t)
        asg["x" + std::to_string(j + 1) + "_" + std::to_string(t + 1)] =
            letters[t];
    }
    if (!wr.is_identity(evaluate_word(wr, wi.words[j], asg))) return false;
  }
  return true;
}

}  // namespace abcg
