#include "abcg/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "abcg/errors.hpp"

namespace abcg {

void BiPoly::add_term(const Mono& m, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    out << c;
    if (it->first.x) out << "*X^" << it->first.x;
    if (it->first.y) out << "*Y^" << it->first.y;
    first = false;
  }
  return out.str();
}

BiPoly encode_poly(const LaurentPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms())
    r.add_term(e >= 0 ? Mono{e, 0} : Mono{0, -e}, c);
  return r;
}

LaurentPoly decode_poly(const BiPoly& p) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) r += LaurentPoly(c, m.x - m.y);
  return r;
}

bool PolyVecXY::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::string PolyVecXY::str() const {
  std::string out = "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) out += ", ";
    out += entries_[i].str();
  }
  return out + ")";
}

PolyVecXY encode_laurent(const LaurentVec& v) {
  PolyVecXY r(v.rank());
  for (int i = 0; i < v.rank(); ++i) r[i] = encode_poly(v[i]);
  return r;
}

LaurentVec decode_vec(const PolyVecXY& v) {
  LaurentVec r(v.rank());
  for (int i = 0; i < v.rank(); ++i) r[i] = decode_poly(v[i]);
  return r;
}

namespace {

struct Term {
  int pos;
  Mono m;
  Int c;
};

// Total order on module terms.  The tracking block (positions >= block1)
// always compares below the ambient block, so a vector's leading term stays
// in the ambient block until that part is fully eliminated.
struct Ord {
  TermOrder::Kind kind;
  int block1;

  static int cmp_mono(const Mono& a, const Mono& b) {
    const std::int64_t da = a.x + a.y, db = b.x + b.y;
    if (da != db) return da < db ? -1 : 1;
    if (a.x != b.x) return a.x < b.x ? -1 : 1;
    return 0;
  }

  int cmp(int pa, const Mono& ma, int pb, const Mono& mb) const {
    const bool amb_a = pa < block1, amb_b = pb < block1;
    if (amb_a != amb_b) return amb_a ? 1 : -1;
    if (amb_a && kind == TermOrder::Kind::ElimGraded) {
      if (int c = cmp_mono(ma, mb)) return c;
      if (pa != pb) return pa < pb ? 1 : -1;
      return 0;
    }
    if (pa != pb) return pa < pb ? 1 : -1;
    return cmp_mono(ma, mb);
  }
};

using ModVec = std::vector<Term>;  // strictly descending in the active order

// dst += c * X^m * src
void add_scaled(ModVec& dst, const Int& c, const Mono& m, const ModVec& src,
                const Ord& ord) {
  ModVec out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    int take;  // -1: dst, 1: src, 0: both
    if (i == dst.size())
      take = 1;
    else if (j == src.size())
      take = -1;
    else {
      const Mono sm = src[j].m * m;
      take = -ord.cmp(dst[i].pos, dst[i].m, src[j].pos, sm);
      take = take < 0 ? -1 : (take > 0 ? 1 : 0);
    }
    if (take == -1) {
      out.push_back(dst[i++]);
    } else if (take == 1) {
      out.push_back({src[j].pos, src[j].m * m, c * src[j].c});
      ++j;
    } else {
      Int nc = dst[i].c + c * src[j].c;
      if (nc != 0) out.push_back({dst[i].pos, dst[i].m, std::move(nc)});
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

void negate(ModVec& v) {
  for (auto& t : v) t.c = -t.c;
}

struct PairKey {
  int pos;
  Mono lcm;
  int i, j;
};

struct PairLess {
  Ord ord;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (int c = ord.cmp(a.pos, a.lcm, b.pos, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

struct GrobnerEngine::Impl {
  Ord ord;
  int rank;        // ambient positions [0, rank)
  GBOptions opts;
  std::int64_t steps = 0;

  std::vector<ModVec> inputs;   // extended input vectors, insertion order
  std::vector<ModVec> basis;    // final extended basis
  std::vector<ModVec> ambient;  // block-1 parts of `basis` entries (parallel)

  void charge(std::int64_t* counter) const {
    if (++*counter > opts.step_budget) throw ResourceError(*counter);
  }

  // Reduce the leading term repeatedly; exact cancellation each step.
  void top_reduce(ModVec& w, const std::vector<ModVec>& gens,
                  std::int64_t* counter, int skip = -1) const {
    while (!w.empty()) {
      const Term& lt = w.front();
      bool hit = false;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (static_cast<int>(k) == skip || gens[k].empty()) continue;
        const Term& glt = gens[k].front();
        if (glt.pos != lt.pos || !glt.m.divides(lt.m) || lt.c % glt.c != 0)
          continue;
        charge(counter);
        add_scaled(w, -(lt.c / glt.c), lt.m / glt.m, gens[k], ord);
        hit = true;
        break;
      }
      if (!hit) return;
    }
  }

  // Reduce every term by Euclidean remainders: a term settles once its
  // coefficient lies in [0, lc) for every basis lead dividing its monomial.
  // Against a minimal strong basis this yields the unique normal form of
  // the residue class.
  void full_reduce(ModVec& w, const std::vector<ModVec>& gens,
                   std::int64_t* counter, int skip = -1) const {
    std::size_t idx = 0;
    while (idx < w.size()) {
      const Term t = w[idx];
      bool hit = false;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (static_cast<int>(k) == skip || gens[k].empty()) continue;
        const Term& glt = gens[k].front();
        if (glt.pos != t.pos || !glt.m.divides(t.m)) continue;
        Int q = floor_div(t.c, glt.c);
        if (q == 0) continue;
        charge(counter);
        add_scaled(w, -q, t.m / glt.m, gens[k], ord);
        hit = true;
        break;
      }
      if (!hit) ++idx;  // terms before idx are untouched by later reductions
    }
  }

  void build() {
    std::vector<ModVec> work;
    std::set<PairKey, PairLess> queue{PairLess{ord}};

    auto push_pairs = [&](int idx) {
      const Term& lt = work[idx].front();
      for (int i = 0; i < idx; ++i) {
        if (work[i].empty()) continue;
        const Term& olt = work[i].front();
        if (olt.pos != lt.pos) continue;
        queue.insert({lt.pos, Mono::lcm(lt.m, olt.m), i, idx});
      }
    };
    auto insert = [&](ModVec v) {
      if (v.empty()) return;
      full_reduce(v, work, &steps);  // keep tails short as the basis grows
      if (v.empty()) return;
      if (v.front().c < 0) negate(v);
      work.push_back(std::move(v));
      push_pairs(static_cast<int>(work.size()) - 1);
    };

    for (const ModVec& in : inputs) {
      ModVec w = in;
      top_reduce(w, work, &steps);
      insert(std::move(w));
    }

    while (!queue.empty()) {
      PairKey pk = *queue.begin();
      queue.erase(queue.begin());
      charge(&steps);
      // by value: insert() below grows `work` and would invalidate references
      const ModVec f = work[pk.i];
      const ModVec g = work[pk.j];
      const Term lf = f.front();
      const Term lg = g.front();
      // S-vector: cancel on lcm of monomials and lcm of leading coefficients.
      {
        const Int cg = ext_gcd(lf.c, lg.c).g;
        const Int l = lf.c / cg * lg.c;
        ModVec s;
        add_scaled(s, l / lf.c, pk.lcm / lf.m, f, ord);
        add_scaled(s, -(l / lg.c), pk.lcm / lg.m, g, ord);
        top_reduce(s, work, &steps);
        insert(std::move(s));
      }
      // G-vector: Bezout combination hitting gcd of the leading coefficients.
      if (lf.c % lg.c != 0 && lg.c % lf.c != 0) {
        auto [cg, u, v] = ext_gcd(lf.c, lg.c);
        ModVec gv;
        add_scaled(gv, u, pk.lcm / lf.m, f, ord);
        add_scaled(gv, v, pk.lcm / lg.m, g, ord);
        top_reduce(gv, work, &steps);
        insert(std::move(gv));
      }
    }

    // Minimalize: drop elements whose leading term is strongly divisible by
    // another survivor's leading term (associates keep the smaller index).
    const int n = static_cast<int>(work.size());
    std::vector<bool> alive(n, true);
    auto strongly_divides = [](const Term& a, const Term& b) {
      return a.pos == b.pos && a.m.divides(b.m) && b.c % a.c == 0;
    };
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (i == j || !alive[j]) continue;
        const Term& li = work[i].front();
        const Term& lj = work[j].front();
        if (!strongly_divides(lj, li)) continue;
        if (strongly_divides(li, lj) && i < j) continue;
        alive[i] = false;
        break;
      }
    }
    std::vector<ModVec> kept;
    for (int i = 0; i < n; ++i)
      if (alive[i]) kept.push_back(std::move(work[i]));
    // Tail-reduce; leading terms are mutually irreducible and stay fixed.
    for (std::size_t i = 0; i < kept.size(); ++i)
      full_reduce(kept[i], kept, &steps, static_cast<int>(i));

    std::sort(kept.begin(), kept.end(), [&](const ModVec& a, const ModVec& b) {
      std::size_t i = 0;
      for (; i < a.size() && i < b.size(); ++i) {
        if (int c = ord.cmp(a[i].pos, a[i].m, b[i].pos, b[i].m)) return c < 0;
        if (a[i].c != b[i].c) return a[i].c < b[i].c;
      }
      return a.size() < b.size();
    });
    basis = std::move(kept);
    ambient.clear();
    for (const ModVec& v : basis) {
      ModVec amb;
      for (const Term& t : v)
        if (t.pos < rank) amb.push_back(t);
      ambient.push_back(std::move(amb));
    }
  }
};

namespace {

ModVec to_modvec(const PolyVecXY& v, int pos_offset, const Ord& ord) {
  ModVec out;
  for (int i = 0; i < v.rank(); ++i)
    for (const auto& [m, c] : v[i].terms())
      out.push_back({pos_offset + i, m, c});
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return ord.cmp(a.pos, a.m, b.pos, b.m) > 0;
  });
  return out;
}

PolyVecXY block1_of(const ModVec& v, int rank) {
  PolyVecXY out(rank);
  for (const Term& t : v)
    if (t.pos < rank) out[t.pos].add_term(t.m, t.c);
  return out;
}

std::vector<BiPoly> block2_of(const ModVec& v, int rank, int tracked,
                              bool negate_coeffs) {
  std::vector<BiPoly> out(tracked);
  for (const Term& t : v)
    if (t.pos >= rank)
      out[t.pos - rank].add_term(t.m, negate_coeffs ? Int(-t.c) : t.c);
  return out;
}

}  // namespace

GrobnerEngine::GrobnerEngine(int rank, TermOrder order, GBOptions opts)
    : impl_(std::make_shared<Impl>()), rank_(rank) {
  impl_->ord = Ord{order.kind, rank};
  impl_->rank = rank;
  impl_->opts = opts;
}

void GrobnerEngine::add_tracked(const PolyVecXY& v) {
  assert(!built_ && v.rank() == rank_);
  ModVec w = to_modvec(v, 0, impl_->ord);
  // tracking coordinate
  Term tag{rank_ + tracked_count_, Mono{0, 0}, 1};
  auto it = std::lower_bound(w.begin(), w.end(), tag, [&](const Term& a, const Term& b) {
    return impl_->ord.cmp(a.pos, a.m, b.pos, b.m) > 0;
  });
  w.insert(it, tag);
  impl_->inputs.push_back(std::move(w));
  ++tracked_count_;
}

void GrobnerEngine::add_untracked(const PolyVecXY& v) {
  assert(!built_ && v.rank() == rank_);
  impl_->inputs.push_back(to_modvec(v, 0, impl_->ord));
}

void GrobnerEngine::add_laurent_rows() {
  for (int i = 0; i < rank_; ++i) {
    PolyVecXY row(rank_);
    row[i].add_term(Mono{1, 1}, 1);
    row[i].add_term(Mono{0, 0}, -1);
    add_untracked(row);
  }
}

void GrobnerEngine::build() {
  assert(!built_);
  impl_->build();
  built_ = true;
  for (const ModVec& v : impl_->basis) {
    if (v.empty()) continue;
    if (v.front().pos < rank_) {
      basis_.push_back(block1_of(v, rank_));
      origin_.push_back(block2_of(v, rank_, tracked_count_, false));
    } else {
      syzygies_.push_back(block2_of(v, rank_, tracked_count_, false));
    }
  }
}

PolyVecXY GrobnerEngine::normal_form(const PolyVecXY& v) const {
  assert(built_ && v.rank() == rank_);
  ModVec w = to_modvec(v, 0, impl_->ord);
  std::int64_t local = 0;
  impl_->full_reduce(w, impl_->ambient, &local);
  return block1_of(w, rank_);
}

bool GrobnerEngine::is_member(const PolyVecXY& v) const {
  assert(built_ && v.rank() == rank_);
  ModVec w = to_modvec(v, 0, impl_->ord);
  std::int64_t local = 0;
  impl_->top_reduce(w, impl_->ambient, &local);
  return w.empty();
}

std::optional<std::vector<BiPoly>> GrobnerEngine::certificate(
    const PolyVecXY& v) const {
  assert(built_ && v.rank() == rank_);
  ModVec w = to_modvec(v, 0, impl_->ord);
  std::int64_t local = 0;
  // Reduce with the full extended vectors so the tracking block accumulates
  // the combination; stop once the ambient part is gone.
  while (!w.empty() && w.front().pos < rank_) {
    const Term& lt = w.front();
    bool hit = false;
    for (std::size_t k = 0; k < impl_->basis.size(); ++k) {
      if (impl_->basis[k].empty()) continue;
      const Term& glt = impl_->basis[k].front();
      if (glt.pos != lt.pos || !glt.m.divides(lt.m) || lt.c % glt.c != 0)
        continue;
      impl_->charge(&local);
      add_scaled(w, -(lt.c / glt.c), lt.m / glt.m, impl_->basis[k], impl_->ord);
      hit = true;
      break;
    }
    if (!hit) return std::nullopt;
  }
  return block2_of(w, rank_, tracked_count_, true);
}

StrongGB strong_groebner(const std::vector<PolyVecXY>& gens, TermOrder order,
                         GBOptions opts) {
  const int rank = gens.empty() ? 1 : gens[0].rank();
  auto engine = std::make_shared<GrobnerEngine>(rank, order, opts);
  for (const auto& g : gens) engine->add_tracked(g);
  engine->build();
  return StrongGB{order, engine->basis(), engine->basis_origin(), engine};
}

PolyVecXY normal_form(const PolyVecXY& v, const StrongGB& gb) {
  return gb.engine->normal_form(v);
}

std::vector<PolyVecXY> syzygy_basis(const std::vector<PolyVecXY>& gens,
                                    GBOptions opts) {
  if (gens.empty()) return {};
  const int rank = gens[0].rank();
  GrobnerEngine engine(rank, TermOrder{TermOrder::Kind::PotGraded}, opts);
  for (const auto& g : gens) engine.add_tracked(g);
  engine.add_laurent_rows();
  engine.build();
  std::vector<PolyVecXY> out;
  for (const auto& syz : engine.syzygies())
    out.push_back(PolyVecXY(syz));
  return out;
}

IntMatrix constant_intersection(const std::vector<PolyVecXY>& gens, int rank,
                                GBOptions opts) {
  GrobnerEngine engine(rank, TermOrder{TermOrder::Kind::ElimGraded}, opts);
  for (const auto& g : gens) engine.add_untracked(g);
  engine.build();
  std::vector<std::vector<Int>> rows;
  for (const auto& el : engine.basis()) {
    bool constant = true;
    std::vector<Int> row(rank, 0);
    for (int i = 0; i < rank && constant; ++i) {
      for (const auto& [m, c] : el[i].terms()) {
        if (m.x != 0 || m.y != 0) {
          constant = false;
          break;
        }
        row[i] = c;
      }
    }
    if (constant) rows.push_back(std::move(row));
  }
  if (rows.empty()) return IntMatrix(0, rank);
  return lattice_basis(IntMatrix::from_rows(rows));
}

}  // namespace abcg
