#include "abcg/abc_group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "abcg/errors.hpp"
#include "abcg/zlinalg.hpp"

namespace abcg {

AbcGroup::AbcGroup(ModulePresentation pres) : pres_(std::move(pres)) {
  if (pres_.base_step() != 1)
    throw std::invalid_argument("group presentations use base step 1");
}

GroupElement AbcGroup::element(LaurentVec a, std::int64_t z) const {
  if (a.rank() != pres_.ambient_rank())
    throw std::invalid_argument("element rank mismatch");
  return {std::move(a), z};
}

GroupElement AbcGroup::mul(const GroupElement& g, const GroupElement& h) const {
  return {g.a + h.a.shifted(g.z), g.z + h.z};
}

GroupElement AbcGroup::inv(const GroupElement& g) const {
  return {-g.a.shifted(-g.z), -g.z};
}

GroupElement AbcGroup::conj(const GroupElement& g, const GroupElement& h) const {
  return mul(mul(g, h), inv(g));
}

GroupElement AbcGroup::pow(const GroupElement& g, std::int64_t n) const {
  // (a, z)^n = (geom_z(n) a, n z), valid for every n in Z.
  return {geometric_sum(g.z, n) * g.a, n * g.z};
}

bool AbcGroup::equal(const GroupElement& g, const GroupElement& h) const {
  return g.z == h.z && pres_.elem_equal(g.a, h.a);
}

bool AbcGroup::is_identity(const GroupElement& g) const {
  return g.z == 0 && pres_.is_zero_elem(g.a);
}

std::string AbcGroup::str(const GroupElement& g) const {
  std::string out = "(";
  for (int i = 0; i < g.a.rank(); ++i) {
    if (i) out += ", ";
    out += g.a[i].str();
  }
  out += " ; " + std::to_string(g.z) + ")";
  return out;
}

GroupElement AbcGroup::parse_element(std::string_view text) const {
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close <= open)
    throw ParseError("group element must be parenthesized", 0, 1);
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::size_t semi = body.rfind(';');
  if (semi == std::string_view::npos)
    throw ParseError("group element needs '; z'", 0, static_cast<int>(close));
  std::string_view apart = body.substr(0, semi);
  std::string_view zpart = body.substr(semi + 1);
  std::vector<LaurentPoly> coords;
  std::size_t start = 0;
  while (start <= apart.size()) {
    std::size_t comma = apart.find(',', start);
    std::string_view piece = comma == std::string_view::npos
                                 ? apart.substr(start)
                                 : apart.substr(start, comma - start);
    coords.push_back(LaurentPoly::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::int64_t z = 0;
  try {
    z = std::stoll(std::string(zpart));
  } catch (const std::exception&) {
    throw ParseError("bad z-part in group element", 0,
                     static_cast<int>(semi) + 2);
  }
  if (static_cast<int>(coords.size()) != pres_.ambient_rank())
    throw ParseError("group element has wrong number of coordinates", 0, 1);
  return {LaurentVec(std::move(coords)), z};
}

Word Word::var(const std::string& name) {
  Word w;
  w.letters.push_back({Letter::Kind::Var, name, {}});
  return w;
}

Word Word::constant(const GroupElement& g) {
  Word w;
  w.letters.push_back({Letter::Kind::Const, "", g});
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    Letter l = *it;
    switch (l.kind) {
      case Letter::Kind::Var: l.kind = Letter::Kind::InvVar; break;
      case Letter::Kind::InvVar: l.kind = Letter::Kind::Var; break;
      case Letter::Kind::Const: l.kind = Letter::Kind::InvConst; break;
      case Letter::Kind::InvConst: l.kind = Letter::Kind::Const; break;
    }
    w.letters.push_back(std::move(l));
  }
  return w;
}

Word& Word::append(const Word& o) {
  letters.insert(letters.end(), o.letters.begin(), o.letters.end());
  return *this;
}

Word nested_commutator_word(const std::vector<std::string>& vars) {
  assert(vars.size() >= 2);
  Word w = Word::var(vars[0]);
  for (std::size_t i = 1; i < vars.size(); ++i) {
    Word next = w.inverse();
    Word v = Word::var(vars[i]);
    next.append(v.inverse());
    next.append(w);
    next.append(v);
    w = std::move(next);
  }
  return w;
}

GroupElement evaluate_word(const AbcGroup& grp, const Word& w,
                           const std::map<std::string, GroupElement>& assignment) {
  GroupElement acc = grp.identity();
  for (const auto& l : w.letters) {
    GroupElement g;
    switch (l.kind) {
      case Word::Letter::Kind::Const:
        g = l.c;
        break;
      case Word::Letter::Kind::InvConst:
        g = grp.inv(l.c);
        break;
      default: {
        auto it = assignment.find(l.var);
        if (it == assignment.end())
          throw std::invalid_argument("unassigned word variable: " + l.var);
        g = l.kind == Word::Letter::Kind::Var ? it->second : grp.inv(it->second);
      }
    }
    acc = grp.mul(acc, g);
  }
  return acc;
}

std::vector<GroupElement> commutator_witness(const AbcGroup& wreath,
                                             const LaurentPoly& f, int k) {
  if (wreath.presentation().ambient_rank() != 1 ||
      !wreath.presentation().relations().empty())
    throw std::invalid_argument("commutator witnesses live in Z wr Z");
  if (k < 1 || k > 3) throw std::invalid_argument("commutator depth must be 1..3");
  auto quot = divide_exact(x_minus_one_pow(k), f);
  if (!quot)
    throw std::invalid_argument("(X-1)^" + std::to_string(k) +
                                " does not divide the target polynomial");
  std::vector<GroupElement> out;
  const GroupElement shift{LaurentVec(1), -1};  // (0, -1)
  out.push_back(shift);
  out.push_back({LaurentVec(std::vector<LaurentPoly>{*quot}), 0});
  for (int i = 1; i < k; ++i) out.push_back(shift);
  return out;
}

namespace {

Word power_word(const std::string& name, const Int& e) {
  Word w;
  const bool neg = e < 0;
  Int n = neg ? Int(-e) : e;
  for (Int i = 0; i < n; ++i)
    w.letters.push_back({neg ? Word::Letter::Kind::InvVar : Word::Letter::Kind::Var,
                         name,
                         {}});
  return w;
}

std::string gen_name(int i) { return "g" + std::to_string(i + 1); }

}  // namespace

SubgroupStructure subgroup_structure(const AbcGroup& grp,
                                     const std::vector<GroupElement>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  const int k = static_cast<int>(gens.size());
  SubgroupStructure s;

  bool all_zero = true;
  for (const auto& g : gens) all_zero = all_zero && g.z == 0;
  if (all_zero) {
    s.all_in_a = true;
    s.d = 0;
    for (int i = 0; i < k; ++i) {
      s.s_gens.push_back(gens[i].a);
      s.s_words.push_back(Word::var(gen_name(i)));
    }
    return s;
  }

  std::vector<Int> zs;
  for (const auto& g : gens) zs.emplace_back(g.z);
  // commutators g_i g_j g_i^-1 g_j^-1 for i < j
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      GroupElement c = grp.mul(grp.mul(gens[i], gens[j]),
                               grp.mul(grp.inv(gens[i]), grp.inv(gens[j])));
      assert(c.z == 0);
      s.s_gens.push_back(c.a);
      Word w = Word::var(gen_name(i));
      w.append(Word::var(gen_name(j)));
      w.append(Word::var(gen_name(i)).inverse());
      w.append(Word::var(gen_name(j)).inverse());
      s.s_words.push_back(std::move(w));
    }
  }
  // kernel-exponent products g_1^{s_1} ... g_K^{s_K}
  IntMatrix zrow(1, k);
  for (int i = 0; i < k; ++i) zrow(0, i) = zs[i];
  IntMatrix ker = integer_kernel(zrow);
  for (int r = 0; r < ker.rows(); ++r) {
    GroupElement p = grp.identity();
    Word w;
    for (int i = 0; i < k; ++i) {
      p = grp.mul(p, grp.pow(gens[i], static_cast<std::int64_t>(ker(r, i))));
      w.append(power_word(gen_name(i), ker(r, i)));
    }
    assert(p.z == 0);
    s.s_gens.push_back(p.a);
    s.s_words.push_back(std::move(w));
  }

  std::vector<Int> bez = bezout_coefficients(zs);
  Int d = 0;
  for (int i = 0; i < k; ++i) d += bez[i] * zs[i];
  assert(d > 0);
  s.d = static_cast<std::int64_t>(d);
  GroupElement pivot = grp.identity();
  for (int i = 0; i < k; ++i)
    pivot = grp.mul(pivot, grp.pow(gens[i], static_cast<std::int64_t>(bez[i])));
  assert(pivot.z == s.d);
  s.pivot = pivot;
  s.pivot_exponents = std::move(bez);
  return s;
}

bool subgroup_membership(const AbcGroup& grp, const GroupElement& g,
                         const SubgroupStructure& s) {
  const ModulePresentation& pres = grp.presentation();
  if (s.all_in_a) {
    if (g.z != 0) return false;
    std::vector<LaurentVec> elems = s.s_gens;
    elems.push_back(g.a);
    return lattice_hits_last_one(integer_syzygies(pres, elems));
  }
  if (g.z % s.d != 0) return false;
  GroupElement b = grp.mul(g, grp.pow(*s.pivot, -(g.z / s.d)));
  assert(b.z == 0);
  if (s.d == 1) return submodule_membership(pres, b.a, s.s_gens).has_value();
  RestrictedModule rm = restrict_scalars(pres, static_cast<int>(s.d));
  std::vector<LaurentVec> gens_d;
  gens_d.reserve(s.s_gens.size());
  for (const auto& sg : s.s_gens) gens_d.push_back(rm.map_elem(sg));
  return submodule_membership(rm.pres, rm.map_elem(b.a), gens_d).has_value();
}

}  // namespace abcg
