#include "abcg/fpmod.hpp"

#include <cassert>
#include <stdexcept>

namespace abcg {

namespace {

PolyVecXY laurent_row(int rank, int i) {
  PolyVecXY row(rank);
  row[i].add_term(Mono{1, 1}, 1);
  row[i].add_term(Mono{0, 0}, -1);
  return row;
}

}  // namespace

struct ModulePresentation::Cache {
  std::once_flag flag;
  std::shared_ptr<GrobnerEngine> engine;
};

ModulePresentation::ModulePresentation(int ambient_rank,
                                       std::vector<LaurentVec> relations,
                                       int base_step)
    : ambient_rank_(ambient_rank),
      base_step_(base_step),
      relations_(std::move(relations)),
      cache_(std::make_shared<Cache>()) {
  assert(ambient_rank_ >= 0 && base_step_ >= 1);
  for (const auto& r : relations_) {
    if (r.rank() != ambient_rank_)
      throw std::invalid_argument("relation rank mismatch");
    to_engine(r);  // validates exponent divisibility
  }
}

LaurentVec ModulePresentation::to_engine(const LaurentVec& a) const {
  if (a.rank() != ambient_rank_)
    throw std::invalid_argument("element rank mismatch");
  if (base_step_ == 1) return a;
  LaurentVec out(ambient_rank_);
  for (int i = 0; i < ambient_rank_; ++i) {
    LaurentPoly p;
    for (const auto& [e, c] : a[i].terms()) {
      if (e % base_step_ != 0)
        throw std::invalid_argument(
            "exponent not divisible by the base step of the module");
      p += LaurentPoly(c, e / base_step_);
    }
    out[i] = p;
  }
  return out;
}

LaurentVec ModulePresentation::from_engine(const LaurentVec& a) const {
  if (base_step_ == 1) return a;
  LaurentVec out(a.rank());
  for (int i = 0; i < a.rank(); ++i) {
    LaurentPoly p;
    for (const auto& [e, c] : a[i].terms())
      p += LaurentPoly(c, e * base_step_);
    out[i] = p;
  }
  return out;
}

LaurentPoly ModulePresentation::scalar_to_engine(const LaurentPoly& s) const {
  if (base_step_ == 1) return s;
  LaurentPoly p;
  for (const auto& [e, c] : s.terms()) {
    if (e % base_step_ != 0)
      throw std::invalid_argument("scalar exponent not divisible by base step");
    p += LaurentPoly(c, e / base_step_);
  }
  return p;
}

LaurentPoly ModulePresentation::scalar_from_engine(const LaurentPoly& s) const {
  if (base_step_ == 1) return s;
  LaurentPoly p;
  for (const auto& [e, c] : s.terms()) p += LaurentPoly(c, e * base_step_);
  return p;
}

const GrobnerEngine& ModulePresentation::relation_engine() const {
  std::call_once(cache_->flag, [this] {
    auto eng = std::make_shared<GrobnerEngine>(
        ambient_rank_, TermOrder{TermOrder::Kind::PotGraded});
    for (const auto& r : relations_)
      eng->add_untracked(encode_laurent(to_engine(r)));
    eng->add_laurent_rows();
    eng->build();
    cache_->engine = std::move(eng);
  });
  return *cache_->engine;
}

bool ModulePresentation::is_zero_elem(const LaurentVec& a) const {
  return relation_engine().is_member(encode_laurent(to_engine(a)));
}

bool ModulePresentation::elem_equal(const LaurentVec& a,
                                    const LaurentVec& b) const {
  return is_zero_elem(a - b);
}

LaurentVec ModulePresentation::reduce(const LaurentVec& a) const {
  return from_engine(
      decode_vec(relation_engine().normal_form(encode_laurent(to_engine(a)))));
}

namespace {

// Shared setup: tracked generators against the presentation's relations.
GrobnerEngine make_tracked_engine(const ModulePresentation& a_mod,
                                  const std::vector<LaurentVec>& tracked) {
  GrobnerEngine eng(a_mod.ambient_rank(), TermOrder{TermOrder::Kind::PotGraded});
  for (const auto& t : tracked)
    eng.add_tracked(encode_laurent(a_mod.to_engine(t)));
  for (const auto& r : a_mod.relations())
    eng.add_untracked(encode_laurent(a_mod.to_engine(r)));
  eng.add_laurent_rows();
  eng.build();
  return eng;
}

}  // namespace

std::optional<std::vector<LaurentPoly>> submodule_membership(
    const ModulePresentation& a_mod, const LaurentVec& a,
    const std::vector<LaurentVec>& gens) {
  GrobnerEngine eng = make_tracked_engine(a_mod, gens);
  auto cert = eng.certificate(encode_laurent(a_mod.to_engine(a)));
  if (!cert) return std::nullopt;
  std::vector<LaurentPoly> out;
  out.reserve(cert->size());
  for (const auto& c : *cert)
    out.push_back(a_mod.scalar_from_engine(decode_poly(c)));
  return out;
}

std::vector<std::vector<LaurentPoly>> syzygies_in_quotient(
    const ModulePresentation& a_mod, const std::vector<LaurentVec>& elems) {
  if (elems.empty()) return {};
  GrobnerEngine eng = make_tracked_engine(a_mod, elems);
  std::vector<std::vector<LaurentPoly>> out;
  for (const auto& syz : eng.syzygies()) {
    std::vector<LaurentPoly> row;
    row.reserve(syz.size());
    for (const auto& c : syz)
      row.push_back(a_mod.scalar_from_engine(decode_poly(c)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix integer_syzygies(const ModulePresentation& a_mod,
                           const std::vector<LaurentVec>& elems) {
  const int k = static_cast<int>(elems.size());
  if (k == 0) return IntMatrix(0, 0);
  GrobnerEngine eng = make_tracked_engine(a_mod, elems);
  std::vector<PolyVecXY> gens;
  for (const auto& syz : eng.syzygies()) gens.push_back(PolyVecXY(syz));
  for (int i = 0; i < k; ++i) gens.push_back(laurent_row(k, i));
  return constant_intersection(gens, k);
}

std::vector<LaurentPoly> annihilator(const ModulePresentation& a_mod,
                                     const LaurentVec& f1) {
  std::vector<LaurentPoly> out;
  for (auto& row : syzygies_in_quotient(a_mod, {f1})) {
    if (row[0].is_zero()) continue;
    out.push_back(std::move(row[0]));
  }
  return out;
}

ModulePresentation quotient(const ModulePresentation& a_mod,
                            const std::vector<LaurentVec>& sub_gens) {
  std::vector<LaurentVec> rels = a_mod.relations();
  rels.insert(rels.end(), sub_gens.begin(), sub_gens.end());
  return ModulePresentation(a_mod.ambient_rank(), std::move(rels),
                            a_mod.base_step());
}

LaurentVec RestrictedModule::map_elem(const LaurentVec& orig) const {
  LaurentVec out(orig_rank * d);
  for (int i = 0; i < orig_rank; ++i) {
    for (const auto& [e, c] : orig[i].terms()) {
      const int j = static_cast<int>(((e % d) + d) % d);
      out[i * d + j] += LaurentPoly(c, e - j);
    }
  }
  return out;
}

LaurentVec RestrictedModule::unmap_elem(const LaurentVec& restricted) const {
  LaurentVec out(orig_rank);
  for (int s = 0; s < restricted.rank(); ++s) {
    const int i = s / d, j = s % d;
    out[i] += restricted[s].shifted(j);
  }
  return out;
}

RestrictedModule restrict_scalars(const ModulePresentation& a_mod, int d) {
  if (a_mod.base_step() != 1)
    throw std::invalid_argument("restrict_scalars expects a base-step-1 module");
  if (d < 1) throw std::invalid_argument("base step must be positive");
  RestrictedModule rm;
  rm.d = d;
  rm.orig_rank = a_mod.ambient_rank();
  if (d == 1) {
    rm.pres = a_mod;
    return rm;
  }
  std::vector<LaurentVec> rels;
  for (const auto& r : a_mod.relations())
    for (int j = 0; j < d; ++j) rels.push_back(rm.map_elem(r.shifted(j)));
  rm.pres = ModulePresentation(rm.orig_rank * d, std::move(rels), d);
  return rm;
}

}  // namespace abcg
