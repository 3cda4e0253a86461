#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "abcg/groebner.hpp"
#include "abcg/laurent.hpp"
#include "abcg/zlinalg.hpp"

namespace abcg {

// A finitely presented module over Z[X^{±d}] (d = base_step; d = 1 gives
// Z[X^±]).  The module is the quotient of the full ambient power
// Z[X^{±d}]^D by the submodule generated by the relation vectors.
// Elements are represented by ambient vectors whose exponents are all
// divisible by d.
class ModulePresentation {
 public:
  ModulePresentation() : ModulePresentation(1, {}, 1) {}
  ModulePresentation(int ambient_rank, std::vector<LaurentVec> relations,
                     int base_step = 1);
  static ModulePresentation free_module(int rank) {
    return ModulePresentation(rank, {}, 1);
  }

  int ambient_rank() const { return ambient_rank_; }
  int base_step() const { return base_step_; }
  const std::vector<LaurentVec>& relations() const { return relations_; }

  LaurentVec zero() const { return LaurentVec(ambient_rank_); }
  bool is_zero_elem(const LaurentVec& a) const;
  bool elem_equal(const LaurentVec& a, const LaurentVec& b) const;
  // Canonical representative (fully reduced normal form).
  LaurentVec reduce(const LaurentVec& a) const;

  // Translation to the internal ring variable T = X^d: exponents divide by d.
  // Throws std::invalid_argument on an exponent not divisible by d.
  LaurentVec to_engine(const LaurentVec& a) const;
  LaurentVec from_engine(const LaurentVec& a) const;
  LaurentPoly scalar_to_engine(const LaurentPoly& s) const;
  LaurentPoly scalar_from_engine(const LaurentPoly& s) const;

  // Write-once cached Groebner basis of the relation rows.
  const GrobnerEngine& relation_engine() const;

 private:
  int ambient_rank_;
  int base_step_;
  std::vector<LaurentVec> relations_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Coefficients c_i in Z[X^{±d}] with sum c_i * gens_i = a in A, when a lies
// in the submodule generated by gens; nullopt otherwise.
std::optional<std::vector<LaurentPoly>> submodule_membership(
    const ModulePresentation& a_mod, const LaurentVec& a,
    const std::vector<LaurentVec>& gens);

// Generators of {(f_1..f_k) : sum f_i * elems_i = 0 in A} over Z[X^{±d}].
std::vector<std::vector<LaurentPoly>> syzygies_in_quotient(
    const ModulePresentation& a_mod, const std::vector<LaurentVec>& elems);

// Z-generators of {(s_1..s_k) in Z^k : sum s_i * elems_i = 0 in A}.
IntMatrix integer_syzygies(const ModulePresentation& a_mod,
                           const std::vector<LaurentVec>& elems);

// Generators of the ideal {f in Z[X^{±d}] : f * f1 = 0 in A}.
std::vector<LaurentPoly> annihilator(const ModulePresentation& a_mod,
                                     const LaurentVec& f1);

// New presentation with sub_gens adjoined to the relations.
ModulePresentation quotient(const ModulePresentation& a_mod,
                            const std::vector<LaurentVec>& sub_gens);

// The same module viewed over Z[X^{±d}]: ambient rank D*d, where original
// coordinate i splits by exponent residue into slots i*d + j, each slot
// normalized by X^{-j} so all stored exponents are divisible by d.
struct RestrictedModule {
  ModulePresentation pres;
  int d = 1;
  int orig_rank = 0;
  LaurentVec map_elem(const LaurentVec& orig) const;
  LaurentVec unmap_elem(const LaurentVec& restricted) const;
};

RestrictedModule restrict_scalars(const ModulePresentation& a_mod, int d);

}  // namespace abcg
