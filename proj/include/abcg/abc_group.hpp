#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abcg/fpmod.hpp"
#include "abcg/laurent.hpp"

namespace abcg {

// Element (a, z) of A ⋊ Z with the group law
// (a, z)(a', z') = (a + X^z a', z + z').
struct GroupElement {
  LaurentVec a;
  std::int64_t z = 0;
};

// The group A ⋊ Z over a fixed base-step-1 module presentation of A.
class AbcGroup {
 public:
  explicit AbcGroup(ModulePresentation pres);
  static AbcGroup wreath_zz() {
    return AbcGroup(ModulePresentation::free_module(1));
  }

  const ModulePresentation& presentation() const { return pres_; }
  GroupElement identity() const { return {pres_.zero(), 0}; }
  GroupElement element(LaurentVec a, std::int64_t z) const;

  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inv(const GroupElement& g) const;
  GroupElement conj(const GroupElement& g, const GroupElement& h) const;  // g h g^-1
  GroupElement pow(const GroupElement& g, std::int64_t n) const;
  bool equal(const GroupElement& g, const GroupElement& h) const;
  bool is_identity(const GroupElement& g) const;

  // "( p1, ..., pD ; z )"
  std::string str(const GroupElement& g) const;
  GroupElement parse_element(std::string_view text) const;

 private:
  ModulePresentation pres_;
};

// Words over a variable alphabet and group constants.
struct Word {
  struct Letter {
    enum class Kind { Var, InvVar, Const, InvConst };
    Kind kind = Kind::Const;
    std::string var;
    GroupElement c;
  };
  std::vector<Letter> letters;

  static Word var(const std::string& name);
  static Word constant(const GroupElement& g);
  Word inverse() const;  // formal inverse; constants invert at evaluation
  Word& append(const Word& w);
};

// [x1, x2] = x1^-1 x2^-1 x1 x2, left-nested: [[x1,x2],x3], ...
Word nested_commutator_word(const std::vector<std::string>& vars);

GroupElement evaluate_word(const AbcGroup& grp, const Word& w,
                           const std::map<std::string, GroupElement>& assignment);

// Letters (x, y[, z[, w]]) in Z wr Z whose k-fold nested commutator
// evaluates to (-f, 0).  Requires (X-1)^k | f; throws otherwise.
std::vector<GroupElement> commutator_witness(const AbcGroup& wreath,
                                             const LaurentPoly& f, int k);

// Decomposition of <gens> per the structural description of subgroups of
// A ⋊ Z: either the subgroup lies in A (a Z-lattice), or it is generated by
// the Z[X^{±d}]-module <gens> ∩ A together with one pivot element of
// z-part d = gcd of the generator z-parts.
struct SubgroupStructure {
  bool all_in_a = false;
  std::int64_t d = 0;                 // 0 for the all-in-A case
  std::vector<LaurentVec> s_gens;     // lattice gens (all_in_a) or module gens
  std::vector<Word> s_words;          // defining words over g1..gK
  std::optional<GroupElement> pivot;  // z-part d
  std::vector<Int> pivot_exponents;   // Bezout exponents for the pivot
};

SubgroupStructure subgroup_structure(const AbcGroup& grp,
                                     const std::vector<GroupElement>& gens);

bool subgroup_membership(const AbcGroup& grp, const GroupElement& g,
                         const SubgroupStructure& s);

}  // namespace abcg
