#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abcg/abc_group.hpp"
#include "abcg/monomial_eq.hpp"

namespace abcg {

struct CosetResult {
  enum class Verdict { NonEmpty, Empty, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<GroupElement> witness;
  std::string certificate;  // short reason string for logs and the CLI

  bool nonempty() const { return verdict == Verdict::NonEmpty; }
};

// The data assembled for case 3 (neither subgroup inside A).
struct Case3Data {
  std::int64_t d_g = 1, d_h = 1, d = 1;  // pivot steps, d = lcm(d_g, d_h)
  std::int64_t z_g = 0, z_h = 0;         // particular solution m0*d_g = n0*d_h + z_trans
  std::int64_t z_trans = 0;              // z-part of the translate h
  LaurentVec a_prime, a_dprime;
  std::vector<LaurentVec> mprime_gens;   // S_G ∪ X^{z_trans} S_H (base-step-1 reps)
};

// Emptiness of <G> ∩ h<H>.  Empty verdicts are always certified; NonEmpty
// verdicts carry a witness whenever reconstruction succeeds.
CosetResult coset_intersect(const AbcGroup& grp,
                            const std::vector<GroupElement>& gens_g,
                            const std::vector<GroupElement>& gens_h,
                            const GroupElement& h, const SolveConfig& cfg = {});

bool verify_coset_witness(const AbcGroup& grp,
                          const std::vector<GroupElement>& gens_g,
                          const std::vector<GroupElement>& gens_h,
                          const GroupElement& h, const GroupElement& w);

// Exposed for tests: the case-3 data for two subgroups not contained in A,
// or nullopt when m d_G = n d_H + z_h has no solution.
std::optional<Case3Data> make_case3_data(const AbcGroup& grp,
                                         const SubgroupStructure& sg,
                                         const SubgroupStructure& sh,
                                         const GroupElement& h);

// Case-3 decision from explicitly given structures (neither inside A);
// the verdict must not depend on the pivot choices inside the structures.
CosetResult coset_intersect_case3(const AbcGroup& grp,
                                  const SubgroupStructure& sg,
                                  const SubgroupStructure& sh,
                                  const GroupElement& h,
                                  const SolveConfig& cfg = {});

}  // namespace abcg
