#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abcg/fpmod.hpp"

namespace abcg {

struct SolveConfig {
  std::int64_t search_bound = 64;
  // (q, r) probe rings (Z/q)[X]/(X^r - 1); q must be prime.
  std::vector<std::pair<int, int>> probes = {{2, 3}, {3, 4}, {5, 6}, {2, 8}, {7, 5}};
};

// Verdict for X^{z d} f1 = f0 over a base-step-d module.  Found carries a
// witness exponent; Empty carries the certificate that rules every z out;
// Unknown carries the exhausted search bound.
struct MonomialSolveResult {
  enum class Verdict { Found, Empty, Unknown };
  enum class Certificate { None, Period, Probe };

  Verdict verdict = Verdict::Unknown;
  std::int64_t z = 0;
  Certificate certificate = Certificate::None;
  std::int64_t period = 0;
  std::pair<int, int> probe{0, 0};
  std::int64_t bound_used = 0;

  bool found() const { return verdict == Verdict::Found; }
  std::string str() const;
};

// Least p in [1, bound] with (X^{p d} - 1) f1 = 0 in A, if any.  Such a p
// makes the orbit {X^{z d} f1} purely p-periodic over all of Z.
std::optional<std::int64_t> detect_period(const ModulePresentation& a_mod,
                                          const LaurentVec& f1,
                                          std::int64_t bound);

// Image of the instance in (Z/q)[X]/(X^r - 1): the orbit of the image of f1
// is purely periodic with period dividing r, and the full residue set
// {z mod period : X^{z d} f1 = f0 in the image} is computed exactly.
struct ProbeOutcome {
  std::int64_t period = 1;
  std::vector<std::int64_t> residues;  // sorted, within [0, period)
};
ProbeOutcome finite_probe(const ModulePresentation& a_mod, const LaurentVec& f1,
                          const LaurentVec& f0, int q, int r);

// Sound three-valued pipeline: direct check, period detection, bounded
// search, probes.  Complete whenever a period <= bound exists or some probe
// separates f0 from the orbit.
MonomialSolveResult solve_monomial(const ModulePresentation& a_mod,
                                   const LaurentVec& f1, const LaurentVec& f0,
                                   const SolveConfig& cfg = {});

}  // namespace abcg
