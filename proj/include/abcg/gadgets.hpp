#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "abcg/abc_group.hpp"
#include "abcg/fpmod.hpp"
#include "abcg/laurent.hpp"

namespace abcg {

enum class GadgetKind { Square, Sum };

// X^{z1} + X^{z2}(1-X) + X^{z3} + (X-3); divisible by (X-1)^3 iff
// z2 = z1^2 and z3 = -z1.
LaurentPoly square_gadget_poly(std::int64_t z1, std::int64_t z2, std::int64_t z3);
// X^{z1} + X^{z2} - X^{z3} - 1; divisible by (X-1)^2 iff z3 = z1 + z2.
LaurentPoly sum_gadget_poly(std::int64_t z1, std::int64_t z2, std::int64_t z3);

bool gadget_holds(GadgetKind kind, const std::array<std::int64_t, 3>& z);

// (z1, z2, z3, z1^2, z2^2, z1^2+z2^2, z1+z2, (z1+z2)^2, 2 z3, -z1, -z2,
// -z1-z2): the auxiliary tuple that satisfies the seven product-gadget rows
// exactly when z3 = z1 z2.
std::array<std::int64_t, 12> derive_product_witness(std::int64_t z1,
                                                    std::int64_t z2,
                                                    std::int64_t z3);
// The seven divisibilities of the product gadget, evaluated at a 12-tuple.
bool product_rows_hold(const std::array<std::int64_t, 12>& t);

// One row p | X^{z_1} c_1 + ... + X^{z_n} c_n - rhs with
// p in {0, (X-1)^2, (X-1)^3}.
struct DivRow {
  LaurentPoly p;
  std::vector<LaurentPoly> coeffs;
  LaurentPoly rhs;
};

struct DivisibilitySystem {
  int n = 0;
  std::vector<DivRow> rows;
};

// true iff every row's divisibility holds at the assignment (arity-checked).
bool evaluate_system(const DivisibilitySystem& sys,
                     const std::vector<std::int64_t>& z);

// Chain of primitive equations z_k = z_i z_j | z_i + z_j | b over variables
// z_1..z_num_vars, originals first, each k defined once.
struct EquationChain {
  struct Eq {
    enum class Op { Prod, Sum, Const };
    Op op = Op::Const;
    int k = 0, i = 0, j = 0;
    std::int64_t b = 0;
  };
  int orig_vars = 0;
  int num_vars = 0;
  int out_var = 0;  // variable carrying the polynomial's value
  std::vector<Eq> eqs;

  // Values of all chain variables given the originals.
  std::vector<std::int64_t> extend(const std::vector<std::int64_t>& originals) const;
};

// Rewrites P (a list of (coefficient, exponent-vector) monomials over
// `orig_vars` variables) into a chain computing P's value; monomials are
// processed in descending graded-lex order.
EquationChain flatten_polynomial(
    const std::vector<std::pair<Int, std::vector<int>>>& monomials,
    int orig_vars);

// The compiled divisibility system, with enough bookkeeping to extend a
// chain assignment to the product-gadget auxiliaries.
struct CompiledSystem {
  DivisibilitySystem sys;
  EquationChain chain;
  std::int64_t a = 0;
  struct ProdAux {
    int i, j, k;
    std::array<int, 9> aux;  // global indices of the nine fresh variables
  };
  std::vector<ProdAux> prods;

  std::vector<std::int64_t> assignment_from_originals(
      const std::vector<std::int64_t>& originals) const;
};

// Each Prod contributes seven rows over nine fresh auxiliaries, each Sum one
// (X-1)^2 row, each Const one 0-row; the final 0-row ties the output
// variable to X^a.
CompiledSystem compile_system(const EquationChain& chain, std::int64_t a);

// A = Z[X^±]^k / (p_j e_j), f-vectors stacked over the rows.  The module
// equation X^{z_1} f_1 + ... + X^{z_n} f_n = f_0 holds iff the system does.
struct ModuleInstance {
  ModulePresentation pres;
  int n = 0;
  std::vector<LaurentVec> f;  // f[0] is the right-hand side
};
ModuleInstance to_module_instance(const DivisibilitySystem& sys);
bool verify_module_equation(const ModuleInstance& mi,
                            const std::vector<std::int64_t>& z);

// Spherical equation (x_0 h_0 x_0^-1) ... (x_n h_n x_n^-1) with
// h_0 = (-f_0, 0), h_i = (f_i, 0).
struct QuadraticInstance {
  AbcGroup grp;
  std::vector<GroupElement> h;  // h[0]..h[n]
  Word word;
};
QuadraticInstance to_quadratic_instance(const ModuleInstance& mi);
bool verify_quadratic(const QuadraticInstance& qi,
                      const std::vector<std::int64_t>& z);

// Knapsack form g_1^{b_1} ... g_{n+1}^{b_{n+1}} = g with conjugated shift
// generators; also the doubled nonnegative form.
struct KnapsackInstance {
  AbcGroup grp;
  std::vector<GroupElement> g;  // g[0..n] = g_1..g_{n+1}
  GroupElement target;
};
KnapsackInstance to_knapsack_instance(const ModuleInstance& mi);
bool verify_knapsack_int(const KnapsackInstance& ki,
                         const std::vector<std::int64_t>& b);
bool verify_knapsack_doubled(const KnapsackInstance& ki,
                             const std::vector<std::int64_t>& z,
                             const std::vector<std::int64_t>& zp);
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
doubled_from_int(const std::vector<std::int64_t>& b);

// Word system over Z wr Z, one word per row, with commutator tails matching
// the divisor (X-1)^k.
struct WreathInstance {
  AbcGroup wreath;
  int n = 0;
  DivisibilitySystem sys;
  std::vector<Word> words;
  std::vector<int> comm_depth;  // per row: 0, 2 or 3
};
WreathInstance to_wreath_instance(const DivisibilitySystem& sys);
// Homogeneous check at (b_0, ..., b_n); witnesses for the commutator tails
// are constructed on the fly.
bool verify_wreath(const WreathInstance& wi, const std::vector<std::int64_t>& b);

}  // namespace abcg
