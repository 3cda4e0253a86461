#include "abcg/gadgets.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace abcg;

TEST_CASE("square and sum gadgets on fixed tuples") {
  CHECK(gadget_holds(GadgetKind::Square, {2, 4, -2}));
  CHECK(!gadget_holds(GadgetKind::Square, {2, 5, -2}));
  CHECK(gadget_holds(GadgetKind::Sum, {3, 5, 8}));
  CHECK(!gadget_holds(GadgetKind::Sum, {3, 5, 9}));
}

TEST_CASE("gadgets match their arithmetic predicates exhaustively") {
  for (std::int64_t z1 = -6; z1 <= 6; ++z1)
    for (std::int64_t z2 = -6; z2 <= 6; ++z2)
      for (std::int64_t z3 = -6; z3 <= 6; ++z3) {
        REQUIRE(gadget_holds(GadgetKind::Square, {z1, z2, z3}) ==
                (z2 == z1 * z1 && z3 == -z1));
        REQUIRE(gadget_holds(GadgetKind::Sum, {z1, z2, z3}) ==
                (z3 == z1 + z2));
      }
}

TEST_CASE("product witness") {
  CHECK(product_rows_hold(derive_product_witness(2, 3, 6)));
  CHECK(product_rows_hold(derive_product_witness(0, 0, 0)));
  CHECK(!product_rows_hold(derive_product_witness(2, 3, 5)));
}

TEST_CASE("flattening and compilation") {
  SUBCASE("single square") {
    EquationChain chain = flatten_polynomial({{Int(1), {2}}}, 1);
    CHECK(chain.eqs.size() == 1);
    CHECK(chain.eqs[0].op == EquationChain::Eq::Op::Prod);
    CompiledSystem cs = compile_system(chain, 4);
    // satisfied exactly by z1 = ±2 within a small window
    int hits = 0;
    for (std::int64_t z1 = -5; z1 <= 5; ++z1) {
      auto full = cs.assignment_from_originals({z1});
      if (evaluate_system(cs.sys, full)) {
        ++hits;
        REQUIRE(z1 * z1 == 4);
      }
    }
    CHECK(hits == 2);
    CompiledSystem cs3 = compile_system(chain, 3);
    for (std::int64_t z1 = -10; z1 <= 10; ++z1)
      REQUIRE(!evaluate_system(cs3.sys, cs3.assignment_from_originals({z1})));
  }
  SUBCASE("sum chain") {
    EquationChain chain = flatten_polynomial({{Int(1), {1, 0}}, {Int(1), {0, 1}}}, 2);
    REQUIRE(chain.eqs.size() == 1);
    CHECK(chain.eqs[0].op == EquationChain::Eq::Op::Sum);
    CompiledSystem cs = compile_system(chain, 7);
    CHECK(evaluate_system(cs.sys, cs.assignment_from_originals({3, 4})));
    CHECK(!evaluate_system(cs.sys, cs.assignment_from_originals({3, 5})));
  }
  SUBCASE("constant polynomial") {
    EquationChain chain = flatten_polynomial({{Int(7), {}}}, 0);
    REQUIRE(chain.eqs.size() == 1);
    CHECK(chain.eqs[0].op == EquationChain::Eq::Op::Const);
    CompiledSystem cs = compile_system(chain, 7);
    CHECK(evaluate_system(cs.sys, cs.assignment_from_originals({})));
    CompiledSystem bad = compile_system(chain, 8);
    CHECK(!evaluate_system(bad.sys, bad.assignment_from_originals({})));
  }
  SUBCASE("worked example of the flattening") {
    // z1^3 + 2 z1 z2 + 7
    EquationChain chain = flatten_polynomial(
        {{Int(1), {3, 0}}, {Int(2), {1, 1}}, {Int(7), {0, 0}}}, 2);
    for (std::int64_t z1 = -3; z1 <= 3; ++z1)
      for (std::int64_t z2 = -3; z2 <= 3; ++z2) {
        auto vals = chain.extend({z1, z2});
        REQUIRE(vals[chain.out_var - 1] == z1 * z1 * z1 + 2 * z1 * z2 + 7);
      }
  }
  SUBCASE("negative coefficients") {
    EquationChain chain = flatten_polynomial({{Int(-3), {1}}}, 1);
    for (std::int64_t z1 = -3; z1 <= 3; ++z1)
      REQUIRE(chain.extend({z1})[chain.out_var - 1] == -3 * z1);
  }
}

TEST_CASE("empty system edge cases") {
  DivisibilitySystem empty;
  CHECK(evaluate_system(empty, {}));
  CHECK_THROWS(evaluate_system(empty, {1}));

  // a single constant row is satisfied exactly by the pinned value
  EquationChain chain;
  chain.orig_vars = 1;
  chain.num_vars = 1;
  chain.out_var = 1;
  CompiledSystem cs = compile_system(chain, 0);
  for (std::int64_t z = -10; z <= 10; ++z)
    REQUIRE(evaluate_system(cs.sys, {z}) == (z == 0));
}

TEST_CASE("module instance equivalence") {
  EquationChain chain = flatten_polynomial({{Int(1), {1, 0}}, {Int(1), {0, 1}}}, 2);
  CompiledSystem cs = compile_system(chain, 8);
  ModuleInstance mi = to_module_instance(cs.sys);
  oracle::Rng rng(81);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::int64_t> z;
    for (int i = 0; i < cs.sys.n; ++i) z.push_back(rng.range(-6, 10));
    REQUIRE(evaluate_system(cs.sys, z) == verify_module_equation(mi, z));
  }
  auto good = cs.assignment_from_originals({3, 5});
  CHECK(evaluate_system(cs.sys, good));
  CHECK(verify_module_equation(mi, good));

  DivisibilitySystem none;
  ModuleInstance trivial = to_module_instance(none);
  CHECK(verify_module_equation(trivial, {}));
}

TEST_CASE("quadratic, knapsack and wreath instances agree with the system") {
  EquationChain chain = flatten_polynomial({{Int(1), {1, 0}}, {Int(1), {0, 1}}}, 2);
  CompiledSystem cs = compile_system(chain, 8);
  ModuleInstance mi = to_module_instance(cs.sys);
  QuadraticInstance qi = to_quadratic_instance(mi);
  KnapsackInstance ki = to_knapsack_instance(mi);
  WreathInstance wi = to_wreath_instance(cs.sys);

  auto check_all = [&](const std::vector<std::int64_t>& z) {
    const bool expect = evaluate_system(cs.sys, z);
    REQUIRE(verify_module_equation(mi, z) == expect);
    REQUIRE(verify_quadratic(qi, z) == expect);
    std::vector<std::int64_t> b;
    b.push_back(z.empty() ? 0 : z[0]);
    for (std::size_t i = 1; i < z.size(); ++i) b.push_back(z[i] - z[i - 1]);
    b.push_back(z.empty() ? 0 : -z.back());
    REQUIRE(verify_knapsack_int(ki, b) == expect);
    auto [dz, dzp] = doubled_from_int(b);
    REQUIRE(verify_knapsack_doubled(ki, dz, dzp) == expect);
    std::vector<std::int64_t> hb;
    hb.push_back(0);
    for (std::int64_t v : z) hb.push_back(v);
    REQUIRE(verify_wreath(wi, hb) == expect);
  };

  check_all(cs.assignment_from_originals({3, 5}));
  check_all(cs.assignment_from_originals({-2, 4}));
  oracle::Rng rng(82);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::int64_t> z;
    for (int i = 0; i < cs.sys.n; ++i) z.push_back(rng.range(-4, 9));
    check_all(z);
  }
}

TEST_CASE("wreath homogeneity") {
  EquationChain chain = flatten_polynomial({{Int(1), {1, 0}}, {Int(1), {0, 1}}}, 2);
  CompiledSystem cs = compile_system(chain, 8);
  WreathInstance wi = to_wreath_instance(cs.sys);
  auto z = cs.assignment_from_originals({3, 5});
  std::vector<std::int64_t> hb{0};
  for (std::int64_t v : z) hb.push_back(v);
  REQUIRE(verify_wreath(wi, hb));
  for (auto& v : hb) v += 1;  // homogeneous: shifting every b is harmless
  CHECK(verify_wreath(wi, hb));

  std::vector<std::int64_t> bad{0};
  for (std::int64_t v : z) bad.push_back(v);
  bad[3] += 1;
  CHECK(!verify_wreath(wi, bad));
}

TEST_CASE("knapsack shift generators act like inserted translations") {
  // the generators are conjugated shifts, so the int form equals the
  // original padded product definition on random exponents
  EquationChain chain = flatten_polynomial({{Int(1), {2}}}, 1);
  CompiledSystem cs = compile_system(chain, 4);
  ModuleInstance mi = to_module_instance(cs.sys);
  KnapsackInstance ki = to_knapsack_instance(mi);
  oracle::Rng rng(83);
  const AbcGroup& grp = ki.grp;
  for (int t = 0; t < 20; ++t) {
    std::vector<std::int64_t> b;
    for (std::size_t i = 0; i < ki.g.size(); ++i) b.push_back(rng.range(-3, 3));
    GroupElement lhs = grp.identity();
    for (std::size_t i = 0; i < ki.g.size(); ++i)
      lhs = grp.mul(lhs, grp.pow(ki.g[i], b[i]));
    GroupElement padded = grp.identity();
    for (int i = 1; i <= mi.n; ++i) {
      padded = grp.mul(padded, grp.element(mi.pres.zero(), b[i - 1]));
      padded = grp.mul(padded, grp.element(mi.f[i], 0));
    }
    padded = grp.mul(padded, grp.element(mi.pres.zero(), b.back()));
    GroupElement rhs_form = grp.mul(grp.element(mi.f[0], 0), grp.identity());
    // (0,b1) h1 ... hn (0,b_{n+1}) = h0  iff  g1^{b1}...g_{n+1}^{b_{n+1}} = g
    REQUIRE(grp.equal(lhs, ki.target) ==
            grp.equal(padded, rhs_form));
  }
}
