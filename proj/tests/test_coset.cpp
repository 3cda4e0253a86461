#include "abcg/coset.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace abcg;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
LaurentVec V1(const char* s) {
  return LaurentVec(std::vector<LaurentPoly>{P(s)});
}

}  // namespace

TEST_CASE("worked small instances") {
  AbcGroup wr = AbcGroup::wreath_zz();
  SUBCASE("case 1") {
    std::vector<GroupElement> g{wr.element(V1("1"), 0)};
    std::vector<GroupElement> h{wr.element(V1("X^1"), 0)};
    GroupElement t = wr.element(V1("X^0 + X^1"), 0);
    CosetResult r = coset_intersect(wr, g, h, t);
    REQUIRE(r.nonempty());
    REQUIRE(r.witness.has_value());
    CHECK(verify_coset_witness(wr, g, h, t, *r.witness));
  }
  SUBCASE("case 2, empty") {
    std::vector<GroupElement> g{wr.element(V1("0"), 1)};
    std::vector<GroupElement> h{wr.element(V1("1"), 0)};
    GroupElement t = wr.element(V1("3"), 5);
    CosetResult r = coset_intersect(wr, g, h, t);
    CHECK(r.verdict == CosetResult::Verdict::Empty);
    CHECK(!oracle::bfs_coset_nonempty(wr, g, h, t, 6, 12));
  }
  SUBCASE("case 3") {
    std::vector<GroupElement> g{wr.element(V1("0"), 2)};
    std::vector<GroupElement> h{wr.element(V1("0"), 3)};
    GroupElement t = wr.element(V1("0"), 1);
    CosetResult r = coset_intersect(wr, g, h, t);
    REQUIRE(r.nonempty());
    REQUIRE(r.witness.has_value());
    CHECK(verify_coset_witness(wr, g, h, t, *r.witness));
  }
  SUBCASE("identity translate") {
    std::vector<GroupElement> g{wr.element(V1("X^3"), 0)};
    std::vector<GroupElement> h{wr.element(V1("0"), 2)};
    CosetResult r = coset_intersect(wr, g, h, wr.identity());
    CHECK(r.nonempty());
  }
}

TEST_CASE("case 3 data follows the derivation") {
  AbcGroup wr = AbcGroup::wreath_zz();
  std::vector<GroupElement> g{wr.element(V1("X^1"), 4),
                              wr.element(V1("X^0 + X^1"), -6)};
  std::vector<GroupElement> h{wr.element(V1("2"), 3)};
  GroupElement t = wr.element(V1("X^2"), 1);
  SubgroupStructure sg = subgroup_structure(wr, g);
  SubgroupStructure sh = subgroup_structure(wr, h);
  auto data = make_case3_data(wr, sg, sh, t);
  REQUIRE(data.has_value());
  CHECK(data->d_g == 2);
  CHECK(data->d_h == 3);
  CHECK(data->d == 6);
  CHECK(data->z_g % 2 == 0);
  CHECK(data->z_h % 3 == 0);
  CHECK(data->z_g == data->z_h + 1);
  // a'' - a' relation: a'' = a' - (X^d - 1) * t(0) is checked via the module
  // identity used in the solver; here spot-check the explicit formulas.
  const LaurentPoly geom_g = geometric_sum(2, 3);
  const LaurentPoly geom_h = geometric_sum(3, 2);
  CHECK(data->a_prime ==
        ((geom_g * sg.pivot->a) - (geom_h * sh.pivot->a)).shifted(data->z_g));
  CHECK(data->a_dprime ==
        geom_g * sg.pivot->a - (geom_h * sh.pivot->a).shifted(1) +
            (P("X^6") - P("X^0")) * t.a);

  // no integer solution: 2m = 4n + 1
  std::vector<GroupElement> h2{wr.element(V1("0"), 4)};
  SubgroupStructure sh2 = subgroup_structure(wr, h2);
  CHECK(!make_case3_data(wr, sg, sh2, t).has_value());
}

TEST_CASE("zero-divisor translate is not mistaken for a member") {
  // In A = Z[X^pm]/(X-1) the subgroups <(0,1)> and the coset (1,0)<(0,1)>
  // are disjoint although (X-1) kills everything.
  ModulePresentation a(1, {V1("X^1 - X^0")});
  AbcGroup grp(a);
  std::vector<GroupElement> g{grp.element(V1("0"), 1)};
  std::vector<GroupElement> h{grp.element(V1("0"), 1)};
  GroupElement t = grp.element(V1("1"), 0);
  CosetResult r = coset_intersect(grp, g, h, t);
  CHECK(r.verdict == CosetResult::Verdict::Empty);
  CHECK(!oracle::bfs_coset_nonempty(grp, g, h, t, 6, 12));

  // and the same shape with a genuine solution is still found
  GroupElement t2 = grp.element(V1("0"), 2);
  CosetResult r2 = coset_intersect(grp, g, h, t2);
  REQUIRE(r2.nonempty());
  CHECK(verify_coset_witness(grp, g, h, t2, *r2.witness));
}

namespace {

GroupElement random_fin_elem(const AbcGroup& grp, oracle::Rng& rng,
                             std::int64_t zlo, std::int64_t zhi) {
  return grp.element(oracle::random_vec(rng, 1, 2, 0, 2, 0, 1),
                     rng.range(zlo, zhi));
}

}  // namespace

TEST_CASE("agreement with BFS enumeration on a finite module") {
  ModulePresentation fin(1, {V1("2"), V1("X^3 - X^0")});
  AbcGroup grp(fin);
  oracle::Rng rng(71);
  int nonempty_seen = 0, empty_seen = 0;
  for (int inst = 0; inst < 50; ++inst) {
    std::vector<GroupElement> g, h;
    const int kg = static_cast<int>(rng.range(1, 2));
    const int kh = static_cast<int>(rng.range(1, 2));
    for (int i = 0; i < kg; ++i) g.push_back(random_fin_elem(grp, rng, -3, 3));
    for (int i = 0; i < kh; ++i) h.push_back(random_fin_elem(grp, rng, -3, 3));
    GroupElement t = random_fin_elem(grp, rng, -3, 3);
    CosetResult r = coset_intersect(grp, g, h, t);
    REQUIRE(r.verdict != CosetResult::Verdict::Unknown);
    const bool oracle_says = oracle::bfs_coset_nonempty(grp, g, h, t, 6, 12);
    REQUIRE(r.nonempty() == oracle_says);
    if (r.nonempty()) {
      ++nonempty_seen;
      if (r.witness) REQUIRE(verify_coset_witness(grp, g, h, t, *r.witness));
    } else {
      ++empty_seen;
    }
  }
  CHECK(nonempty_seen > 0);
  CHECK(empty_seen > 0);
}

TEST_CASE("verdict symmetry under inversion") {
  ModulePresentation fin(1, {V1("2"), V1("X^3 - X^0")});
  AbcGroup grp(fin);
  oracle::Rng rng(72);
  for (int inst = 0; inst < 30; ++inst) {
    std::vector<GroupElement> g{random_fin_elem(grp, rng, -3, 3)};
    std::vector<GroupElement> h{random_fin_elem(grp, rng, -3, 3),
                                random_fin_elem(grp, rng, -3, 3)};
    GroupElement t = random_fin_elem(grp, rng, -3, 3);
    CosetResult r1 = coset_intersect(grp, g, h, t);
    CosetResult r2 = coset_intersect(grp, h, g, grp.inv(t));
    REQUIRE(r1.verdict == r2.verdict);
  }
}

TEST_CASE("pivot independence of the case-3 verdict") {
  ModulePresentation fin(1, {V1("2"), V1("X^3 - X^0")});
  AbcGroup grp(fin);
  oracle::Rng rng(73);
  int perturbed_count = 0;
  for (int inst = 0; inst < 20 && perturbed_count < 10; ++inst) {
    std::vector<GroupElement> g{
        grp.element(oracle::random_vec(rng, 1, 2, 0, 2, 0, 1), 2),
        grp.element(oracle::random_vec(rng, 1, 2, 0, 2, 0, 1), 0)};
    std::vector<GroupElement> h{
        grp.element(oracle::random_vec(rng, 1, 2, 0, 2, 0, 1), 3)};
    GroupElement t = grp.element(oracle::random_vec(rng, 1, 2, 0, 2, 0, 1),
                                 rng.range(-2, 2));
    SubgroupStructure sg = subgroup_structure(grp, g);
    SubgroupStructure sh = subgroup_structure(grp, h);
    REQUIRE(!sg.all_in_a);
    REQUIRE(!sh.all_in_a);
    CosetResult base = coset_intersect_case3(grp, sg, sh, t);

    // any (a, d) in <G> works as the pivot: shift it by an element of
    // <G> ∩ A (a Z[X^{±d}]-combination of the S-generators) and re-run
    if (sg.s_gens.empty()) continue;
    SubgroupStructure sg2 = sg;
    LaurentPoly scalar;
    for (std::int64_t e = -1; e <= 1; ++e)
      scalar += LaurentPoly(rng.range(-2, 2), e * sg.d);
    if (scalar.is_zero()) scalar = LaurentPoly(1);
    LaurentVec shift_elem = scalar * sg.s_gens[0];
    sg2.pivot = grp.mul(grp.element(shift_elem, 0), *sg.pivot);
    CosetResult perturbed = coset_intersect_case3(grp, sg2, sh, t);
    REQUIRE(base.verdict == perturbed.verdict);
    ++perturbed_count;
  }
  CHECK(perturbed_count >= 10);
}
