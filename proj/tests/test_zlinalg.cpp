#include "abcg/zlinalg.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace abcg;

namespace {

IntMatrix mat(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(conv);
}

}  // namespace

TEST_CASE("hermite normal form on fixed examples") {
  auto [h1, u1] = hermite_normal_form(IntMatrix::identity(3));
  CHECK(h1 == IntMatrix::identity(3));
  CHECK(u1 == IntMatrix::identity(3));

  IntMatrix m2 = mat({{4}, {-6}});
  auto [h2, u2] = hermite_normal_form(m2);
  CHECK(h2 == mat({{2}, {0}}));
  CHECK(u2 * m2 == h2);

  IntMatrix m3 = mat({{2, 0}, {0, 3}});
  auto [h3, u3] = hermite_normal_form(m3);
  CHECK(h3 == m3);
}

TEST_CASE("hermite normal form properties on random matrices") {
  oracle::Rng rng(21);
  for (int it = 0; it < 200; ++it) {
    int r = static_cast<int>(rng.range(1, 4));
    int c = static_cast<int>(rng.range(1, 4));
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = rng.range(-9, 9);
    auto [h, u] = hermite_normal_form(m);
    REQUIRE(u * m == h);
    Int det = unimodular_det_sign(u);
    REQUIRE((det == 1 || det == -1));
    auto [h2, u2] = hermite_normal_form(h);
    REQUIRE(h2 == h);  // idempotence
  }
}

TEST_CASE("integer kernel") {
  CHECK(integer_kernel(mat({{4, -6}})) == mat({{3, 2}}));
  CHECK(integer_kernel(mat({{1}})).rows() == 0);
  CHECK(integer_kernel(mat({{0, 0}})) == IntMatrix::identity(2));
}

TEST_CASE("integer kernel vs brute force") {
  oracle::Rng rng(22);
  for (int it = 0; it < 100; ++it) {
    int r = static_cast<int>(rng.range(1, 2));
    int c = static_cast<int>(rng.range(1, 3));
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = rng.range(-4, 4);
    IntMatrix ker = integer_kernel(m);
    for (int kr = 0; kr < ker.rows(); ++kr)
      for (int i = 0; i < r; ++i) {
        Int dot = 0;
        for (int j = 0; j < c; ++j) dot += m(i, j) * ker(kr, j);
        REQUIRE(dot == 0);
      }
    // every small brute-force kernel vector lies in the computed lattice
    std::vector<Int> v(c, -5);
    while (true) {
      bool in_kernel = true;
      for (int i = 0; i < r && in_kernel; ++i) {
        Int dot = 0;
        for (int j = 0; j < c; ++j) dot += m(i, j) * v[j];
        in_kernel = dot == 0;
      }
      if (in_kernel) REQUIRE(lattice_contains(ker, v));
      int p = 0;
      while (p < c && v[p] == 5) v[p++] = -5;
      if (p == c) break;
      ++v[p];
    }
  }
}

TEST_CASE("affine solver") {
  auto s1 = solve_affine(2, 3, 1);
  REQUIRE(s1.has_value());
  CHECK(s1->first * 2 == s1->second * 3 + 1);
  CHECK(!solve_affine(2, 4, 1).has_value());
  auto s3 = solve_affine(1, 1, 0);
  REQUIRE(s3.has_value());
  CHECK(s3->first == 0);
  CHECK(s3->second == 0);
}

TEST_CASE("last-coordinate-one test") {
  CHECK(lattice_hits_last_one(mat({{3, 1}})));
  CHECK(!lattice_hits_last_one(mat({{1, 2}})));
  CHECK(!lattice_hits_last_one(IntMatrix(0, 2)));

  auto v = lattice_vector_with_last_one(mat({{1, 2}, {0, 3}}));
  REQUIRE(v.has_value());
  CHECK((*v)[1] == 1);
  CHECK(lattice_contains(lattice_basis(mat({{1, 2}, {0, 3}})), *v));
}

TEST_CASE("bezout coefficients reduce into the canonical box") {
  std::vector<Int> n = bezout_coefficients({Int(4), Int(-6)});
  REQUIRE(n.size() == 2);
  CHECK(n[0] * 4 + n[1] * (-6) == 2);
  CHECK(n == std::vector<Int>{2, 1});

  std::vector<Int> m = bezout_coefficients({Int(6), Int(10), Int(15)});
  CHECK(m[0] * 6 + m[1] * 10 + m[2] * 15 == 1);
}
