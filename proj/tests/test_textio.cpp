#include "abcg/textio.hpp"

#include "doctest.h"
#include "abcg/errors.hpp"

using namespace abcg;

TEST_CASE("system text round trip") {
  EquationChain chain = flatten_polynomial(
      {{Int(1), {3, 0}}, {Int(2), {1, 1}}, {Int(7), {0, 0}}}, 2);
  CompiledSystem cs = compile_system(chain, 11);
  std::string text = system_to_text(cs.sys);
  DivisibilitySystem back = system_from_text(text);
  REQUIRE(back.n == cs.sys.n);
  REQUIRE(back.rows.size() == cs.sys.rows.size());
  for (std::size_t j = 0; j < back.rows.size(); ++j) {
    REQUIRE(back.rows[j].p == cs.sys.rows[j].p);
    REQUIRE(back.rows[j].rhs == cs.sys.rows[j].rhs);
    REQUIRE(back.rows[j].coeffs == cs.sys.rows[j].coeffs);
  }
  // byte-stable: printing the reparse reproduces the text
  CHECK(system_to_text(back) == text);
}

TEST_CASE("system parse diagnostics") {
  CHECK_THROWS_AS(system_from_text("garbage\n"), ParseError);
  CHECK_THROWS_AS(system_from_text("system n=2 rows=1\nrow (X-1)^5 ; rhs: 0\n"),
                  ParseError);
  CHECK_THROWS_AS(
      system_from_text("system n=2 rows=1\nrow 0 ; 3: X^0 ; rhs: 0\n"),
      ParseError);
  CHECK_THROWS_AS(system_from_text("system n=2 rows=1\nrow 0 ; 1: X^0\n"),
                  ParseError);
  try {
    system_from_text("system n=1 rows=1\nrow 0 ; 1: X^^ ; rhs: 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}
