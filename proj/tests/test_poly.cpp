#include <doctest.h>

#include "support.hpp"

using namespace arbor;
using arbor::testing::P;

TEST_SUITE("poly") {
  TEST_CASE("sums and products print canonically") {
    VarNames n;
    for (const char* v : {"a", "b", "d", "e"}) n.intern(v);
    CHECK(to_string(P("b*d", n) + P("b*e", n), n) == "b*d + b*e");
    CHECK(to_string(P("b", n) * (P("d", n) + P("e", n)), n) == "b*d + b*e");
    CHECK((P("a", n) + P("-a", n)).is_zero());
    CHECK(to_string(IntPoly{}, n) == "0");
    const IntPoly p = P("3*a^2 - 2*a*b + 7", n);
    CHECK(p + IntPoly{} == p);
    CHECK(p * IntPoly::constant(1) == p);
    CHECK(to_string(p, n) == "3*a^2 - 2*a*b + 7");
    CHECK(to_string(P("-x", n), n) == "-x");
  }

  TEST_CASE("graded order puts higher degree first, then smaller variables") {
    VarNames n;
    const IntPoly p = P("e + a*b + c^3 + a^2", n);
    CHECK(to_string(p, n) == "c^3 + a^2 + a*b + e");
  }

  TEST_CASE("product of two conjugate determinant factors") {
    VarNames n;
    for (const char* v : {"a", "b", "c", "d", "e"}) n.intern(v);
    // (x + y w)(x + y w^2) with w a cube root of unity, reduced, is x^2 - xy + y^2.
    const IntPoly x = P("b*c*d + a*c*d + 2*b*c*e + 3*a*c*e", n);
    const IntPoly y = P("-b*c*d - a*c*d + b*c*e", n);
    const IntPoly norm = x * x - x * y + y * y;
    CHECK(to_string(norm, n) ==
          "3*a^2*c^2*d^2 + 9*a^2*c^2*d*e + 9*a^2*c^2*e^2 + 6*a*b*c^2*d^2 + 12*a*b*c^2*d*e + 9*a*b*c^2*e^2 + "
          "3*b^2*c^2*d^2 + 3*b^2*c^2*d*e + 3*b^2*c^2*e^2");
    CHECK(homogeneous_degree(norm) == 6u);
    CHECK(eval_ones(norm) == 57);
  }

  TEST_CASE("exact division") {
    VarNames n;
    const IntPoly p = P("b*d + b*e", n);
    CHECK(exact_div(p, P("b", n)) == P("d + e", n));
    CHECK(exact_div(p, P("d + e", n)) == P("b", n));
    CHECK_THROWS_AS(exact_div(p, P("d", n)), NotDivisible);
    CHECK_THROWS_AS(exact_div(p, IntPoly{}), DivisionByZero);
    CHECK(exact_div(P("6*a + 3", n), Integer(3)) == P("2*a + 1", n));
    CHECK_THROWS_AS(exact_div(P("6*a + 4", n), Integer(3)), NotDivisible);
    CHECK(exact_div(IntPoly{}, P("a", n)).is_zero());
  }

  TEST_CASE("evaluation and homogeneity") {
    VarNames n;
    CHECK(eval_ones(P("b*d + b*e", n)) == 2);
    CHECK(eval_ones(IntPoly{}) == 0);
    CHECK(eval_ones(P("3*a^2*c^2*e^2", n)) == 3);
    CHECK(homogeneous_degree(P("b*d + b*e", n)) == 2u);
    CHECK_FALSE(homogeneous_degree(P("a + b*c", n)).has_value());
    CHECK(homogeneous_degree(IntPoly{}) == 0u);
  }

  TEST_CASE("parser") {
    VarNames n;
    n.intern("a");
    n.intern("b");
    CHECK(P("a^2 + 2*a*b + b^2", n) == P("a*a + a*b + b*a + b^2", n));
    CHECK(P("- a + b", n) == P("b - a", n));
    CHECK(P("2*3*a", n) == P("6*a", n));
    CHECK(P("a - a", n).is_zero());
    CHECK(P("123456789012345678901234567890*x", n).terms().front().coeff ==
          Integer("123456789012345678901234567890"));
    CHECK_THROWS_AS(P("a +", n), PolyParseError);
    CHECK_THROWS_AS(P("a ^ b", n), PolyParseError);
    CHECK_THROWS_AS(P("(a + b)", n), PolyParseError);
    CHECK_THROWS_AS(P("2 a", n), PolyParseError);
    CHECK_THROWS_AS(P("", n), PolyParseError);
  }

  TEST_CASE("ring axioms on random triples") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
      const IntPoly p = testing::random_poly(rng), q = testing::random_poly(rng), r = testing::random_poly(rng);
      REQUIRE((p + q) + r == p + (q + r));
      REQUIRE(p + q == q + p);
      REQUIRE((p * q) * r == p * (q * r));
      REQUIRE(p * q == q * p);
      REQUIRE(p * (q + r) == p * q + p * r);
      REQUIRE(p - p == IntPoly{});
    }
  }

  TEST_CASE("division undoes multiplication") {
    Rng rng(12);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
      const IntPoly p = testing::random_poly(rng), q = testing::random_poly(rng);
      if (q.is_zero()) continue;
      REQUIRE(exact_div(p * q, q) == p);
      ++checked;
    }
    CHECK(checked > 300);
  }

  TEST_CASE("text form round-trips") {
    Rng rng(13);
    VarNames n;
    for (const char* v : {"a", "b", "c", "d"}) n.intern(v);
    for (int i = 0; i < 300; ++i) {
      const IntPoly p = testing::random_poly(rng);
      VarNames copy = n;
      REQUIRE(parse_poly(to_string(p, n), copy) == p);
    }
  }
}
