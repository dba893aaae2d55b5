#include <doctest.h>

#include "support.hpp"

using namespace arbor;
using arbor::testing::P;

TEST_SUITE("algebra") {
  TEST_CASE("groups") {
    const auto z3 = FiniteGroup::cyclic(3);
    CHECK(z3->mul(1, 2) == 0);
    CHECK(z3->inverse(1) == 2);
    CHECK(z3->label(2) == "g^2");
    const auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3->order() == 6);
    CHECK_FALSE(s3->is_abelian());
    for (FiniteGroup::Element a = 0; a < 6; ++a) CHECK(s3->mul(a, s3->inverse(a)) == 0);
    const auto klein = FiniteGroup::direct_product(*FiniteGroup::cyclic(2), *FiniteGroup::cyclic(2));
    CHECK(klein->order() == 4);
    CHECK(klein->is_abelian());
    for (FiniteGroup::Element a = 0; a < 4; ++a) CHECK(klein->mul(a, a) == 0);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), GroupAxiomError);
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), GroupAxiomError);
    // Latin square with identity that is not associative.
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    GroupAxiomError);
  }

  TEST_CASE("reduced group algebra products") {
    const auto z3 = FiniteGroup::cyclic(3);
    VarNames n;
    const IntPoly one = IntPoly::constant(1);
    const ReducedGA g = ReducedGA::element(z3, 1), g2 = ReducedGA::element(z3, 2);
    const ReducedGA prod = g * g2;
    CHECK(prod == ReducedGA::scalar(z3, one));
    CHECK(prod.coeff(0).is_zero());
    CHECK(prod.coeff(1) == IntPoly::constant(-1));
    CHECK(prod.coeff(2) == IntPoly::constant(-1));
    const ReducedGA x = ReducedGA::element(z3, 2, P("a + b", n));
    CHECK(ReducedGA::scalar(z3, one) * x == x);
    const ReducedGA u = ReducedGA::scalar(z3, one) - g, v = ReducedGA::scalar(z3, one) - g2;
    CHECK(u * v == ReducedGA::scalar(z3, IntPoly::constant(3)));
    CHECK_THROWS_AS(g * ReducedGA::element(FiniteGroup::cyclic(4), 1), GroupMismatch);
  }

  TEST_CASE("reduced regular representation") {
    const auto z2 = FiniteGroup::cyclic(2);
    VarNames n;
    const auto m0 = reduced_regular_representation(ReducedGA(z2));
    CHECK(m0.size() == 1);
    CHECK(m0(0, 0).is_zero());
    const auto m = reduced_regular_representation(ReducedGA::element(z2, 1, P("c", n)));
    CHECK(m(0, 0) == P("-c", n));

    const auto z3 = FiniteGroup::cyclic(3);
    const ReducedGA x = ReducedGA::scalar(z3, P("a + b", n)) - ReducedGA::element(z3, 1, P("a", n));
    CHECK(det_fraction_free(reduced_regular_representation(x)) == P("3*a^2 + 3*a*b + b^2", n));
    CHECK(field_norm(embed(x)) == P("3*a^2 + 3*a*b + b^2", n));
  }

  TEST_CASE("representation determinant equals the norm") {
    Rng rng(21);
    for (unsigned p : {2u, 3u, 5u}) {
      const auto G = FiniteGroup::cyclic(p);
      for (int i = 0; i < 40; ++i) {
        const ReducedGA x = testing::random_group_element(rng, G);
        REQUIRE(det_fraction_free(reduced_regular_representation(x)) == field_norm(embed(x)));
        REQUIRE(det_fraction_free(reduced_regular_representation(x, MultiplicationSide::left)) ==
                field_norm(embed(x)));
      }
    }
  }

  TEST_CASE("representation is multiplicative") {
    Rng rng(22);
    for (const char* fam : {"z3", "z4", "z2xz2", "s3"}) {
      const auto G = std::get<GroupPtr>(family_context(fam));
      for (int i = 0; i < 10; ++i) {
        const ReducedGA x = testing::random_group_element(rng, G), y = testing::random_group_element(rng, G);
        // Row-vector convention: right multiplication composes as x then y.
        REQUIRE(reduced_regular_representation(x * y) ==
                reduced_regular_representation(x) * reduced_regular_representation(y));
        REQUIRE(reduced_regular_representation(x * y, MultiplicationSide::left) ==
                reduced_regular_representation(y, MultiplicationSide::left) *
                    reduced_regular_representation(x, MultiplicationSide::left));
      }
    }
  }

  TEST_CASE("cyclotomic arithmetic and conjugates") {
    VarNames n;
    const Cyclotomic one = Cyclotomic::scalar(3, IntPoly::constant(1));
    const Cyclotomic z = Cyclotomic::zeta_power(3, 1);
    CHECK(z * z * z == one);
    CHECK(galois_conjugate(one - z, 2) == one - z * z);
    CHECK_THROWS_AS(galois_conjugate(z, 0), IndexOutOfRange);
    CHECK_THROWS_AS(galois_conjugate(z, 3), IndexOutOfRange);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      const Cyclotomic o = Cyclotomic::scalar(p, IntPoly::constant(1));
      CHECK(field_norm(o - Cyclotomic::zeta_power(p, 1)) == IntPoly::constant(p));
      const IntPoly r = P("2*a + 1", n);
      IntPoly pow = IntPoly::constant(1);
      for (unsigned i = 1; i < p; ++i) pow *= r;
      CHECK(field_norm(Cyclotomic::scalar(p, r)) == pow);
    }
    CHECK(Cyclotomic::zeta_power(2, 1) == Cyclotomic::scalar(2, IntPoly::constant(-1)));
  }

  TEST_CASE("norm is multiplicative and conjugation composes") {
    Rng rng(23);
    for (unsigned p : {2u, 3u, 5u}) {
      for (int i = 0; i < 25; ++i) {
        const Cyclotomic x = testing::random_cyclotomic(rng, p), y = testing::random_cyclotomic(rng, p);
        REQUIRE(field_norm(x * y) == field_norm(x) * field_norm(y));
        for (unsigned a = 1; a < p; ++a)
          for (unsigned b = 1; b < p; ++b)
            REQUIRE(galois_conjugate(galois_conjugate(x, a), b) == galois_conjugate(x, a * b % p));
        if (!y.is_zero()) REQUIRE(exact_div(x * y, y) == x);
      }
    }
  }

  TEST_CASE("minors") {
    const VoltageGraph g = z3_triangle();
    VarNames n = g.names();
    const PolyMatrix L = laplacian(g);
    const PolyMatrix m = L.minor(1, 1);
    CHECK(m.size() == 2);
    CHECK(m(0, 0) == P("b", n));
    CHECK(m(1, 0) == P("-d", n));
    CHECK(m(1, 1) == P("d + e", n));
    const PolyMatrix one(1, IntPoly::constant(7));
    CHECK(det_fraction_free(one.minor(0, 0)) == IntPoly::constant(1));
    CHECK(PolyMatrix::identity(3, IntPoly{}).minor(0, 0) == PolyMatrix::identity(2, IntPoly{}));
    CHECK_THROWS_AS(L.minor(3, 0), IndexOutOfRange);
  }

  TEST_CASE("Bareiss agrees with the Leibniz expansion") {
    Rng rng(24);
    for (int i = 0; i < 240; ++i) {
      const std::size_t dim = 1 + i % 5;
      const PolyMatrix m = testing::random_matrix(rng, dim);
      const IntPoly expected = testing::leibniz(m);
      REQUIRE(det_bareiss(m) == expected);
      REQUIRE(det_cofactor(m) == expected);
    }
    VarNames n;
    CHECK(det_fraction_free(PolyMatrix::identity(4, IntPoly{})) == IntPoly::constant(1));
    PolyMatrix singular(3, IntPoly{});
    singular(0, 1) = P("a", n);
    singular(1, 2) = P("b", n);
    CHECK(det_fraction_free(singular).is_zero());
  }

  TEST_CASE("Bareiss over cyclotomic entries") {
    Rng rng(25);
    for (int i = 0; i < 30; ++i) {
      RingMatrix<Cyclotomic> m(3, Cyclotomic(3));
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = testing::random_cyclotomic(rng, 3);
      REQUIRE(det_bareiss(m) == testing::leibniz(m));
    }
  }

  TEST_CASE("group algebra determinants") {
    const VoltageGraph g = z3_triangle();
    const GroupPtr& G = g.group();
    VarNames n = g.names();
    const ReducedGA one = ReducedGA::scalar(G, IntPoly::constant(1));
    const ReducedGA z = ReducedGA::element(G, 1), z2 = ReducedGA::element(G, 2);
    auto s = [&](const char* t) { return ReducedGA::scalar(G, P(t, n)); };
    const ReducedGA want = (one - z) * s("b*c*d") + (one - z) * s("a*c*d") + (one - z2) * s("b*c*e") +
                           (one - z) * (one - z2) * s("a*c*e");
    CHECK(det_group_algebra(voltage_laplacian(g)) == want);

    RingMatrix<ReducedGA> diag(2, ReducedGA(G));
    diag(0, 0) = s("a") - z;
    diag(1, 1) = s("b") + z2;
    CHECK(det_group_algebra(diag) == diag(0, 0) * diag(1, 1));

    const VoltageGraph trivial = to_permutation_voltages(g);
    VoltageGraph flat(G);
    for (std::size_t v = 0; v < 3; ++v) flat.add_vertex(g.label(v));
    flat.set_names(g.names());
    for (const Edge& e : g.edges()) flat.add_edge_with_weight(e.source, e.target, e.weight, FiniteGroup::Element{0});
    CHECK(det_group_algebra(voltage_laplacian(flat)).is_zero());
    CHECK(trivial.sheet_count() == 3);

    RingMatrix<ReducedGA> nonabelian(1, ReducedGA(FiniteGroup::symmetric(3)));
    CHECK_THROWS_AS(det_group_algebra(nonabelian), NonAbelianGroup);
  }
}
