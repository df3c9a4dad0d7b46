#include "doctest.h"

#include "trmc/algebra/unipoly.hpp"

using namespace trmc;

namespace {

MultiPoly poly(const Vars& v, std::initializer_list<std::pair<Exponent, long>> terms) {
    MultiPoly p(v);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

// E_A of the Hirzebruch surface fixture, six monomials in a1..a4.
MultiPoly f1_principal_determinant() {
    auto a = indexed_vars("a", 4);
    return poly(a, {{{2, 2, 2, 2}, 1},
                    {{3, 2, 3, 1}, 1},
                    {{2, 3, 2, 3}, -8},
                    {{2, 4, 2, 4}, 16},
                    {{3, 3, 3, 2}, -36},
                    {{4, 3, 4, 1}, -27}});
}

}  // namespace

TEST_CASE("difference of squares") {
    auto y = indexed_vars("y", 1);
    auto p = poly(y, {{{0}, 1}, {{1}, 1}});
    auto q = poly(y, {{{0}, 1}, {{1}, -1}});
    CHECK(p * q == poly(y, {{{0}, 1}, {{2}, -1}}));
    CHECK(poly_arith(p, q, PolyOp::Add) == MultiPoly::constant(y, 2));
}

TEST_CASE("evaluation") {
    auto t = indexed_vars("t", 2);
    auto f = poly(t, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}});
    CHECK(f.eval({1, 1}) == -1);

    // at the all-ones point every monomial is 1, so the value is the coefficient sum
    auto ea = f1_principal_determinant();
    Rational coefficient_sum = 0;
    for (const auto& [e, c] : ea.terms()) coefficient_sum += c;
    CHECK(ea.eval({1, 1, 1, 1}) == coefficient_sum);
    CHECK(ea.eval({1, 1, 1, 1}) == -53);
}

TEST_CASE("Laurent evaluation at zero is an error") {
    auto t = indexed_vars("t", 1);
    auto f = poly(t, {{{-1}, 1}});
    CHECK_THROWS_AS(f.eval({0}), ArithmeticError);
    CHECK(f.eval({Rational(1, 3)}) == 3);
}

TEST_CASE("series inverse") {
    auto y = indexed_vars("y", 1);
    SUBCASE("geometric series") {
        auto s = TruncatedSeries::from_poly(poly(y, {{{0}, 1}, {{1}, -1}}), 3);
        auto inv = series_inverse(s);
        CHECK(inv.to_poly() == poly(y, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}}));
    }
    SUBCASE("quintic denominator") {
        auto s = TruncatedSeries::from_poly(poly(y, {{{0}, 1}, {{1}, -3125}}), 2);
        CHECK(series_inverse(s).to_poly() == poly(y, {{{0}, 1}, {{1}, 3125}, {{2}, 9765625}}));
    }
    SUBCASE("two variables, first order by hand") {
        auto y2 = indexed_vars("y", 2);
        auto s = TruncatedSeries::from_poly(poly(y2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, -8}}), 1);
        CHECK(series_inverse(s).to_poly() == poly(y2, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, 8}}));
    }
    SUBCASE("zero constant term") {
        auto s = TruncatedSeries::from_poly(poly(y, {{{1}, 1}}), 2);
        CHECK_THROWS_AS(series_inverse(s), ArithmeticError);
    }
}

TEST_CASE("Laurent expansion at a vertex") {
    auto y = indexed_vars("y", 2);
    SUBCASE("Hirzebruch surface, Q = x2^2") {
        auto num = poly(y, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 4}, {{1, 1}, 3}});
        auto den = poly(y, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, -8}, {{0, 2}, 16}, {{1, 1}, -36}, {{2, 1}, -27}});
        auto s = laurent_expand_at_vertex(RationalFunctionMV(num, den), 2);
        CHECK(s.to_poly() == poly(y, {{{0, 0}, 1}, {{0, 1}, 12}, {{1, 1}, 27}, {{0, 2}, 80}}));
    }
    SUBCASE("flop residue in u coordinates") {
        auto num = poly(y, {{{0, 0}, 1}, {{1, 0}, -27}, {{1, 1}, -81}});
        auto one_minus_u2 = poly(y, {{{0, 0}, 1}, {{0, 1}, -1}});
        auto rest = poly(y, {{{0, 0}, 1}, {{1, 0}, -54}, {{2, 0}, 729}, {{1, 1}, -54}, {{2, 1}, -1458}, {{2, 2}, 729}});
        auto s = laurent_expand_at_vertex(RationalFunctionMV(num, one_minus_u2 * rest), 2);
        CHECK(s.to_poly() == poly(y, {{{0, 0}, 1}, {{1, 0}, 27}, {{0, 1}, 1}, {{2, 0}, 729}, {{0, 2}, 1}}));
    }
    SUBCASE("1/(1-y)") {
        auto y1 = indexed_vars("y", 1);
        auto s = laurent_expand_at_vertex(RationalFunctionMV(MultiPoly::constant(y1, 1), poly(y1, {{{0}, 1}, {{1}, -1}})), 4);
        CHECK(s.to_poly() == poly(y1, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}}));
    }
    SUBCASE("no constant term in the denominator") {
        auto r = RationalFunctionMV(MultiPoly::constant(y, 1), poly(y, {{{1, 0}, 1}}));
        CHECK_THROWS_AS(laurent_expand_at_vertex(r, 2), ArithmeticError);
    }
}

TEST_CASE("monomial substitution to Mori coordinates") {
    auto a = indexed_vars("a", 4);
    auto y = indexed_vars("y", 2);
    IntegerMatrix gens = to_integer_matrix({{1, 0, 1, -1}, {0, 1, 0, 1}});
    auto one = MultiPoly::constant(a, 1);
    SUBCASE("a1 a3 / a4 -> y1") {
        auto r = RationalFunctionMV(poly(a, {{{1, 0, 1, -1}, 1}}), one);
        auto s = monomial_substitution(r, gens, y);
        CHECK(s.function.num() == poly(y, {{{1, 0}, 1}}));
        CHECK(s.function.den() == MultiPoly::constant(y, 1));
    }
    SUBCASE("a2 a4 -> y2") {
        auto r = RationalFunctionMV(poly(a, {{{0, 1, 0, 1}, 1}}), one);
        CHECK(monomial_substitution(r, gens, y).function.num() == poly(y, {{{0, 1}, 1}}));
    }
    SUBCASE("identity generators leave the function unchanged") {
        auto b = indexed_vars("b", 4);
        IntegerMatrix id = IntegerMatrix::identity(4);
        auto ea = f1_principal_determinant();
        auto s = monomial_substitution(RationalFunctionMV(one, ea), id, b);
        CHECK(s.function.den() == ea.renamed(b));
        CHECK(s.cleared == Exponent{0, 0, 0, 0});
    }
    SUBCASE("E_A divided by its vertex monomial") {
        auto vertex = poly(a, {{{2, 2, 2, 2}, 1}});
        auto s = monomial_substitution(RationalFunctionMV(vertex, f1_principal_determinant()), gens, y);
        CHECK(s.cleared == Exponent{2, 2, 2, 2});
        CHECK(s.function.num() == MultiPoly::constant(y, 1));
        CHECK(s.function.den() ==
              poly(y, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, -8}, {{0, 2}, 16}, {{1, 1}, -36}, {{2, 1}, -27}}));
    }
    SUBCASE("inexpressible exponent") {
        auto r = RationalFunctionMV(poly(a, {{{1, 0, 0, 0}, 1}}), one);
        CHECK_THROWS_AS(monomial_substitution(r, gens, y), InputError);
    }
}

TEST_CASE("rational reconstruction") {
    SUBCASE("1/(1-u) from six samples") {
        std::vector<Sample> s;
        for (int q : {2, 3, 5, 7, 11, 13}) {
            Rational u(1, q);
            s.emplace_back(u, 1 / (1 - u));
        }
        auto f = rational_reconstruct(s, 1);
        CHECK(f == UniRationalFunction(UniPoly({Rational(1)}), UniPoly({Rational(1), Rational(-1)})));
    }
    SUBCASE("quintic Yukawa") {
        std::vector<Sample> s;
        for (int q : {11, 13, 17, 19, 23, 29, 31}) {
            Rational u(1, q);
            s.emplace_back(u, Rational(5) / (1 - 3125 * u));
        }
        auto f = rational_reconstruct(s, 1);
        CHECK(f.eval(Rational(1, 2)) == Rational(5) / (1 - Rational(3125, 2)));
        CHECK(f.num() == UniPoly({Rational(-1, 625)}));
        CHECK(f.den() == UniPoly({Rational(-1, 3125), Rational(1)}));
    }
    SUBCASE("non-rational data is rejected") {
        std::vector<Sample> s;
        for (int q = 11; q < 60; ++q) s.emplace_back(Rational(1, q), Rational(ipow(2, q)));
        CHECK_THROWS_AS(rational_reconstruct(s, 1, 16), ReconstructionError);
    }
}

TEST_CASE("Smith normal form") {
    SUBCASE("identity") {
        auto sf = smith_normal_form(IntegerMatrix::identity(2));
        CHECK(sf.D == IntegerMatrix::identity(2));
    }
    SUBCASE("Hirzebruch ray matrix") {
        IntegerMatrix rays = to_integer_matrix({{-1, 1}, {0, -1}, {1, 0}, {0, 1}});
        auto sf = smith_normal_form(rays);
        // product of elementary divisors equals the gcd of the maximal minors
        Integer g = 0;
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j) {
                Integer minor = rays(i, 0) * rays(j, 1) - rays(i, 1) * rays(j, 0);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
            }
        REQUIRE(sf.divisors.size() == 2);
        CHECK(sf.divisors[0] * sf.divisors[1] == g);
        CHECK(sf.divisors == std::vector<Integer>{1, 1});
        CHECK(sf.U * rays * sf.V == sf.D);
        CHECK(rays.rows() - sf.rank() == 2);
    }
    SUBCASE("1x1") {
        auto sf = smith_normal_form(to_integer_matrix({{2}}));
        CHECK(sf.D == to_integer_matrix({{2}}));
    }
}

TEST_CASE("integer kernel") {
    // weighted projective relation
    IntegerMatrix m = to_integer_matrix({{-1, 1, 0, 0, 0}, {-2, 0, 1, 0, 0}, {-2, 0, 0, 1, 0}, {-2, 0, 0, 0, 1}});
    auto k = integer_kernel(m);
    REQUIRE(k.rows() == 1);
    auto v = k.row(0);
    if (v[0] < 0)
        for (auto& x : v) x = -x;
    CHECK(v == std::vector<Integer>{1, 1, 2, 2, 2});
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational(" -7 ") == -7);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("generalized binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-1, 3) == -1);   // (-1)(-2)(-3)/6
    CHECK(binomial(-2, 2) == 3);    // C(-m, n) = (-1)^n C(m+n-1, n)
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(2, 5) == 0);
}
