#include "doctest.h"

#include "multizero/delta_basis.hpp"

#include "support/oracles.hpp"

using namespace multizero;

namespace {

std::vector<Rational> rat(std::vector<long> ints) {
    std::vector<Rational> c;
    c.reserve(ints.size());
    for (long v : ints) c.emplace_back(v);
    return c;
}

Polynomial nth_derivative(Polynomial p, int j) {
    for (int i = 0; i < j; ++i) p = p.derivative();
    return p;
}

}  // namespace

TEST_CASE("derivative rules of the built-in bases") {
    CHECK(r_value(DeltaBasisSpec::monomial(5), 2, 3) == Rational(6));
    CHECK(r_value(DeltaBasisSpec::laguerre_ratio(3, Rational(0)), 1, 1) == Rational(-1));
    CHECK(r_value(DeltaBasisSpec::krawtchouk_product(3), 0, 0) == Rational(1));
    CHECK_THROWS_AS(r_value(DeltaBasisSpec::monomial(2), 3, 0), Error);
    CHECK_THROWS_AS(r_value(DeltaBasisSpec::monomial(2), -1, 0), Error);
}

TEST_CASE("basis validation") {
    CHECK_THROWS_AS(DeltaBasisSpec::laguerre_ratio(3, Rational(-2)), Error);
    CHECK_NOTHROW(DeltaBasisSpec::laguerre_ratio(3, Rational(-4)));
    CHECK_NOTHROW(DeltaBasisSpec::laguerre_ratio(3, Rational(-5, 2)));
    // Custom rules must be degree-graded.
    std::vector<Polynomial> bad{Polynomial::constant(Rational(1)),
                                Polynomial::constant(Rational(2))};
    CHECK_THROWS_AS(DeltaBasisSpec::custom(1, Rational(0), bad), Error);
    CHECK_THROWS_AS(ExpansionVector(DeltaBasisSpec::monomial(2), rat({1, 2})), Error);
}

TEST_CASE("custom rules evaluate through the plug-in point") {
    // Falling-factorial rules make a custom copy of the monomial basis.
    std::vector<Polynomial> rules;
    Polynomial acc = Polynomial::constant(Rational(1));
    for (int j = 0; j <= 4; ++j) {
        rules.push_back(acc);
        acc = acc * Polynomial(std::vector<Rational>{Rational(-j), Rational(1)});
    }
    DeltaBasisSpec custom = DeltaBasisSpec::custom(4, Rational(1), rules);
    DeltaBasisSpec mono = DeltaBasisSpec::monomial(4);
    for (int j = 0; j <= 4; ++j)
        for (long i = 0; i <= 4; ++i)
            CHECK(r_value(custom, j, i) == r_value(mono, j, i));

    ExpansionVector v(custom, rat({1, -2, 1, 0, 0}));
    CHECK(multiplicity_from_coeffs(v) == 2);
    CHECK_THROWS_AS(expand_explicit(v), Error);
}

TEST_CASE("derivative vectors") {
    ExpansionVector v(DeltaBasisSpec::monomial(2), rat({1, -2, 1}));
    CHECK(derivative_vector(v) == std::vector<Rational>{Rational(0), Rational(0), Rational(2)});

    ExpansionVector spike(DeltaBasisSpec::krawtchouk_product(3), rat({1, 0, 0, 0}));
    auto d = derivative_vector(spike);
    for (int j = 0; j <= 3; ++j)
        CHECK(d[static_cast<std::size_t>(j)] == r_value(spike.basis(), j, 0));

    ExpansionVector ones(DeltaBasisSpec::krawtchouk_product(3), rat({1, 1, 1, 1}));
    CHECK(derivative_vector(ones)[0] == Rational(4));
}

TEST_CASE("derivative vector matches derivatives of the explicit expansion") {
    testing::Gen gen(97);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(gen.int_in(1, 10));
        DeltaBasisSpec basis = [&] {
            switch (gen.int_in(0, 2)) {
                case 0: return DeltaBasisSpec::monomial(n);
                case 1: return DeltaBasisSpec::krawtchouk_product(n);
                default: return DeltaBasisSpec::laguerre_ratio(n, Rational(gen.int_in(0, 3)));
            }
        }();
        ExpansionVector v(basis, gen.coeffs(n));
        Polynomial p = expand_explicit(v);
        auto d = derivative_vector(v);
        for (int j = 0; j <= n; ++j)
            CHECK(d[static_cast<std::size_t>(j)] == nth_derivative(p, j)(basis.c()));
    }
}

TEST_CASE("multiplicity from coefficients") {
    CHECK(multiplicity_from_coeffs(ExpansionVector(DeltaBasisSpec::monomial(2), rat({1, -2, 1}))) == 2);
    CHECK(multiplicity_from_coeffs(ExpansionVector(DeltaBasisSpec::monomial(1), rat({1, 1}))) == 0);
    ExpansionVector v(DeltaBasisSpec::monomial(6), rat({1, -1, -1, 0, 1, 1, -1}));
    CHECK(multiplicity_from_coeffs(v) == 3);
    CHECK(multiplicity_at(expand_explicit(v), Rational(1)) == 3);
    CHECK_THROWS_AS(
        multiplicity_from_coeffs(ExpansionVector(DeltaBasisSpec::monomial(1), rat({0, 0}))),
        Error);
}

TEST_CASE("coefficient detector agrees with synthetic division in every basis") {
    testing::Gen gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(gen.int_in(1, 12));
        int which = static_cast<int>(gen.int_in(0, 2));
        DeltaBasisSpec basis = which == 0   ? DeltaBasisSpec::monomial(n)
                               : which == 1 ? DeltaBasisSpec::krawtchouk_product(n)
                                            : DeltaBasisSpec::laguerre_ratio(n, Rational(gen.int_in(0, 2)));
        std::vector<Rational> a = gen.coeffs(n, 3, 2);
        bool zero = true;
        for (const auto& ai : a) zero = zero && ai.is_zero();
        if (zero) a[0] = Rational(1);
        ExpansionVector v(basis, a);
        Polynomial p = expand_explicit(v);
        if (p.is_zero()) continue;
        CHECK(multiplicity_from_coeffs(v) == multiplicity_at(p, basis.c()));
    }
}

TEST_CASE("orthogonal expansion coefficients") {
    ExpansionVector v(DeltaBasisSpec::monomial(2), rat({1, -2, 1}));

    FamilySpec kraw = FamilySpec::krawtchouk(2, Rational(1));
    auto lk = lambda_expansion(v, kraw);
    REQUIRE(lk.size() == 3);
    CHECK(lk[0].lambda_sq == Rational(0));
    CHECK(lk[1].lambda_sq == Rational(0));
    CHECK(lk[2].lambda_sq == Rational(4));
    CHECK(lk[2].sign == 1);

    FamilySpec cheb = FamilySpec::discrete_chebyshev(2);
    auto lc = lambda_expansion(v, cheb);
    CHECK(lc[0].lambda_sq == Rational(0));
    CHECK(lc[1].lambda_sq == Rational(0));
    Rational parseval(0);
    for (const auto& term : lc) parseval += term.lambda_sq;
    CHECK(parseval == Rational(6));  // 1 + 4 + 1 with unit weights
}

TEST_CASE("single-spike expansions reproduce kernel diagonals") {
    FamilySpec cheb = FamilySpec::discrete_chebyshev(4);
    ExpansionVector spike(DeltaBasisSpec::monomial(4), rat({0, 0, 1, 0, 0}));
    auto l = lambda_expansion(spike, cheb);
    for (int k = 0; k <= 4; ++k)
        CHECK(l[static_cast<std::size_t>(k)].lambda_sq == g_squared(cheb, k, 2));
}

TEST_CASE("support violations are rejected") {
    ExpansionVector v(DeltaBasisSpec::monomial(3), rat({1, 0, 0, -1}));
    CHECK_THROWS_AS(lambda_expansion(v, FamilySpec::discrete_chebyshev(2)), Error);
    CHECK_NOTHROW(lambda_expansion(v, FamilySpec::discrete_chebyshev(3)));
    CHECK_NOTHROW(lambda_expansion(v, FamilySpec::charlier(Rational(1))));
    ExpansionVector shifted_violation(DeltaBasisSpec::monomial(1), rat({1, -1}));
    CHECK_THROWS_AS(
        lambda_expansion(shifted_violation, FamilySpec::discrete_chebyshev(1, 1)), Error);
}

TEST_CASE("coefficients below the multiplicity vanish, with Parseval") {
    testing::Gen gen(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(gen.int_in(2, 10));
        int mu = static_cast<int>(gen.int_in(1, n));
        std::vector<Rational> a = testing::forced_multiplicity_coeffs(gen, n, mu);
        ExpansionVector v(DeltaBasisSpec::monomial(n), a);
        int actual = multiplicity_from_coeffs(v);
        REQUIRE(actual >= mu);

        FamilySpec fam = trial % 2 == 0 ? FamilySpec::discrete_chebyshev(n)
                                        : FamilySpec::krawtchouk(n, Rational(1 + trial % 3));
        auto lambdas = lambda_expansion(v, fam);
        for (int k = 0; k < actual && k <= n; ++k)
            CHECK(lambdas[static_cast<std::size_t>(k)].lambda_sq == Rational(0));
        if (actual <= n)
            CHECK(lambdas[static_cast<std::size_t>(actual)].lambda_sq != Rational(0));

        Rational parseval(0);
        for (const auto& term : lambdas) parseval += term.lambda_sq;
        Rational expected(0);
        for (long i = 0; i <= n; ++i) {
            const Rational& ai = v.a_at(static_cast<int>(i));
            if (!ai.is_zero()) expected += ai * ai / weight(fam, i);
        }
        CHECK(parseval == expected);
    }
}

TEST_CASE("explicit expansions") {
    CHECK(expand_explicit(ExpansionVector(DeltaBasisSpec::monomial(2), rat({1, -2, 1})))
          == Polynomial(rat({1, -2, 1})));
    CHECK(expand_explicit(ExpansionVector(DeltaBasisSpec::krawtchouk_product(3), rat({1, 0, 0, 1})))
          == Polynomial(rat({2, 0, 6})));
    CHECK(expand_explicit(ExpansionVector(DeltaBasisSpec::laguerre_ratio(1, Rational(0)), rat({1, 1})))
          == Polynomial(rat({2, -1})));
}
