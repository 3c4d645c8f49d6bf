#include "doctest.h"

#include "multizero/transcendental.hpp"

#include <mpfr.h>

using namespace multizero;

TEST_CASE("zero exponent is decided exactly") {
    CHECK(compare_with_exp(Rational(1), Rational(0)).cmp == Cmp::Equal);
    CHECK(compare_with_exp(Rational(2), Rational(0)).cmp == Cmp::Greater);
    CHECK(compare_with_exp(Rational(1, 2), Rational(0)).cmp == Cmp::Less);
    CHECK(compare_with_exp(Rational(1), Rational(0)).bits_used == 0);
}

TEST_CASE("nonpositive values sit below every exponential") {
    CHECK(compare_with_exp(Rational(0), Rational(5)).cmp == Cmp::Less);
    CHECK(compare_with_exp(Rational(-3), Rational(-10)).cmp == Cmp::Less);
}

TEST_CASE("easy separations") {
    CHECK(compare_with_exp(Rational(3), Rational(1)).cmp == Cmp::Greater);
    CHECK(compare_with_exp(Rational(2), Rational(1)).cmp == Cmp::Less);
    CHECK(compare_with_exp(Rational(27182818, 10000000), Rational(1)).cmp == Cmp::Less);
    CHECK(compare_with_exp(Rational(27182819, 10000000), Rational(1)).cmp == Cmp::Greater);
    CHECK(compare_with_exp(Rational(1, 1000000), Rational(-10)).cmp == Cmp::Less);
    CHECK(compare_with_exp(Rational(1, 1000000), Rational(-20)).cmp == Cmp::Greater);
}

TEST_CASE("precision escalates only as far as needed") {
    ExpCompare easy = compare_with_exp(Rational(3), Rational(1));
    CHECK(easy.bits_used == 128);
    // 271828182845904523536/1e20 agrees with e to ~21 digits (~70 bits).
    Rational close(mpz_class("271828182845904523536"), mpz_class("100000000000000000000"));
    ExpCompare tight = compare_with_exp(close, Rational(1));
    CHECK(tight.cmp != Cmp::Undecided);
    CHECK(tight.bits_used <= 256);
}

TEST_CASE("a rational agreeing with e beyond the cap stays undecided") {
    // Round e to 600 bits; the result differs from e by less than 2^-590,
    // far beyond the 512-bit cap.
    mpfr_t e;
    mpfr_init2(e, 600);
    mpfr_set_ui(e, 1, MPFR_RNDN);
    mpfr_exp(e, e, MPFR_RNDN);
    mpz_class mantissa;
    mpfr_exp_t exp2 = mpfr_get_z_2exp(mantissa.get_mpz_t(), e);
    mpfr_clear(e);
    REQUIRE(exp2 < 0);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(-exp2));
    Rational nearly_e(mantissa, den);

    ExpCompare capped = compare_with_exp(nearly_e, Rational(1));
    CHECK(capped.cmp == Cmp::Undecided);
    CHECK(capped.bits_used == 512);

    ExpCompare decided = compare_with_exp(nearly_e, Rational(1), 128, 4096);
    CHECK(decided.cmp != Cmp::Undecided);
}

TEST_CASE("double rendering is sane") {
    CHECK(exp_approx(Rational(0)) == 1.0);
    CHECK(exp_approx(Rational(1)) == doctest::Approx(2.718281828459045));
    CHECK(exp_approx(Rational(-1)) == doctest::Approx(0.36787944117144233));
}
