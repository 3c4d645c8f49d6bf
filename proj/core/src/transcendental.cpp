#include "multizero/transcendental.hpp"

#include <mpfr.h>

namespace multizero {

namespace {

class Mpfr {
  public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

  private:
    mpfr_t v_;
};

}  // namespace

ExpCompare compare_with_exp(const Rational& value, const Rational& exponent,
                            long start_bits, long max_bits) {
    if (exponent.is_zero()) {
        Rational one(1);
        Cmp cmp = value < one ? Cmp::Less : (value > one ? Cmp::Greater : Cmp::Equal);
        return {cmp, 0};
    }
    if (!value.is_positive())
        return {Cmp::Less, 0};

    for (long bits = start_bits; bits <= max_bits; bits *= 2) {
        Mpfr x_lo(bits), x_hi(bits), e_lo(bits), e_hi(bits), v_lo(bits), v_hi(bits);
        mpfr_set_q(x_lo.get(), exponent.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(x_hi.get(), exponent.raw().get_mpq_t(), MPFR_RNDU);
        mpfr_exp(e_lo.get(), x_lo.get(), MPFR_RNDD);
        mpfr_exp(e_hi.get(), x_hi.get(), MPFR_RNDU);
        mpfr_set_q(v_lo.get(), value.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(v_hi.get(), value.raw().get_mpq_t(), MPFR_RNDU);
        if (mpfr_cmp(v_lo.get(), e_hi.get()) > 0) return {Cmp::Greater, bits};
        if (mpfr_cmp(v_hi.get(), e_lo.get()) < 0) return {Cmp::Less, bits};
    }
    return {Cmp::Undecided, max_bits};
}

double exp_approx(const Rational& exponent) {
    Mpfr x(128), e(128);
    mpfr_set_q(x.get(), exponent.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_exp(e.get(), x.get(), MPFR_RNDN);
    return mpfr_get_d(e.get(), MPFR_RNDN);
}

}  // namespace multizero
