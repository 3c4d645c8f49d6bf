#include "multizero/rational.hpp"

#include <cctype>
#include <ostream>

namespace multizero {

namespace {

mpz_class parse_mpz(std::string_view text) {
    if (text.empty())
        raise(ErrorCode::ParseError, "empty integer literal");
    mpz_class z;
    if (z.set_str(std::string(text), 10) != 0)
        raise(ErrorCode::ParseError, "bad integer literal '" + std::string(text) + "'");
    return z;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0)
        raise(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0)
        raise(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    // Strip surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        raise(ErrorCode::ParseError, "empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_mpz(text.substr(0, slash));
        mpz_class den = parse_mpz(text.substr(slash + 1));
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        bool negative = text.front() == '-';
        if (text.front() == '+' || text.front() == '-')
            text.remove_prefix(1), dot -= 1;
        std::string digits;
        digits.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (i == dot) continue;
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                raise(ErrorCode::ParseError, "bad decimal literal");
            digits.push_back(text[i]);
        }
        if (digits.empty())
            raise(ErrorCode::ParseError, "bad decimal literal");
        mpz_class num = parse_mpz(digits);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
        if (negative) num = -num;
        return Rational(num, den);
    }
    return Rational(parse_mpz(text));
}

Rational Rational::factorial(unsigned long k) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), k);
    return Rational(z);
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.is_negative()) r = -r;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0)
            raise(ErrorCode::DivisionByZero, "negative power of zero");
        return Rational(0);
    }
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), this->num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), this->den().get_mpz_t(), k);
    return e > 0 ? Rational(num, den) : Rational(den, num);
}

long Rational::to_long() const {
    if (!is_integer() || !num().fits_slong_p())
        raise(ErrorCode::ParseError, "rational " + str() + " is not a small integer");
    return num().get_si();
}

std::string Rational::str() const {
    return num().get_str() + "/" + den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        raise(ErrorCode::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(const Rational& top, unsigned long k) {
    Rational num(1);
    for (unsigned long i = 0; i < k; ++i)
        num *= top - Rational(static_cast<long>(i));
    return num / Rational::factorial(k);
}

Rational binomial(long n, unsigned long k) {
    if (n >= 0) {
        mpz_class z;
        mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), k);
        return Rational(z);
    }
    return binomial(Rational(n), k);
}

Rational falling_factorial(const Rational& x, unsigned long j) {
    Rational r(1);
    for (unsigned long i = 0; i < j; ++i)
        r *= x - Rational(static_cast<long>(i));
    return r;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::OutOfSupport: return "OutOfSupport";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::NoClosedForm: return "NoClosedForm";
        case ErrorCode::InfiniteSupport: return "InfiniteSupport";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SupportViolation: return "SupportViolation";
        case ErrorCode::MultiplicityTooSmall: return "MultiplicityTooSmall";
        case ErrorCode::ZeroLeadCoefficient: return "ZeroLeadCoefficient";
        case ErrorCode::ParameterDomain: return "ParameterDomain";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::NotPolynomialBasis: return "NotPolynomialBasis";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::EmptyCode: return "EmptyCode";
        case ErrorCode::DistancePreconditionViolated: return "DistancePreconditionViolated";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace multizero
