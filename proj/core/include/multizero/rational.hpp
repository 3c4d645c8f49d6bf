#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "multizero/errors.hpp"

namespace multizero {

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator; the canonical zero is 0/1. This is the only
/// number type used by the identity checks in this library.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(unsigned long n) : v_(n) {}
    explicit Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p", "p/q" or a plain decimal such as "-1.25".
    static Rational from_string(std::string_view text);

    static Rational factorial(unsigned long k);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    double to_double() const { return v_.get_d(); }
    /// Requires an integer value that fits in long.
    long to_long() const;

    /// Always "p/q", including a unit denominator ("6/1").
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Generalized binomial coefficient top·(top−1)···(top−k+1)/k! for
/// rational top; exact.
Rational binomial(const Rational& top, unsigned long k);

/// Integer binomial C(n, k); n may be negative.
Rational binomial(long n, unsigned long k);

/// Falling factorial x(x−1)···(x−j+1); equals binomial(x, j)·j!.
Rational falling_factorial(const Rational& x, unsigned long j);

}  // namespace multizero
