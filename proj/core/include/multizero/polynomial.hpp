#pragma once

#include <utility>
#include <vector>

#include "multizero/rational.hpp"

namespace multizero {

/// Dense univariate polynomial over Rational. The zero polynomial has
/// degree −1; otherwise the leading coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& value);
    /// c·x^degree
    static Polynomial monomial(int degree, const Rational& coeff = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i; zero beyond the degree.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial pow(unsigned e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { a *= s; return a; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { a *= s; return a; }
    friend Polynomial operator-(const Polynomial& a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

    std::string str() const;

  private:
    void trim();

    std::vector<Rational> c_;
};

struct LinearDivision {
    Polynomial quotient;
    Rational remainder;
};

/// Synthetic division p = quotient·(x − c) + remainder; exact.
LinearDivision divide_by_linear(const Polynomial& p, const Rational& c);

/// Largest m with (x − c)^m dividing p. Rejects the zero polynomial.
int multiplicity_at(const Polynomial& p, const Rational& c);

/// Least-degree polynomial through the given points (exact divided
/// differences; trailing zero differences dropped). Abscissas must be
/// pairwise distinct.
Polynomial newton_interpolate(const std::vector<std::pair<long, Rational>>& points);

}  // namespace multizero
