#include "multizero/delta_basis.hpp"

#include <stdexcept>

#include "multizero/macwilliams.hpp"

namespace multizero {

DeltaBasisSpec DeltaBasisSpec::monomial(int n) {
    if (n < 0)
        raise(ErrorCode::InvalidParameters, "basis length must be nonnegative");
    DeltaBasisSpec b;
    b.kind_ = DeltaBasisKind::Monomial;
    b.n_ = n;
    b.c_ = Rational(1);
    return b;
}

DeltaBasisSpec DeltaBasisSpec::krawtchouk_product(int n) {
    if (n < 0)
        raise(ErrorCode::InvalidParameters, "basis length must be nonnegative");
    DeltaBasisSpec b;
    b.kind_ = DeltaBasisKind::KrawtchoukProduct;
    b.n_ = n;
    b.c_ = Rational(0);
    return b;
}

DeltaBasisSpec DeltaBasisSpec::laguerre_ratio(int n, const Rational& alpha) {
    if (n < 0)
        raise(ErrorCode::InvalidParameters, "basis length must be nonnegative");
    for (int j = 1; j <= n; ++j) {
        if (alpha == Rational(-static_cast<long>(j)))
            raise(ErrorCode::InvalidParameters,
                  "alpha = -" + std::to_string(j) + " degenerates the Laguerre ratios");
    }
    DeltaBasisSpec b;
    b.kind_ = DeltaBasisKind::LaguerreRatio;
    b.n_ = n;
    b.c_ = Rational(0);
    b.alpha_ = alpha;
    return b;
}

DeltaBasisSpec DeltaBasisSpec::custom(int n, const Rational& c, std::vector<Polynomial> rules) {
    if (n < 0 || rules.size() != static_cast<std::size_t>(n) + 1)
        raise(ErrorCode::InvalidParameters, "need rules R_0..R_n");
    for (int j = 0; j <= n; ++j) {
        if (rules[static_cast<std::size_t>(j)].degree() != j)
            raise(ErrorCode::InvalidParameters,
                  "rule R_" + std::to_string(j) + " must have exact degree " + std::to_string(j));
    }
    DeltaBasisSpec b;
    b.kind_ = DeltaBasisKind::Custom;
    b.n_ = n;
    b.c_ = c;
    b.rules_ = std::move(rules);
    return b;
}

ExpansionVector::ExpansionVector(DeltaBasisSpec basis, std::vector<Rational> a)
    : basis_(std::move(basis)), a_(std::move(a)) {
    if (a_.size() != static_cast<std::size_t>(basis_.n()) + 1)
        raise(ErrorCode::InvalidParameters,
              "expected " + std::to_string(basis_.n() + 1) + " coefficients, got "
                  + std::to_string(a_.size()));
}

std::vector<long> ExpansionVector::sparsity() const {
    std::vector<long> s;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!a_[i].is_zero()) s.push_back(static_cast<long>(i));
    return s;
}

bool ExpansionVector::all_zero() const {
    for (const auto& ai : a_)
        if (!ai.is_zero()) return false;
    return true;
}

Rational r_value(const DeltaBasisSpec& basis, int j, long i) {
    if (j < 0 || j > basis.n())
        raise(ErrorCode::IndexOutOfRange, "derivative order outside 0..n");
    switch (basis.kind()) {
        case DeltaBasisKind::Monomial:
            return falling_factorial(Rational(i), static_cast<unsigned long>(j));
        case DeltaBasisKind::KrawtchoukProduct:
            return Rational::factorial(static_cast<unsigned long>(j))
                 * krawtchouk_gf(j, basis.n(), i);
        case DeltaBasisKind::LaguerreRatio: {
            Rational value = binomial(i, static_cast<unsigned long>(j))
                           / binomial(Rational(static_cast<long>(j)) + basis.alpha(),
                                      static_cast<unsigned long>(j));
            return j % 2 == 0 ? value : -value;
        }
        case DeltaBasisKind::Custom:
            return basis.custom_rules()[static_cast<std::size_t>(j)](Rational(i));
    }
    raise(ErrorCode::InvalidParameters, "unknown basis kind");
}

std::vector<Rational> derivative_vector(const ExpansionVector& v) {
    const int n = v.n();
    std::vector<Rational> result(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int j = 0; j <= n; ++j) {
        Rational sum(0);
        for (int i = 0; i <= n; ++i) {
            if (v.a_at(i).is_zero()) continue;
            sum += v.a_at(i) * r_value(v.basis(), j, i);
        }
        result[static_cast<std::size_t>(j)] = sum;
    }
    return result;
}

int multiplicity_from_coeffs(const ExpansionVector& v) {
    if (v.all_zero())
        raise(ErrorCode::AllZero, "multiplicity of the zero expansion is undefined");
    const int n = v.n();
    for (int j = 0; j <= n; ++j) {
        Rational moment(0);
        for (int i = 0; i <= n; ++i) {
            if (v.a_at(i).is_zero()) continue;
            moment += v.a_at(i) * falling_factorial(Rational(static_cast<long>(i)),
                                                    static_cast<unsigned long>(j));
        }
        if (!moment.is_zero()) return j;
    }
    // The moment matrix is an evaluation of a degree-graded basis at n+1
    // distinct points, hence nonsingular.
    throw std::logic_error("all moments vanished for a nonzero expansion");
}

std::vector<LambdaTerm> lambda_expansion(const ExpansionVector& v, const FamilySpec& fam) {
    const auto support_indices = v.sparsity();
    if (fam.finite()) {
        for (long i : support_indices) {
            if (!fam.in_support(i))
                raise(ErrorCode::SupportViolation,
                      "coefficient index " + std::to_string(i)
                          + " outside the support of " + fam.describe());
        }
    } else {
        for (long i : support_indices) {
            if (!fam.in_support(i))
                raise(ErrorCode::SupportViolation, "negative index in sparsity set");
        }
    }
    const int k_max = fam.finite() ? fam.n() : v.n();
    std::vector<LambdaTerm> lambdas(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        Rational sum(0);
        for (long i : support_indices)
            sum += v.a_at(static_cast<int>(i)) * unnormalized_value(fam, k, i);
        lambdas[static_cast<std::size_t>(k)] =
            LambdaTerm{norm_constant(fam, k) * sum * sum, sum.sign()};
    }
    return lambdas;
}

namespace {

Polynomial laguerre_ratio_poly(int i, const Rational& alpha) {
    // L_i^(a)(x) / L_i^(a)(0) expanded in powers of x.
    Rational at_zero = binomial(Rational(static_cast<long>(i)) + alpha,
                                static_cast<unsigned long>(i));
    std::vector<Rational> coeffs(static_cast<std::size_t>(i) + 1);
    for (int m = 0; m <= i; ++m) {
        Rational c = binomial(Rational(static_cast<long>(i)) + alpha,
                              static_cast<unsigned long>(i - m))
                   / (at_zero * Rational::factorial(static_cast<unsigned long>(m)));
        coeffs[static_cast<std::size_t>(m)] = m % 2 == 0 ? c : -c;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial expand_explicit(const ExpansionVector& v) {
    const int n = v.n();
    switch (v.basis().kind()) {
        case DeltaBasisKind::Monomial:
            return Polynomial(v.a());
        case DeltaBasisKind::KrawtchoukProduct: {
            Polynomial one_minus(std::vector<Rational>{Rational(1), Rational(-1)});
            Polynomial one_plus(std::vector<Rational>{Rational(1), Rational(1)});
            Polynomial sum;
            for (int i = 0; i <= n; ++i) {
                if (v.a_at(i).is_zero()) continue;
                sum += v.a_at(i) * (one_minus.pow(static_cast<unsigned>(i))
                                    * one_plus.pow(static_cast<unsigned>(n - i)));
            }
            return sum;
        }
        case DeltaBasisKind::LaguerreRatio: {
            Polynomial sum;
            for (int i = 0; i <= n; ++i) {
                if (v.a_at(i).is_zero()) continue;
                sum += v.a_at(i) * laguerre_ratio_poly(i, v.basis().alpha());
            }
            return sum;
        }
        case DeltaBasisKind::Custom:
            raise(ErrorCode::NotPolynomialBasis,
                  "custom bases define derivative rules, not explicit functions");
    }
    raise(ErrorCode::InvalidParameters, "unknown basis kind");
}

}  // namespace multizero
