#include "multizero/macwilliams.hpp"

namespace multizero {

DistanceDistribution::DistanceDistribution(int n, std::vector<Rational> b)
    : n_(n), b_(std::move(b)) {
    if (n < 0 || b_.size() != static_cast<std::size_t>(n) + 1)
        raise(ErrorCode::InvalidParameters,
              "distribution needs n+1 entries for length " + std::to_string(n));
    if (b_[0] != Rational(1))
        raise(ErrorCode::InvalidParameters, "distance distribution must start with B_0 = 1");
    for (const auto& bi : b_)
        if (bi.is_negative())
            raise(ErrorCode::InvalidParameters, "distribution entries must be nonnegative");
}

Rational DistanceDistribution::size() const {
    Rational total(0);
    for (const auto& bi : b_) total += bi;
    return total;
}

Rational krawtchouk_gf(int j, int n, long x) {
    if (j < 0 || j > n || x < 0 || x > n)
        raise(ErrorCode::IndexOutOfRange, "Krawtchouk indices must lie in 0..n");
    Rational sum(0);
    for (int m = 0; m <= j; ++m) {
        Rational term = binomial(x, static_cast<unsigned long>(m))
                      * binomial(static_cast<long>(n) - x, static_cast<unsigned long>(j - m));
        if (m % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

std::vector<Rational> macwilliams_transform(const DistanceDistribution& dist) {
    Rational size = dist.size();
    if (!size.is_positive())
        raise(ErrorCode::EmptyCode, "code size must be positive");
    const int n = dist.n();
    std::vector<Rational> dual(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational sum(0);
        for (int j = 0; j <= n; ++j)
            sum += dist.b()[static_cast<std::size_t>(j)] * krawtchouk_gf(i, n, j);
        dual[static_cast<std::size_t>(i)] = sum / size;
    }
    return dual;
}

Polynomial code_polynomial(const DistanceDistribution& dist) {
    const int n = dist.n();
    Polynomial one_minus(std::vector<Rational>{Rational(1), Rational(-1)});
    Polynomial one_plus(std::vector<Rational>{Rational(1), Rational(1)});
    Polynomial sum;
    for (int i = 0; i <= n; ++i) {
        if (dist.b()[static_cast<std::size_t>(i)].is_zero()) continue;
        sum += dist.b()[static_cast<std::size_t>(i)]
             * (one_minus.pow(static_cast<unsigned>(i)) * one_plus.pow(static_cast<unsigned>(n - i)));
    }
    return sum;
}

std::pair<Polynomial, int> vanishing_factor(const DistanceDistribution& dist, int d) {
    if (d < 1 || d > dist.n())
        raise(ErrorCode::InvalidParameters, "distance must lie in 1..n");
    for (int i = 1; i < d; ++i)
        if (!dist.b()[static_cast<std::size_t>(i)].is_zero())
            raise(ErrorCode::DistancePreconditionViolated,
                  "B_" + std::to_string(i) + " nonzero below the stated distance");

    const int n = dist.n();
    Polynomial one_minus(std::vector<Rational>{Rational(1), Rational(-1)});
    Polynomial one_plus(std::vector<Rational>{Rational(1), Rational(1)});
    Polynomial tail;
    for (int i = d; i <= n; ++i) {
        if (dist.b()[static_cast<std::size_t>(i)].is_zero()) continue;
        tail += dist.b()[static_cast<std::size_t>(i)]
              * (one_minus.pow(static_cast<unsigned>(i)) * one_plus.pow(static_cast<unsigned>(n - i)));
    }

    int mu = multiplicity_at(tail, Rational(1));  // ZeroPolynomial when no B_i >= d survives
    Polynomial quotient = tail;
    for (int i = 0; i < d; ++i) {
        LinearDivision div = divide_by_linear(quotient, Rational(1));
        quotient = std::move(div.quotient);
    }
    if (d % 2 == 1) quotient = -quotient;  // (1-x)^d = (-1)^d (x-1)^d
    return {std::move(quotient), mu};
}

}  // namespace multizero
