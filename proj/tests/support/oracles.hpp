#pragma once

// Independent reference computations for the test suites. Everything here
// recomputes values from first principles (linear algebra, Lagrange form,
// Gram-Schmidt) so the library paths are checked against a second route.

#include <random>
#include <utility>
#include <vector>

#include "multizero/polynomial.hpp"
#include "multizero/rational.hpp"

namespace multizero::testing {

/// Exact Gaussian elimination; the matrix must be square and nonsingular.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("singular system");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= factor * m[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

/// Interpolation via an explicit Vandermonde solve.
inline Polynomial vandermonde_interpolate(const std::vector<std::pair<long, Rational>>& points) {
    const std::size_t n = points.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational x(points[i].first);
        Rational pow(1);
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = pow;
            pow *= x;
        }
        rhs[i] = points[i].second;
    }
    return Polynomial(solve_linear(std::move(m), std::move(rhs)));
}

/// Direct Lagrange-form evaluation at t.
inline Rational lagrange_eval(const std::vector<std::pair<long, Rational>>& points,
                              const Rational& t) {
    Rational sum(0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        Rational term = points[i].second;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            term *= (t - Rational(points[j].first))
                  / Rational(points[i].first - points[j].first);
        }
        sum += term;
    }
    return sum;
}

/// Multiplicity via derivative counting, independent of synthetic division.
inline int multiplicity_by_derivatives(const Polynomial& p, const Rational& c) {
    Polynomial d = p;
    int m = 0;
    while (!d.is_zero() && d(c).is_zero()) {
        ++m;
        d = d.derivative();
    }
    return m;
}

/// Orthogonal (not normalized) polynomials by exact Gram-Schmidt over the
/// given weighted point set, together with their squared norms. The k-th
/// orthonormal value squared is poly[k](x)^2 / norm_sq[k].
struct OrthogonalSystem {
    std::vector<Polynomial> poly;
    std::vector<Rational> norm_sq;

    Rational g_squared(int k, const Rational& x) const {
        Rational v = poly[static_cast<std::size_t>(k)](x);
        return v * v / norm_sq[static_cast<std::size_t>(k)];
    }
    Rational g_product(int k, const Rational& s, const Rational& x) const {
        return poly[static_cast<std::size_t>(k)](s) * poly[static_cast<std::size_t>(k)](x)
             / norm_sq[static_cast<std::size_t>(k)];
    }
};

inline OrthogonalSystem gram_schmidt(const std::vector<long>& points,
                                     const std::vector<Rational>& weights) {
    auto inner = [&](const Polynomial& f, const Polynomial& g) {
        Rational sum(0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            Rational x(points[i]);
            sum += weights[i] * f(x) * g(x);
        }
        return sum;
    };
    OrthogonalSystem sys;
    for (std::size_t k = 0; k < points.size(); ++k) {
        Polynomial p = Polynomial::monomial(static_cast<int>(k));
        for (std::size_t j = 0; j < k; ++j) {
            Rational coeff = inner(p, sys.poly[j]) / sys.norm_sq[j];
            p -= coeff * sys.poly[j];
        }
        sys.poly.push_back(p);
        sys.norm_sq.push_back(inner(p, p));
    }
    return sys;
}

/// Deterministic small-rational generator for property tests.
class Gen {
  public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }
    Rational rational(long max_num = 9, long max_den = 5) {
        long num = int_in(-max_num, max_num);
        long den = int_in(1, max_den);
        return Rational(num, den);
    }
    Rational nonzero_rational(long max_num = 9, long max_den = 5) {
        while (true) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }
    std::vector<Rational> coeffs(int n, long max_num = 9, long max_den = 5) {
        std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
        for (auto& ai : a) ai = rational(max_num, max_den);
        return a;
    }

  private:
    std::mt19937 rng_;
};

/// Monomial coefficients of (1-x)^mu times a random polynomial with a
/// nonzero constant term: a guaranteed multiplicity >= mu instance.
inline std::vector<Rational> forced_multiplicity_coeffs(Gen& gen, int n, int mu) {
    Polynomial one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    std::vector<Rational> rest(static_cast<std::size_t>(n - mu) + 1);
    for (auto& c : rest) c = gen.rational(5, 3);
    rest[0] = gen.nonzero_rational(5, 3);
    Polynomial p = one_minus_x.pow(static_cast<unsigned>(mu)) * Polynomial(rest);
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) a[static_cast<std::size_t>(i)] = p.coeff(i);
    return a;
}

}  // namespace multizero::testing
