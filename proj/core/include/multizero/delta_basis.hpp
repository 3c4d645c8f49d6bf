#pragma once

#include <vector>

#include "multizero/families.hpp"
#include "multizero/polynomial.hpp"
#include "multizero/rational.hpp"

namespace multizero {

enum class DeltaBasisKind { Monomial, KrawtchoukProduct, LaguerreRatio, Custom };

/// A basis F_0..F_n of functions analytic at a distinguished point c
/// whose derivative values F_i^(j)(c) are degree-graded polynomials R_j
/// evaluated at i. Built-ins: powers of x at c = 1, the products
/// (1-x)^i (1+x)^(n-i) at c = 0, and normalized Laguerre ratios at
/// c = 0. Custom bases supply the rules R_j directly (exact degree j,
/// which makes them a basis).
class DeltaBasisSpec {
  public:
    static DeltaBasisSpec monomial(int n);
    static DeltaBasisSpec krawtchouk_product(int n);
    static DeltaBasisSpec laguerre_ratio(int n, const Rational& alpha);
    static DeltaBasisSpec custom(int n, const Rational& c, std::vector<Polynomial> rules);

    DeltaBasisKind kind() const { return kind_; }
    int n() const { return n_; }
    /// The distinguished point: 1 for Monomial, 0 for the others.
    const Rational& c() const { return c_; }
    const Rational& alpha() const { return alpha_; }
    const std::vector<Polynomial>& custom_rules() const { return rules_; }

  private:
    DeltaBasisSpec() = default;

    DeltaBasisKind kind_ = DeltaBasisKind::Monomial;
    int n_ = 0;
    Rational c_;
    Rational alpha_;
    std::vector<Polynomial> rules_;
};

/// Coefficient sequence a_0..a_n in a chosen basis. The sparsity set is
/// always recomputed from the coefficients.
class ExpansionVector {
  public:
    ExpansionVector(DeltaBasisSpec basis, std::vector<Rational> a);

    const DeltaBasisSpec& basis() const { return basis_; }
    const std::vector<Rational>& a() const { return a_; }
    int n() const { return basis_.n(); }
    const Rational& a_at(int i) const { return a_[static_cast<std::size_t>(i)]; }

    std::vector<long> sparsity() const;
    bool all_zero() const;

  private:
    DeltaBasisSpec basis_;
    std::vector<Rational> a_;
};

/// R_j(i), the j-th derivative rule at index i.
Rational r_value(const DeltaBasisSpec& basis, int j, long i);

/// Entry j is p^(j)(c) = sum_i a_i R_j(i).
std::vector<Rational> derivative_vector(const ExpansionVector& v);

/// Multiplicity of the zero of sum a_i F_i at the basis point, read off
/// the coefficients alone: the smallest j whose falling-factorial moment
/// sum_i a_i * i(i-1)...(i-j+1) is nonzero.
int multiplicity_from_coeffs(const ExpansionVector& v);

/// One coefficient of the orthogonal expansion a_j/w(j) = sum lambda_k g_k(j),
/// kept in squared/signed form so everything stays rational: lambda_sq is
/// the rational cofactor of the family unit in lambda_k^2, sign the sign
/// of sum_j a_j qhat_k(j).
struct LambdaTerm {
    Rational lambda_sq;
    int sign = 0;
};

/// lambda_k for k = 0..n (family degree bound when finite, expansion
/// length otherwise). Finite families require the sparsity set to lie in
/// the support.
std::vector<LambdaTerm> lambda_expansion(const ExpansionVector& v, const FamilySpec& fam);

/// The expansion as an explicit dense polynomial; defined for the three
/// built-in bases.
Polynomial expand_explicit(const ExpansionVector& v);

}  // namespace multizero
