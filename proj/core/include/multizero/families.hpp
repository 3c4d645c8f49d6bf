#pragma once

#include <string>

#include "multizero/rational.hpp"

namespace multizero {

enum class FamilyKind { Hahn, DiscreteChebyshev, Krawtchouk, Meixner, Charlier };

/// Some norm constants carry a positive transcendental factor that can
/// never be folded into a rational: e^{-lambda} for Charlier, (1-q)^beta
/// for Meixner with non-integer beta. Every exposed quantity is a
/// rational multiple of the family's unit; ratios of such quantities are
/// exact, and the unit only meets a numeric comparison inside the bound
/// checks (which evaluate it with directed rounding).
enum class UnitKind { One, ExpNegLambda, PowOneMinusQ };

/// Descriptor of one discrete orthogonal family, validated on
/// construction. Hahn, discrete Chebyshev and Krawtchouk live on
/// {shift, ..., shift+n}; Meixner and Charlier on the nonnegative
/// integers. The optional shift re-bases a finite support, which is what
/// the kernel-route bounds need when the distinguished index sits just
/// outside the support.
class FamilySpec {
  public:
    static FamilySpec hahn(int n, const Rational& alpha, const Rational& beta,
                           long shift = 0);
    static FamilySpec discrete_chebyshev(int n, long shift = 0);
    static FamilySpec krawtchouk(int n, const Rational& q, long shift = 0);
    static FamilySpec meixner(const Rational& beta, const Rational& q);
    static FamilySpec charlier(const Rational& lambda);

    FamilyKind kind() const { return kind_; }
    bool finite() const { return finite_; }
    /// Highest degree / support bound; finite families only.
    int n() const;
    long shift() const { return shift_; }
    bool in_support(long x) const;
    long support_lo() const { return shift_; }
    /// Finite families only.
    long support_hi() const;

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const Rational& q() const { return q_; }
    const Rational& lambda() const { return lambda_; }

    UnitKind unit_kind() const { return unit_; }
    /// Human-readable unit for reports, e.g. "exp(-3/2)".
    std::string unit_label() const;

    std::string describe() const;

  private:
    FamilySpec() = default;

    FamilyKind kind_ = FamilyKind::DiscreteChebyshev;
    bool finite_ = true;
    int n_ = 0;
    long shift_ = 0;
    Rational alpha_, beta_, q_, lambda_;
    UnitKind unit_ = UnitKind::One;
};

/// w(x) > 0 for x in the support; exact.
Rational weight(const FamilySpec& fam, long x);

/// Value of the k-th family polynomial stripped of its square-root
/// normalizer (the bracketed sum of the defining formula). Defined for
/// every integer x; polynomials extend beyond the support.
Rational unnormalized_value(const FamilySpec& fam, int k, long x);

/// c_k with g_k(x)^2 = c_k * unnormalized_value(k, x)^2, as the rational
/// cofactor of the family unit.
Rational norm_constant(const FamilySpec& fam, int k);

/// g_k(x)^2 (rational cofactor of the family unit).
Rational g_squared(const FamilySpec& fam, int k, long x);

/// Sum_{j=lo..hi} g_j(s) g_j(x), exact via the product form
/// c_j * qhat_j(s) * qhat_j(x). Rational cofactor of the family unit.
Rational kernel(const FamilySpec& fam, long s, long x, int lo, int hi);

/// Value rational_part + unit_part * unit. Finite families and the
/// Meixner beta=1 closed form are plain rationals (unit_part = 0).
struct TailSum {
    Rational rational_part;
    Rational unit_part;
    UnitKind unit = UnitKind::One;

    bool is_exact() const { return unit_part.is_zero(); }
    const Rational& exact() const;
};

/// Sum_{j=mu..N} g_j(s)^2 where N = n for finite families. Infinite
/// families admit a closed form only at s = 0 (Meixner additionally
/// needs beta = 1); anything else refuses with NoClosedForm rather than
/// truncating.
TailSum tail_sum(const FamilySpec& fam, long s, int mu);

/// w(x) * kernel(fam, x, y, 0, n); equals 1 if x == y else 0. Finite
/// families only.
Rational dual_orthogonality_check(const FamilySpec& fam, long x, long y);

}  // namespace multizero
