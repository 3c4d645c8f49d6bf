#include "multizero/families.hpp"

#include <sstream>

namespace multizero {

namespace {

void check_finite_k(const FamilySpec& fam, int k) {
    if (k < 0 || (fam.finite() && k > fam.n()))
        raise(ErrorCode::InvalidParameters,
              "degree " + std::to_string(k) + " outside the family range");
}

// Bracketed sums of the defining formulae, in support-local coordinates.

Rational hahn_qhat(int n, const Rational& alpha, const Rational& beta, int k, long xi) {
    Rational sum(0);
    Rational ab = alpha + beta;
    for (int j = 0; j <= k; ++j) {
        unsigned long ju = static_cast<unsigned long>(j);
        Rational term = binomial(static_cast<long>(k), ju)
                      * binomial(Rational(static_cast<long>(k)) + ab + Rational(static_cast<long>(j)), ju)
                      * binomial(xi, ju)
                      / (binomial(Rational(static_cast<long>(j)) + alpha, ju)
                         * binomial(static_cast<long>(n), ju));
        if (j % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

Rational krawtchouk_qhat(int n, const Rational& q, int k, long xi) {
    Rational sum(0);
    Rational q_inv = Rational(1) / q;
    Rational q_pow(1);
    for (int j = 0; j <= k; ++j) {
        Rational term = q_pow * binomial(xi, static_cast<unsigned long>(j))
                      * binomial(static_cast<long>(n) - xi, static_cast<unsigned long>(k - j));
        if (j % 2 == 0) sum += term; else sum -= term;
        q_pow *= q_inv;
    }
    return sum;
}

Rational meixner_qhat(const Rational& beta, const Rational& q, int k, long xi) {
    Rational sum(0);
    Rational q_inv = Rational(1) / q;
    Rational q_pow(1);
    for (int j = 0; j <= k; ++j) {
        sum += q_pow * binomial(xi, static_cast<unsigned long>(j))
             * binomial(Rational(-xi) - beta, static_cast<unsigned long>(k - j));
        q_pow *= q_inv;
    }
    return sum;
}

Rational charlier_qhat(const Rational& lambda, int k, long xi) {
    Rational sum(0);
    Rational lam_inv = Rational(-1) / lambda;
    Rational pow(1);
    for (int i = 0; i <= k; ++i) {
        sum += pow * binomial(static_cast<long>(k), static_cast<unsigned long>(i))
             * binomial(xi, static_cast<unsigned long>(i))
             * Rational::factorial(static_cast<unsigned long>(i));
        pow *= lam_inv;
    }
    return sum;
}

// Hahn normalization. The printed closed form has a removable
// singularity when alpha+beta+2k+1 = 0 (only reachable combination of a
// zero in the leading factor and in the big binomial); the shared factor
// is cancelled before evaluating.
Rational hahn_norm(int n, const Rational& alpha, const Rational& beta, int k) {
    Rational ab = alpha + beta;
    Rational t = ab + Rational(2L * k + 1);
    Rational common = binomial(Rational(static_cast<long>(k)) + alpha, static_cast<unsigned long>(k))
                    * binomial(static_cast<long>(n), static_cast<unsigned long>(k))
                    / (Rational(static_cast<long>(n) + 1)
                       * binomial(Rational(static_cast<long>(k)) + beta, static_cast<unsigned long>(k)));
    if (!t.is_zero())
        return t * common
             / binomial(Rational(static_cast<long>(n + k)) + ab + Rational(1),
                        static_cast<unsigned long>(n + 1));
    Rational reduced(1);
    Rational top = Rational(static_cast<long>(n + k)) + ab + Rational(1);
    for (int i = 0; i <= n; ++i) {
        if (i == n - k) continue;  // this factor equals t
        reduced *= top - Rational(static_cast<long>(i));
    }
    reduced /= Rational::factorial(static_cast<unsigned long>(n + 1));
    return common / reduced;
}

Rational chebyshev_norm(int n, int k) {
    Rational nf = Rational::factorial(static_cast<unsigned long>(n));
    return Rational(2L * k + 1) * nf * nf
         / (Rational::factorial(static_cast<unsigned long>(n - k))
            * Rational::factorial(static_cast<unsigned long>(n + k + 1)));
}

}  // namespace

FamilySpec FamilySpec::hahn(int n, const Rational& alpha, const Rational& beta, long shift) {
    if (n < 0)
        raise(ErrorCode::InvalidParameters, "Hahn support bound must be nonnegative");
    Rational minus_one(-1), minus_n(-static_cast<long>(n));
    bool branch_main = alpha > minus_one && beta > minus_one;
    bool branch_low = alpha < minus_n && beta < minus_n;
    if (!branch_main && !branch_low)
        raise(ErrorCode::InvalidParameters,
              "Hahn parameters need alpha,beta > -1 or alpha,beta < -n");
    FamilySpec fam;
    fam.kind_ = FamilyKind::Hahn;
    fam.finite_ = true;
    fam.n_ = n;
    fam.shift_ = shift;
    fam.alpha_ = alpha;
    fam.beta_ = beta;
    if (branch_low) {
        // Positivity is not automatic on this branch.
        for (long x = fam.support_lo(); x <= fam.support_hi(); ++x) {
            if (!weight(fam, x).is_positive())
                raise(ErrorCode::InvalidParameters,
                      "Hahn weight not positive at x = " + std::to_string(x));
        }
    }
    return fam;
}

FamilySpec FamilySpec::discrete_chebyshev(int n, long shift) {
    if (n < 0)
        raise(ErrorCode::InvalidParameters, "support bound must be nonnegative");
    FamilySpec fam;
    fam.kind_ = FamilyKind::DiscreteChebyshev;
    fam.finite_ = true;
    fam.n_ = n;
    fam.shift_ = shift;
    return fam;
}

FamilySpec FamilySpec::krawtchouk(int n, const Rational& q, long shift) {
    if (n < 0)
        raise(ErrorCode::InvalidParameters, "support bound must be nonnegative");
    if (!q.is_positive())
        raise(ErrorCode::InvalidParameters, "Krawtchouk parameter q must be positive");
    FamilySpec fam;
    fam.kind_ = FamilyKind::Krawtchouk;
    fam.finite_ = true;
    fam.n_ = n;
    fam.shift_ = shift;
    fam.q_ = q;
    return fam;
}

FamilySpec FamilySpec::meixner(const Rational& beta, const Rational& q) {
    if (!beta.is_positive())
        raise(ErrorCode::InvalidParameters, "Meixner parameter beta must be positive");
    if (!q.is_positive() || q >= Rational(1))
        raise(ErrorCode::InvalidParameters, "Meixner parameter q must lie in (0,1)");
    FamilySpec fam;
    fam.kind_ = FamilyKind::Meixner;
    fam.finite_ = false;
    fam.beta_ = beta;
    fam.q_ = q;
    fam.unit_ = beta.is_integer() ? UnitKind::One : UnitKind::PowOneMinusQ;
    return fam;
}

FamilySpec FamilySpec::charlier(const Rational& lambda) {
    if (!lambda.is_positive())
        raise(ErrorCode::InvalidParameters, "Charlier parameter lambda must be positive");
    FamilySpec fam;
    fam.kind_ = FamilyKind::Charlier;
    fam.finite_ = false;
    fam.lambda_ = lambda;
    fam.unit_ = UnitKind::ExpNegLambda;
    return fam;
}

int FamilySpec::n() const {
    if (!finite_)
        raise(ErrorCode::InfiniteSupport, "infinite family has no degree bound");
    return n_;
}

bool FamilySpec::in_support(long x) const {
    if (x < shift_) return false;
    return !finite_ || x <= support_hi();
}

long FamilySpec::support_hi() const {
    if (!finite_)
        raise(ErrorCode::InfiniteSupport, "infinite family has no upper support bound");
    return shift_ + n_;
}

std::string FamilySpec::unit_label() const {
    switch (unit_) {
        case UnitKind::One: return "1";
        case UnitKind::ExpNegLambda: return "exp(-" + lambda_.str() + ")";
        case UnitKind::PowOneMinusQ:
            return "(" + (Rational(1) - q_).str() + ")^(" + beta_.str() + ")";
    }
    return "1";
}

std::string FamilySpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case FamilyKind::Hahn:
            os << "hahn(n=" << n_ << ",alpha=" << alpha_ << ",beta=" << beta_ << ")";
            break;
        case FamilyKind::DiscreteChebyshev:
            os << "chebyshev(n=" << n_ << ")";
            break;
        case FamilyKind::Krawtchouk:
            os << "krawtchouk(n=" << n_ << ",q=" << q_ << ")";
            break;
        case FamilyKind::Meixner:
            os << "meixner(beta=" << beta_ << ",q=" << q_ << ")";
            break;
        case FamilyKind::Charlier:
            os << "charlier(lambda=" << lambda_ << ")";
            break;
    }
    if (shift_ != 0) os << "+shift(" << shift_ << ")";
    return os.str();
}

Rational weight(const FamilySpec& fam, long x) {
    if (!fam.in_support(x))
        raise(ErrorCode::OutOfSupport,
              "x = " + std::to_string(x) + " outside the support of " + fam.describe());
    long xi = x - fam.shift();
    switch (fam.kind()) {
        case FamilyKind::Hahn: {
            long n = fam.n();
            return binomial(Rational(xi) + fam.alpha(), static_cast<unsigned long>(xi))
                 * binomial(Rational(n - xi) + fam.beta(), static_cast<unsigned long>(n - xi));
        }
        case FamilyKind::DiscreteChebyshev:
            return Rational(1);
        case FamilyKind::Krawtchouk:
            return binomial(static_cast<long>(fam.n()), static_cast<unsigned long>(xi))
                 * fam.q().pow(xi);
        case FamilyKind::Meixner:
            return binomial(Rational(xi) + fam.beta() - Rational(1),
                            static_cast<unsigned long>(xi))
                 * fam.q().pow(xi);
        case FamilyKind::Charlier:
            return fam.lambda().pow(xi) / Rational::factorial(static_cast<unsigned long>(xi));
    }
    raise(ErrorCode::InvalidParameters, "unknown family kind");
}

Rational unnormalized_value(const FamilySpec& fam, int k, long x) {
    check_finite_k(fam, k);
    long xi = x - fam.shift();
    switch (fam.kind()) {
        case FamilyKind::Hahn:
            return hahn_qhat(fam.n(), fam.alpha(), fam.beta(), k, xi);
        case FamilyKind::DiscreteChebyshev:
            return hahn_qhat(fam.n(), Rational(0), Rational(0), k, xi);
        case FamilyKind::Krawtchouk:
            return krawtchouk_qhat(fam.n(), fam.q(), k, xi);
        case FamilyKind::Meixner:
            return meixner_qhat(fam.beta(), fam.q(), k, xi);
        case FamilyKind::Charlier:
            return charlier_qhat(fam.lambda(), k, xi);
    }
    raise(ErrorCode::InvalidParameters, "unknown family kind");
}

Rational norm_constant(const FamilySpec& fam, int k) {
    check_finite_k(fam, k);
    switch (fam.kind()) {
        case FamilyKind::Hahn:
            return hahn_norm(fam.n(), fam.alpha(), fam.beta(), k);
        case FamilyKind::DiscreteChebyshev:
            return chebyshev_norm(fam.n(), k);
        case FamilyKind::Krawtchouk: {
            int n = fam.n();
            return fam.q().pow(k) * (Rational(1) + fam.q()).pow(-n)
                 / binomial(static_cast<long>(n), static_cast<unsigned long>(k));
        }
        case FamilyKind::Meixner: {
            Rational c = fam.q().pow(k)
                       / binomial(Rational(static_cast<long>(k)) + fam.beta() - Rational(1),
                                  static_cast<unsigned long>(k));
            if (fam.unit_kind() == UnitKind::One)
                c *= (Rational(1) - fam.q()).pow(fam.beta().to_long());
            return c;
        }
        case FamilyKind::Charlier:
            return fam.lambda().pow(k) / Rational::factorial(static_cast<unsigned long>(k));
    }
    raise(ErrorCode::InvalidParameters, "unknown family kind");
}

Rational g_squared(const FamilySpec& fam, int k, long x) {
    Rational v = unnormalized_value(fam, k, x);
    return norm_constant(fam, k) * v * v;
}

Rational kernel(const FamilySpec& fam, long s, long x, int lo, int hi) {
    if (lo < 0 || hi < lo || (fam.finite() && hi > fam.n()))
        raise(ErrorCode::InvalidParameters, "kernel degree range out of order");
    Rational sum(0);
    for (int j = lo; j <= hi; ++j)
        sum += norm_constant(fam, j) * unnormalized_value(fam, j, s)
             * unnormalized_value(fam, j, x);
    return sum;
}

const Rational& TailSum::exact() const {
    if (!is_exact())
        raise(ErrorCode::NoClosedForm, "tail sum carries a transcendental unit");
    return rational_part;
}

TailSum tail_sum(const FamilySpec& fam, long s, int mu) {
    if (mu < 0)
        raise(ErrorCode::InvalidParameters, "tail start must be nonnegative");
    if (fam.finite()) {
        Rational sum(0);
        for (int j = mu; j <= fam.n(); ++j)
            sum += g_squared(fam, j, s);
        return {sum, Rational(0), UnitKind::One};
    }
    if (s != 0)
        raise(ErrorCode::NoClosedForm,
              "no closed tail form away from 0 for " + fam.describe());
    if (fam.kind() == FamilyKind::Meixner) {
        if (fam.beta() != Rational(1))
            raise(ErrorCode::NoClosedForm, "Meixner tail needs beta = 1");
        return {fam.q().pow(mu), Rational(0), UnitKind::One};
    }
    // Charlier: sum_{j>=mu} lambda^j e^{-lambda} / j!  =  1 - e^{-lambda} * partial
    Rational partial(0);
    Rational pow(1);
    for (int i = 0; i < mu; ++i) {
        partial += pow / Rational::factorial(static_cast<unsigned long>(i));
        pow *= fam.lambda();
    }
    return {Rational(1), -partial, UnitKind::ExpNegLambda};
}

Rational dual_orthogonality_check(const FamilySpec& fam, long x, long y) {
    if (!fam.finite())
        raise(ErrorCode::InfiniteSupport, "dual orthogonality needs a finite support");
    if (!fam.in_support(x) || !fam.in_support(y))
        raise(ErrorCode::OutOfSupport, "points must lie in the support");
    return weight(fam, x) * kernel(fam, x, y, 0, fam.n());
}

}  // namespace multizero
