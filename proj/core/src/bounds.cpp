#include "multizero/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace multizero {

namespace {

void push(BoundReport& report, const std::string& key, const std::string& value) {
    report.context.emplace_back(key, value);
}

int checked_multiplicity(const ExpansionVector& v, int mu) {
    int actual = multiplicity_from_coeffs(v);
    if (mu < 1 || mu > actual)
        raise(ErrorCode::MultiplicityTooSmall,
              "stated multiplicity " + std::to_string(mu)
                  + " not in 1.." + std::to_string(actual));
    return actual;
}

void exact_verdict(BoundReport& report, const Rational& lhs, const Rational& rhs) {
    report.lhs = BoundSide::of(lhs);
    report.rhs = BoundSide::of(rhs);
    report.sharp = lhs == rhs;
    bool ok = report.strict ? lhs > rhs : lhs >= rhs;
    report.verdict = ok ? Verdict::Holds : Verdict::Fails;
}

// Verdict for lhs_ratio <=> e^exponent, where the original inequality was
// scaled by a positive rational so that the right side is a bare
// exponential.
void exp_verdict(BoundReport& report, const Rational& lhs_ratio, const Rational& exponent) {
    ExpCompare cmp = compare_with_exp(lhs_ratio, exponent);
    switch (cmp.cmp) {
        case Cmp::Greater:
            report.verdict = Verdict::Holds;
            break;
        case Cmp::Equal:
            report.sharp = true;
            report.verdict = report.strict ? Verdict::Fails : Verdict::Holds;
            break;
        case Cmp::Less:
            report.verdict = Verdict::Fails;
            break;
        case Cmp::Undecided:
            report.verdict = Verdict::Undecided;
            break;
    }
    push(report, "bits_used", std::to_string(cmp.bits_used));
}

std::string verdict_string(Cmp cmp, bool strict) {
    if (cmp == Cmp::Undecided) return "undecided";
    bool ok = cmp == Cmp::Greater || (!strict && cmp == Cmp::Equal);
    return ok ? "true" : "false";
}

Rational q_power(const Rational& q, int e) { return q.pow(e); }

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Undecided: return "undecided";
    }
    return "unknown";
}

BoundReport ozl2_check(const ExpansionVector& v, const FamilySpec& fam, long s, int mu) {
    if (!fam.finite())
        raise(ErrorCode::InfiniteSupport,
              "the weighted-l2 check needs a finite family; use the strict bounds instead");
    for (long i : v.sparsity())
        if (!fam.in_support(i))
            raise(ErrorCode::SupportViolation,
                  "sparsity index " + std::to_string(i) + " outside the support");
    if (!fam.in_support(s))
        raise(ErrorCode::SupportViolation, "s must lie in the support");
    checked_multiplicity(v, mu);

    Rational ws = weight(fam, s);
    Rational sum(0);
    for (long i : v.sparsity()) {
        const Rational& ai = v.a_at(static_cast<int>(i));
        sum += ai * ai / weight(fam, i);
    }
    Rational lhs = ws * ws * sum;

    Rational a_s = s >= 0 && s <= v.n() ? v.a_at(static_cast<int>(s)) : Rational(0);
    Rational tail = tail_sum(fam, s, mu).exact();
    Rational rhs(0);
    if (!a_s.is_zero()) {
        if (tail.is_zero())
            throw std::logic_error("vanishing kernel tail with a nonzero coefficient");
        rhs = a_s * a_s / tail;
    }

    BoundReport report;
    report.name = "ozl2";
    push(report, "family", fam.describe());
    push(report, "s", std::to_string(s));
    push(report, "mu", std::to_string(mu));
    exact_verdict(report, lhs, rhs);
    return report;
}

BoundReport condg2_check(const ExpansionVector& v, const FamilySpec& fam, long s, int mu) {
    if (fam.in_support(s))
        raise(ErrorCode::SupportViolation, "s must be excluded from the support");
    for (long i : v.sparsity())
        if (i != s && !fam.in_support(i))
            raise(ErrorCode::SupportViolation,
                  "sparsity index " + std::to_string(i) + " outside the support");
    checked_multiplicity(v, mu);
    int r = (mu - 1) / 2;
    if (fam.finite() && r > fam.n())
        raise(ErrorCode::InvalidParameters, "kernel order exceeds the family degree bound");

    Rational lhs(0);
    for (long i : v.sparsity()) {
        if (i == s) continue;
        Rational ratio = v.a_at(static_cast<int>(i)).abs() / weight(fam, i);
        if (ratio > lhs) lhs = ratio;
    }

    Rational a_s = s >= 0 && s <= v.n() ? v.a_at(static_cast<int>(s)) : Rational(0);
    Rational rhs = a_s.abs() * kernel(fam, s, s, 0, r);

    BoundReport report;
    report.name = "condg2";
    push(report, "family", fam.describe());
    push(report, "s", std::to_string(s));
    push(report, "mu", std::to_string(mu));
    push(report, "kernel_order", std::to_string(r));
    exact_verdict(report, lhs, rhs);
    return report;
}

Rational eq1_bound(int n, int mu) {
    if (n < 0 || mu < 0 || mu > n)
        raise(ErrorCode::ParameterDomain, "need 0 <= mu <= n");
    Rational nf = Rational::factorial(static_cast<unsigned long>(n));
    return Rational::factorial(static_cast<unsigned long>(n - mu))
         * Rational::factorial(static_cast<unsigned long>(n + mu)) / (nf * nf);
}

BoundReport eq1_check(const ExpansionVector& v) {
    int mu = multiplicity_from_coeffs(v);
    if (mu < 1)
        raise(ErrorCode::MultiplicityTooSmall, "the bound needs mu >= 1");
    const int n = v.n();

    Rational lhs(0);
    for (int i = 0; i <= n; ++i) lhs += v.a_at(i) * v.a_at(i);
    Rational a0_sq = v.a_at(0) * v.a_at(0);
    Rational rhs = eq1_bound(n, mu) * a0_sq;

    BoundReport report;
    report.name = "eq1";
    push(report, "n", std::to_string(n));
    push(report, "mu", std::to_string(mu));
    exact_verdict(report, lhs, rhs);

    // Weaker exponential form of the same bound.
    Rational exponent(2L * mu * mu, 2L * n + 1);
    push(report, "weak_rhs", std::to_string(exp_approx(exponent) * a0_sq.to_double()));
    if (!a0_sq.is_zero()) {
        ExpCompare weak = compare_with_exp(lhs / a0_sq, exponent);
        push(report, "weak_holds", verdict_string(weak.cmp, false));
    } else {
        push(report, "weak_holds", "true");
    }
    return report;
}

BoundReport eq2_check(const ExpansionVector& v) {
    if (v.all_zero())
        raise(ErrorCode::AllZero, "empty expansion");
    if (v.a_at(0).is_zero())
        raise(ErrorCode::ZeroLeadCoefficient, "the ratio form needs a_0 != 0");
    int mu = multiplicity_from_coeffs(v);
    if (mu < 1)
        raise(ErrorCode::MultiplicityTooSmall, "the bound needs mu >= 1");
    const int n = v.n();
    int s = (mu + 1) / 2;

    Rational a0_abs = v.a_at(0).abs();
    Rational max_ratio(0);
    for (int k = 1; k <= n; ++k) {
        Rational ratio = v.a_at(k).abs() / a0_abs;
        if (ratio > max_ratio) max_ratio = ratio;
    }
    Rational lhs = Rational(1) + max_ratio;
    Rational nf = Rational::factorial(static_cast<unsigned long>(n));
    Rational rhs = Rational::factorial(static_cast<unsigned long>(n - s))
                 * Rational::factorial(static_cast<unsigned long>(n + s)) / (nf * nf);

    BoundReport report;
    report.name = "eq2";
    push(report, "n", std::to_string(n));
    push(report, "mu", std::to_string(mu));
    push(report, "half_order", std::to_string(s));
    exact_verdict(report, lhs, rhs);

    Rational exponent(2L * s * s, 2L * n + 1);
    push(report, "weak_rhs", std::to_string(exp_approx(exponent)));
    ExpCompare weak = compare_with_exp(lhs, exponent);
    push(report, "weak_holds", verdict_string(weak.cmp, false));
    return report;
}

BoundReport eq3_check(const ExpansionVector& v, const Rational& q) {
    if (!q.is_positive())
        raise(ErrorCode::ParameterDomain, "q must be positive");
    if (v.all_zero())
        raise(ErrorCode::AllZero, "empty expansion");
    if (v.a_at(0).is_zero())
        raise(ErrorCode::ZeroLeadCoefficient, "the bound needs a_0 != 0");
    int mu = multiplicity_from_coeffs(v);
    if (mu < 1)
        raise(ErrorCode::MultiplicityTooSmall, "the bound needs mu >= 1");
    const int n = v.n();

    Rational lhs(0);
    for (int i = 0; i <= n; ++i) {
        if (v.a_at(i).is_zero()) continue;
        lhs += v.a_at(i) * v.a_at(i) * q_power(q, -i)
             / binomial(static_cast<long>(n), static_cast<unsigned long>(i));
    }
    Rational partial(0);
    for (int i = 0; i < mu; ++i)
        partial += binomial(static_cast<long>(n), static_cast<unsigned long>(i)) * q_power(q, i);
    Rational denom = Rational(1) - (Rational(1) + q).pow(-n) * partial;
    Rational rhs = v.a_at(0) * v.a_at(0) / denom;  // denom > 0: partial binomial sum < (1+q)^n

    BoundReport report;
    report.name = "eq3";
    push(report, "n", std::to_string(n));
    push(report, "mu", std::to_string(mu));
    push(report, "q", q.str());
    exact_verdict(report, lhs, rhs);
    return report;
}

BoundReport strict_bound_check(const ExpansionVector& v, StrictBound which, const Rational& q) {
    if (v.all_zero())
        raise(ErrorCode::AllZero, "empty expansion");
    if (v.a_at(0).is_zero())
        raise(ErrorCode::ZeroLeadCoefficient, "the bound needs a_0 != 0");
    if (which == StrictBound::Charlier3) {
        if (!q.is_positive())
            raise(ErrorCode::ParameterDomain, "q must be positive");
    } else if (q <= Rational(1)) {
        raise(ErrorCode::ParameterDomain, "q must exceed 1");
    }
    int mu = multiplicity_from_coeffs(v);
    if (mu < 1)
        raise(ErrorCode::MultiplicityTooSmall, "the bound needs mu >= 1");
    const int n = v.n();

    BoundReport report;
    report.strict = true;
    push(report, "n", std::to_string(n));
    push(report, "mu", std::to_string(mu));
    push(report, "q", q.str());

    switch (which) {
        case StrictBound::Meixner1: {
            report.name = "meixner1";
            Rational lhs(0);
            for (int i = 0; i <= n; ++i)
                lhs += v.a_at(i) * v.a_at(i) * q_power(q, i);
            Rational rhs = v.a_at(0) * v.a_at(0) * q_power(q, mu);
            exact_verdict(report, lhs, rhs);
            return report;
        }
        case StrictBound::Meixner2: {
            report.name = "meixner2";
            Rational lhs(0);
            for (int i = 0; i <= n; ++i) {
                Rational value = v.a_at(i).abs() * q_power(q, i);
                if (value > lhs) lhs = value;
            }
            int r = (mu - 1) / 2;
            Rational rhs = (q_power(q, r) - Rational(1) / q) * v.a_at(0).abs();
            exact_verdict(report, lhs, rhs);
            return report;
        }
        case StrictBound::Charlier3: {
            report.name = "charlier3";
            Rational lhs(0);
            for (int i = 0; i <= n; ++i) {
                if (v.a_at(i).is_zero()) continue;
                lhs += v.a_at(i) * v.a_at(i) * q_power(q, -i)
                     * Rational::factorial(static_cast<unsigned long>(i));
            }
            Rational a0_sq = v.a_at(0) * v.a_at(0);
            Rational truncated_exp(0);
            Rational pow(1);
            for (int i = 0; i < mu; ++i) {
                truncated_exp += pow / Rational::factorial(static_cast<unsigned long>(i));
                pow *= q;
            }
            report.lhs = BoundSide::of(lhs);
            double e_neg_q = exp_approx(-q);
            report.rhs = BoundSide::of_approx(
                a0_sq.to_double() / (1.0 - e_neg_q * truncated_exp.to_double()));
            // lhs > a0^2 / (1 - e^{-q} T)  <=>  (lhs - a0^2) / (lhs T) > e^{-q};
            // mu >= 1 forces a second nonzero coefficient, so lhs > a0^2.
            Rational margin = lhs - a0_sq;
            if (!margin.is_positive()) {
                report.verdict = Verdict::Fails;
                return report;
            }
            exp_verdict(report, margin / (lhs * truncated_exp), -q);
            return report;
        }
    }
    raise(ErrorCode::InvalidParameters, "unknown strict bound");
}

BoundReport oze_check(int n, int k) {
    if (k < 0 || k > n)
        raise(ErrorCode::ParameterDomain, "need 0 <= k <= n");
    Rational lhs = eq1_bound(n, k);
    Rational exponent(2L * k * k, 2L * n + 1);

    BoundReport report;
    report.name = "oze";
    push(report, "n", std::to_string(n));
    push(report, "k", std::to_string(k));
    report.lhs = BoundSide::of(lhs);
    report.rhs = BoundSide::of_approx(exp_approx(exponent));
    exp_verdict(report, lhs, exponent);
    return report;
}

std::pair<BoundReport, BoundReport> schur_bounds(const SchurInput& input,
                                                 const Rational& norm_l2_sq,
                                                 const Rational& norm_l1) {
    if (!input.a0.is_positive() || !input.an.is_positive())
        raise(ErrorCode::ParameterDomain, "a_0 and a_n must be positive");
    if (input.n < 1 || input.nu < 0 || input.nu > input.n)
        raise(ErrorCode::ParameterDomain, "need 0 <= nu <= n, n >= 1");
    if (norm_l2_sq.is_negative() || norm_l1.is_negative())
        raise(ErrorCode::ParameterDomain, "norms must be nonnegative");

    long n = input.n;
    long nu = input.nu;
    Rational product = input.a0 * input.an;

    BoundReport first;
    first.name = "schur1";
    push(first, "n", std::to_string(n));
    push(first, "nu", std::to_string(nu));
    Rational exp1(nu * nu - nu, 2 * n);
    first.lhs = BoundSide::of(norm_l2_sq);
    if (exp1.is_zero()) {
        exact_verdict(first, norm_l2_sq, Rational(2) * product);
    } else {
        first.rhs = BoundSide::of_approx(2.0 * product.to_double() * exp_approx(exp1));
        exp_verdict(first, norm_l2_sq / (Rational(2) * product), exp1);
    }

    BoundReport second;
    second.name = "schur2";
    push(second, "n", std::to_string(n));
    push(second, "nu", std::to_string(nu));
    second.lhs = BoundSide::of(norm_l1);
    Rational exp2(nu * nu, 4 * n);
    // Compare the squares: norm^2 / (a_0 a_n) vs e^{2 exp2}.
    mpz_class num_root, den_root;
    bool exact_root = mpz_perfect_square_p(product.num().get_mpz_t())
                   && mpz_perfect_square_p(product.den().get_mpz_t());
    if (exp2.is_zero() && exact_root) {
        mpz_sqrt(num_root.get_mpz_t(), product.num().get_mpz_t());
        mpz_sqrt(den_root.get_mpz_t(), product.den().get_mpz_t());
        exact_verdict(second, norm_l1, Rational(num_root, den_root));
    } else {
        second.rhs = BoundSide::of_approx(
            std::sqrt(product.to_double()) * exp_approx(exp2));
        exp_verdict(second, norm_l1 * norm_l1 / product, Rational(2) * exp2);
    }
    return {std::move(first), std::move(second)};
}

int max_mu_for_norm(int n, NormConstraint which, const Rational& B, const Rational& q) {
    if (n < 0)
        raise(ErrorCode::ParameterDomain, "n must be nonnegative");
    if (B < Rational(1))
        raise(ErrorCode::ParameterDomain, "the norm budget B must be at least 1");
    if (which == NormConstraint::KrawWeighted && !q.is_positive())
        raise(ErrorCode::ParameterDomain, "q must be positive");

    Rational nf = Rational::factorial(static_cast<unsigned long>(n));
    Rational nf_sq = nf * nf;
    auto bound_for = [&](int mu) -> Rational {
        switch (which) {
            case NormConstraint::L2Ratio:
                return eq1_bound(n, mu);
            case NormConstraint::LinfRatio: {
                int s = (mu + 1) / 2;
                return Rational::factorial(static_cast<unsigned long>(n - s))
                     * Rational::factorial(static_cast<unsigned long>(n + s)) / nf_sq;
            }
            case NormConstraint::KrawWeighted: {
                Rational partial(0);
                for (int i = 0; i < mu; ++i)
                    partial += binomial(static_cast<long>(n), static_cast<unsigned long>(i))
                             * q.pow(i);
                return Rational(1) / (Rational(1) - (Rational(1) + q).pow(-n) * partial);
            }
        }
        raise(ErrorCode::InvalidParameters, "unknown constraint");
    };

    int best = 0;
    for (int mu = 1; mu <= n; ++mu) {
        if (bound_for(mu) > B) break;  // bounds are nondecreasing in mu
        best = mu;
    }
    return best;
}

}  // namespace multizero
