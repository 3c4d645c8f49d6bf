#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multizero/delta_basis.hpp"
#include "multizero/families.hpp"
#include "multizero/rational.hpp"
#include "multizero/transcendental.hpp"

namespace multizero {

enum class Verdict { Holds, Fails, Undecided };

const char* verdict_name(Verdict v);

/// One side of an inequality: exact when rational, otherwise only the
/// double rendering (the verdict itself never relies on doubles).
struct BoundSide {
    std::optional<Rational> exact;
    double approx = 0.0;

    static BoundSide of(const Rational& v) { return {v, v.to_double()}; }
    static BoundSide of_approx(double v) { return {std::nullopt, v}; }
};

/// One evaluated inequality.
struct BoundReport {
    std::string name;
    BoundSide lhs;
    BoundSide rhs;
    bool strict = false;
    Verdict verdict = Verdict::Holds;
    bool sharp = false;
    std::vector<std::pair<std::string, std::string>> context;

    bool holds() const { return verdict == Verdict::Holds; }
};

/// Weighted-l2 lower bound at a support point s:
///   w(s)^2 sum_i a_i^2/w(i)  >=  a_s^2 / sum_{j=mu..n} g_j(s)^2.
/// Finite families; the sparsity set must lie in the support and
/// 1 <= mu <= multiplicity of the expansion.
BoundReport ozl2_check(const ExpansionVector& v, const FamilySpec& fam, long s, int mu);

/// Kernel-diagonal bound at a point s outside the support:
///   max_{k in D} |a_k|/w(k)  >=  |a_s| sum_{j=0..floor((mu-1)/2)} g_j(s)^2.
BoundReport condg2_check(const ExpansionVector& v, const FamilySpec& fam, long s, int mu);

/// (n-mu)! (n+mu)! / n!^2
Rational eq1_bound(int n, int mu);

/// sum |a_i|^2 >= eq1_bound(n, mu) * |a_0|^2 (sharp; attained by the
/// expansion of (1-x)^n).
BoundReport eq1_check(const ExpansionVector& v);

/// 1 + max_{k>=1} |a_k/a_0| >= (n-s)!(n+s)!/n!^2 with s = floor((mu+1)/2).
BoundReport eq2_check(const ExpansionVector& v);

/// Binomially weighted l2 bound at parameter q > 0:
///   sum a_i^2 q^{-i}/C(n,i) >= a_0^2 / (1 - (1+q)^{-n} sum_{i<mu} C(n,i) q^i).
BoundReport eq3_check(const ExpansionVector& v, const Rational& q);

/// The three strict bounds from the infinite-support families. They can
/// never be attained, so every verdict demands strict inequality.
enum class StrictBound { Meixner1, Meixner2, Charlier3 };

BoundReport strict_bound_check(const ExpansionVector& v, StrictBound which, const Rational& q);

/// (n-k)!(n+k)!/n!^2 >= e^{2k^2/(2n+1)} for 0 <= k <= n.
BoundReport oze_check(int n, int k);

struct SchurInput {
    Rational a0;
    Rational an;
    int n = 1;
    /// Number of real roots, supplied by the caller.
    int nu = 0;
};

/// Root-count comparison formulas:
///   sum |a_i|^2 >= 2 a_0 a_n e^{(nu^2-nu)/2n},
///   sum |a_i|   >= sqrt(a_0 a_n) e^{nu^2/4n}.
/// Pure formula evaluators; no claim is made about nu.
std::pair<BoundReport, BoundReport> schur_bounds(const SchurInput& input,
                                                 const Rational& norm_l2_sq,
                                                 const Rational& norm_l1);

enum class NormConstraint { L2Ratio, LinfRatio, KrawWeighted };

/// Largest mu in [0, n] whose closed-form bound (with |a_0| = 1) does not
/// exceed B; exact monotone scan. KrawWeighted additionally takes q > 0.
int max_mu_for_norm(int n, NormConstraint which, const Rational& B,
                    const Rational& q = Rational(1));

}  // namespace multizero
