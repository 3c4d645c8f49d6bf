#pragma once

#include <utility>
#include <vector>

#include "multizero/polynomial.hpp"
#include "multizero/rational.hpp"

namespace multizero {

/// Distance distribution of a binary code of length n: B_0 = 1, all
/// entries nonnegative. Rational entries are accepted; nothing here
/// needs integrality.
class DistanceDistribution {
  public:
    DistanceDistribution(int n, std::vector<Rational> b);

    int n() const { return n_; }
    const std::vector<Rational>& b() const { return b_; }
    /// |C| = sum of the distribution.
    Rational size() const;

  private:
    int n_ = 0;
    std::vector<Rational> b_;
};

/// Coefficient of z^j in (1-z)^x (1+z)^(n-x).
Rational krawtchouk_gf(int j, int n, long x);

/// Dual distribution B'_i = (1/|C|) * sum_j B_j K_i(j).
std::vector<Rational> macwilliams_transform(const DistanceDistribution& dist);

/// sum_i B_i (1-x)^i (1+x)^(n-i), expanded; equals |C| * sum_i B'_i x^i.
Polynomial code_polynomial(const DistanceDistribution& dist);

/// For a distribution with B_1 = ... = B_{d-1} = 0, factors the i >= d
/// part of the code polynomial as (1-x)^d * Q and returns (Q, mu) with
/// mu the exact multiplicity at 1 of that part; mu >= d.
std::pair<Polynomial, int> vanishing_factor(const DistanceDistribution& dist, int d);

}  // namespace multizero
