#pragma once

#include "multizero/rational.hpp"

namespace multizero {

enum class Cmp { Less, Equal, Greater, Undecided };

struct ExpCompare {
    Cmp cmp = Cmp::Undecided;
    /// Working precision (bits) at which the sides separated.
    long bits_used = 0;
};

/// Decides value <=> e^exponent for exact rational inputs. Equality is
/// exact (possible only at exponent 0); otherwise the sides are bracketed
/// with directed rounding and the precision doubled until they separate.
/// Returns Undecided only when max_bits is reached, never a wrong verdict.
ExpCompare compare_with_exp(const Rational& value, const Rational& exponent,
                            long start_bits = 128, long max_bits = 512);

/// e^exponent as a double, for report rendering only.
double exp_approx(const Rational& exponent);

}  // namespace multizero
