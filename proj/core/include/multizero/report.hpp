#pragma once

#include <string>
#include <vector>

#include "multizero/bounds.hpp"

namespace multizero {

enum class ReportFormat { Json, Csv };

struct ReportOptions {
    ReportFormat format = ReportFormat::Json;
    /// Render rational sides as decimals instead of "p/q".
    bool decimal = false;
    int precision = 17;
};

/// Serializes reports deterministically. JSON: an array of objects with
/// fields name, lhs, rhs, holds, sharp, strict, verdict, context; exact
/// rationals appear as "p/q" strings. CSV: the same columns with the
/// context flattened to "key=value" pairs separated by ';'.
std::string emit_report(const std::vector<BoundReport>& reports,
                        const ReportOptions& options = {});

/// "p/q", or a decimal rendering when requested.
std::string render_rational(const Rational& value, const ReportOptions& options);

/// Shortest-round-trip style rendering used for non-rational sides.
std::string render_double(double value, int precision);

}  // namespace multizero
