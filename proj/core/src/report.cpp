#include "multizero/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace multizero {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string render_side(const BoundSide& side, const ReportOptions& options) {
    if (side.exact && !options.decimal)
        return side.exact->str();
    return render_double(side.approx, options.precision);
}

ordered_json report_to_json(const BoundReport& report, const ReportOptions& options) {
    ordered_json j;
    j["name"] = report.name;
    j["lhs"] = render_side(report.lhs, options);
    j["rhs"] = render_side(report.rhs, options);
    j["holds"] = report.holds();
    j["sharp"] = report.sharp;
    j["strict"] = report.strict;
    j["verdict"] = verdict_name(report.verdict);
    ordered_json ctx = ordered_json::object();
    for (const auto& [key, value] : report.context) ctx[key] = value;
    j["context"] = ctx;
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string render_rational(const Rational& value, const ReportOptions& options) {
    if (!options.decimal) return value.str();
    return render_double(value.to_double(), options.precision);
}

std::string render_double(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    return buf;
}

std::string emit_report(const std::vector<BoundReport>& reports, const ReportOptions& options) {
    if (options.format == ReportFormat::Json) {
        ordered_json arr = ordered_json::array();
        for (const auto& report : reports)
            arr.push_back(report_to_json(report, options));
        return arr.dump(2) + "\n";
    }

    std::string out = "name,lhs,rhs,holds,sharp,strict,context\n";
    for (const auto& report : reports) {
        std::string ctx;
        for (const auto& [key, value] : report.context) {
            if (!ctx.empty()) ctx += ";";
            ctx += key + "=" + value;
        }
        out += csv_escape(report.name) + ","
             + csv_escape(render_side(report.lhs, options)) + ","
             + csv_escape(render_side(report.rhs, options)) + ","
             + (report.holds() ? "true" : "false") + ","
             + (report.sharp ? "true" : "false") + ","
             + (report.strict ? "true" : "false") + ","
             + csv_escape(ctx) + "\n";
    }
    return out;
}

}  // namespace multizero
