// multizero: exact bound checks, discrete-family computations, extremal
// searches and the distance-distribution demo from the command line.
//
// Exit codes: 0 all checks hold, 1 some bound is violated, 2 usage or
// domain error, 3 a transcendental comparison stayed undecided.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "multizero/bounds.hpp"
#include "multizero/delta_basis.hpp"
#include "multizero/extremal.hpp"
#include "multizero/families.hpp"
#include "multizero/macwilliams.hpp"
#include "multizero/report.hpp"

using namespace multizero;
using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::string source = text;
    if (source == "-") {
        if (!std::getline(std::cin, source))
            raise(ErrorCode::ParseError, "no coefficient line on stdin");
    }
    std::vector<Rational> values;
    if (!source.empty() && source.front() == '[') {
        ordered_json arr = ordered_json::parse(source, nullptr, false);
        if (arr.is_discarded() || !arr.is_array())
            raise(ErrorCode::ParseError, "expected a JSON array");
        for (const auto& item : arr) {
            if (item.is_string())
                values.push_back(Rational::from_string(item.get<std::string>()));
            else if (item.is_number_integer())
                values.push_back(Rational(item.get<long>()));
            else
                raise(ErrorCode::ParseError, "array entries must be integers or \"p/q\" strings");
        }
        return values;
    }
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t comma = source.find(',', start);
        std::string piece = comma == std::string::npos ? source.substr(start)
                                                       : source.substr(start, comma - start);
        values.push_back(Rational::from_string(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

ordered_json rational_array(const std::vector<Rational>& values) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

struct FamilyFlags {
    std::string family;
    int n = -1;
    long shift = 0;
    std::string alpha = "0";
    std::string beta = "0";
    std::string q = "1";
    std::string lambda = "1";

    /// The bounds verb owns --n and --q itself, so those spellings are
    /// only aliased here for the families verb.
    void attach(CLI::App* cmd, bool required, bool own_n_and_q) {
        auto* opt = cmd->add_option("--family", family,
                                    "chebyshev|hahn|krawtchouk|meixner|charlier");
        if (required) opt->required();
        cmd->add_option(own_n_and_q ? "--n,--fam-n" : "--fam-n", n,
                        "support bound of the family");
        cmd->add_option("--shift", shift, "re-base a finite support to {shift..shift+n}");
        cmd->add_option("--alpha", alpha, "Hahn alpha");
        cmd->add_option("--beta", beta, "Hahn/Meixner beta");
        if (own_n_and_q) cmd->add_option("--q", q, "Krawtchouk/Meixner q");
        cmd->add_option("--lambda", lambda, "Charlier lambda");
    }

    FamilySpec build() const {
        if (family == "chebyshev") {
            require_n();
            return FamilySpec::discrete_chebyshev(n, shift);
        }
        if (family == "hahn") {
            require_n();
            return FamilySpec::hahn(n, Rational::from_string(alpha),
                                    Rational::from_string(beta), shift);
        }
        if (family == "krawtchouk") {
            require_n();
            return FamilySpec::krawtchouk(n, Rational::from_string(q), shift);
        }
        if (family == "meixner")
            return FamilySpec::meixner(Rational::from_string(beta), Rational::from_string(q));
        if (family == "charlier")
            return FamilySpec::charlier(Rational::from_string(lambda));
        raise(ErrorCode::ParseError, "unknown family '" + family + "'");
    }

  private:
    void require_n() const {
        if (n < 0)
            raise(ErrorCode::ParseError, "--n is required for finite families");
    }
};

int exit_code_for(const std::vector<BoundReport>& reports) {
    bool undecided = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Fails) return 1;
        if (r.verdict == Verdict::Undecided) undecided = true;
    }
    return undecided ? 3 : 0;
}

std::uint64_t node_budget_from_env() {
    const char* value = std::getenv("MULTIZERO_MAX_NODES");
    if (value == nullptr || *value == '\0') return 0;
    return std::strtoull(value, nullptr, 10);
}

struct Cli {
    int exit_code = 0;
    ReportOptions report_options;

    // families verb
    std::string families_op;
    FamilyFlags family_flags;
    long x = 0, y = 0, s = 0;
    int k = 0, lo = 0, hi = 0, mu = 0;

    // bounds verb
    std::string bound_name;
    std::string coeffs_text;
    std::string basis_name = "monomial";
    std::string basis_alpha = "0";
    int expansion_n = -1;
    std::string q_text = "1";
    long bound_s = 0;
    int bound_mu = 1;
    int oze_k = 0;
    std::string schur_a0 = "1", schur_an = "1", schur_l2, schur_l1;
    int schur_nu = 0;

    // verify verb
    int claimed_mu = 0;

    // search / table verbs
    int search_n = 1;
    std::string alphabet_text = "-1,0,1";
    bool allow_zero_a0 = false;
    bool no_prune = false;
    int threads = 1;
    std::size_t max_witnesses = 64;
    int n_from = 1, n_to = 8;

    // macwilliams verb
    std::string dist_text;
    int distance = 0;

    DeltaBasisSpec build_basis(int n) const {
        if (basis_name == "monomial") return DeltaBasisSpec::monomial(n);
        if (basis_name == "krawtchouk-product") return DeltaBasisSpec::krawtchouk_product(n);
        if (basis_name == "laguerre-ratio")
            return DeltaBasisSpec::laguerre_ratio(n, Rational::from_string(basis_alpha));
        raise(ErrorCode::ParseError, "unknown basis '" + basis_name + "'");
    }

    ExpansionVector read_expansion() const {
        if (coeffs_text.empty())
            raise(ErrorCode::ParseError, "--coeffs is required");
        std::vector<Rational> a = parse_rational_list(coeffs_text);
        if (a.empty())
            raise(ErrorCode::ParseError, "empty coefficient list");
        int n = static_cast<int>(a.size()) - 1;
        if (expansion_n >= 0 && expansion_n != n)
            raise(ErrorCode::ParseError,
                  "--n says " + std::to_string(expansion_n) + " but "
                      + std::to_string(n + 1) + " coefficients were given");
        return ExpansionVector(build_basis(n), std::move(a));
    }

    void run_families() {
        FamilySpec fam = family_flags.build();
        ordered_json out;
        out["op"] = families_op;
        out["family"] = fam.describe();
        if (families_op == "weight") {
            out["x"] = x;
            out["value"] = render_rational(weight(fam, x), report_options);
        } else if (families_op == "value") {
            out["k"] = k;
            out["x"] = x;
            out["value"] = render_rational(unnormalized_value(fam, k, x), report_options);
        } else if (families_op == "norm") {
            out["k"] = k;
            out["value"] = render_rational(norm_constant(fam, k), report_options);
            if (fam.unit_kind() != UnitKind::One) out["unit"] = fam.unit_label();
        } else if (families_op == "gsq") {
            out["k"] = k;
            out["x"] = x;
            out["value"] = render_rational(g_squared(fam, k, x), report_options);
            if (fam.unit_kind() != UnitKind::One) out["unit"] = fam.unit_label();
        } else if (families_op == "kernel") {
            out["s"] = s;
            out["x"] = x;
            out["lo"] = lo;
            out["hi"] = hi;
            out["value"] = render_rational(kernel(fam, s, x, lo, hi), report_options);
            if (fam.unit_kind() != UnitKind::One) out["unit"] = fam.unit_label();
        } else if (families_op == "tail") {
            TailSum tail = tail_sum(fam, s, mu);
            out["s"] = s;
            out["mu"] = mu;
            if (tail.is_exact()) {
                out["value"] = render_rational(tail.rational_part, report_options);
            } else {
                out["rational_part"] = render_rational(tail.rational_part, report_options);
                out["unit_part"] = render_rational(tail.unit_part, report_options);
                out["unit"] = fam.unit_label();
            }
        } else if (families_op == "dual") {
            out["x"] = x;
            out["y"] = y;
            out["value"] = render_rational(dual_orthogonality_check(fam, x, y), report_options);
        } else {
            raise(ErrorCode::ParseError, "unknown families operation '" + families_op + "'");
        }
        std::cout << out.dump(2) << "\n";
    }

    void run_bounds() {
        std::vector<BoundReport> reports;
        if (bound_name == "oze") {
            if (expansion_n < 0)
                raise(ErrorCode::ParseError, "oze needs --n and --k");
            reports.push_back(oze_check(expansion_n, oze_k));
        } else if (bound_name == "schur") {
            Rational l2, l1;
            SchurInput input;
            input.nu = schur_nu;
            if (!coeffs_text.empty()) {
                std::vector<Rational> a = parse_rational_list(coeffs_text);
                int top = static_cast<int>(a.size()) - 1;
                while (top > 0 && a[static_cast<std::size_t>(top)].is_zero()) --top;
                input.n = top;
                input.a0 = a[0].abs();
                input.an = a[static_cast<std::size_t>(top)].abs();
                for (const auto& ai : a) {
                    l2 += ai * ai;
                    l1 += ai.abs();
                }
            } else {
                if (schur_l2.empty() || schur_l1.empty() || expansion_n < 1)
                    raise(ErrorCode::ParseError,
                          "schur needs --coeffs or all of --a0 --an --n --l2 --l1");
                input.a0 = Rational::from_string(schur_a0);
                input.an = Rational::from_string(schur_an);
                input.n = expansion_n;
                l2 = Rational::from_string(schur_l2);
                l1 = Rational::from_string(schur_l1);
            }
            auto [first, second] = schur_bounds(input, l2, l1);
            reports.push_back(std::move(first));
            reports.push_back(std::move(second));
        } else {
            ExpansionVector v = read_expansion();
            if (bound_name == "eq1") {
                reports.push_back(eq1_check(v));
            } else if (bound_name == "eq2") {
                reports.push_back(eq2_check(v));
            } else if (bound_name == "eq3") {
                reports.push_back(eq3_check(v, Rational::from_string(q_text)));
            } else if (bound_name == "meixner1") {
                reports.push_back(strict_bound_check(v, StrictBound::Meixner1,
                                                     Rational::from_string(q_text)));
            } else if (bound_name == "meixner2") {
                reports.push_back(strict_bound_check(v, StrictBound::Meixner2,
                                                     Rational::from_string(q_text)));
            } else if (bound_name == "charlier3") {
                reports.push_back(strict_bound_check(v, StrictBound::Charlier3,
                                                     Rational::from_string(q_text)));
            } else if (bound_name == "ozl2") {
                family_flags.q = q_text;
                reports.push_back(ozl2_check(v, family_flags.build(), bound_s, bound_mu));
            } else if (bound_name == "condg2") {
                family_flags.q = q_text;
                reports.push_back(condg2_check(v, family_flags.build(), bound_s, bound_mu));
            } else {
                raise(ErrorCode::ParseError, "unknown bound '" + bound_name + "'");
            }
        }
        std::fputs(emit_report(reports, report_options).c_str(), stdout);
        exit_code = exit_code_for(reports);
    }

    void run_verify() {
        std::vector<Rational> coeffs = parse_rational_list(coeffs_text);
        bool ok = verify_witness(coeffs, claimed_mu);
        ordered_json out;
        out["coeffs"] = rational_array(coeffs);
        out["claimed_mu"] = claimed_mu;
        out["verified"] = ok;
        std::cout << out.dump(2) << "\n";
        exit_code = ok ? 0 : 1;
    }

    void run_search() {
        SearchProblem problem;
        problem.n = search_n;
        problem.alphabet = parse_rational_list(alphabet_text);
        problem.require_a0_nonzero = !allow_zero_a0;
        SearchOptions options;
        options.prune = !no_prune;
        options.threads = threads;
        options.max_witnesses = max_witnesses;
        options.node_budget = node_budget_from_env();
        SearchResult r = search_max_multiplicity(problem, options);

        ordered_json out;
        out["n"] = problem.n;
        out["alphabet"] = rational_array(problem.alphabet);
        out["mu_max"] = r.mu_max;
        out["bound_used"] = r.bound_used;
        out["nodes_explored"] = r.nodes_explored;
        out["total_witnesses"] = r.total_witnesses;
        ordered_json witnesses = ordered_json::array();
        for (const auto& w : r.witnesses) witnesses.push_back(rational_array(w));
        out["witnesses"] = witnesses;
        std::cout << out.dump(2) << "\n";
        exit_code = r.mu_max <= r.bound_used ? 0 : 1;
    }

    void run_macwilliams() {
        std::vector<Rational> b = parse_rational_list(dist_text);
        DistanceDistribution dist(static_cast<int>(b.size()) - 1, b);
        std::vector<Rational> dual = macwilliams_transform(dist);
        Polynomial poly = code_polynomial(dist);

        ordered_json out;
        out["n"] = dist.n();
        out["size"] = dist.size().str();
        out["b"] = rational_array(dist.b());
        out["dual"] = rational_array(dual);
        std::vector<Rational> poly_coeffs(static_cast<std::size_t>(dist.n()) + 1, Rational(0));
        for (int i = 0; i <= poly.degree(); ++i)
            poly_coeffs[static_cast<std::size_t>(i)] = poly.coeff(i);
        out["code_polynomial"] = rational_array(poly_coeffs);

        // The two transform identities must agree exactly.
        bool consistent = true;
        for (int i = 0; i <= dist.n(); ++i)
            if (poly.coeff(i) != dist.size() * dual[static_cast<std::size_t>(i)])
                consistent = false;
        out["transform_identity"] = consistent;

        if (distance > 0) {
            auto [quotient, mu_value] = vanishing_factor(dist, distance);
            ordered_json vanish;
            vanish["d"] = distance;
            vanish["mu"] = mu_value;
            std::vector<Rational> qc(quotient.coeffs());
            vanish["quotient"] = rational_array(qc);
            vanish["mu_at_least_d"] = mu_value >= distance;
            out["vanishing"] = vanish;
            if (mu_value < distance) consistent = false;
        }
        std::cout << out.dump(2) << "\n";
        exit_code = consistent ? 0 : 1;
    }

    void run_table() {
        SearchOptions options;
        options.threads = threads;
        options.node_budget = node_budget_from_env();
        auto rows = bound_vs_search_table(n_from, n_to, parse_rational_list(alphabet_text),
                                          options);
        bool sound = true;
        if (report_options.format == ReportFormat::Csv) {
            std::string text = "n,mu_star,cap,envelope\n";
            for (const auto& row : rows) {
                text += std::to_string(row.n) + "," + std::to_string(row.mu_star) + ","
                      + std::to_string(row.cap) + ","
                      + render_double(row.envelope, report_options.precision) + "\n";
                sound = sound && row.mu_star <= row.cap;
            }
            std::fputs(text.c_str(), stdout);
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json j;
                j["n"] = row.n;
                j["mu_star"] = row.mu_star;
                j["cap"] = row.cap;
                j["envelope"] = row.envelope;
                arr.push_back(j);
                sound = sound && row.mu_star <= row.cap;
            }
            std::cout << arr.dump(2) << "\n";
        }
        exit_code = sound ? 0 : 1;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicity bounds from discrete orthogonal families"};
    app.require_subcommand(1);
    Cli cli;

    std::string format_name = "json";
    bool decimal = false;
    int precision = 17;
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_flag("--decimal", decimal, "render rationals as decimals");
        cmd->add_option("--precision", precision, "significant digits for --decimal");
    };
    // Callbacks fire while parsing, so the rendering options must be
    // folded in before each verb runs.
    auto apply_format = [&] {
        cli.report_options.format =
            format_name == "csv" ? ReportFormat::Csv : ReportFormat::Json;
        cli.report_options.decimal = decimal;
        cli.report_options.precision = precision;
    };

    CLI::App* families_cmd = app.add_subcommand("families", "evaluate one family quantity");
    families_cmd->add_option("op", cli.families_op, "weight|value|norm|gsq|kernel|tail|dual")
        ->required();
    cli.family_flags.attach(families_cmd, true, true);
    families_cmd->add_option("--x", cli.x, "support point");
    families_cmd->add_option("--y", cli.y, "second support point");
    families_cmd->add_option("--s", cli.s, "distinguished point");
    families_cmd->add_option("--k", cli.k, "degree index");
    families_cmd->add_option("--lo", cli.lo, "kernel degree range start");
    families_cmd->add_option("--hi", cli.hi, "kernel degree range end");
    families_cmd->add_option("--mu", cli.mu, "tail start");
    add_format(families_cmd);
    families_cmd->callback([&] { apply_format(); cli.run_families(); });

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate and verify one inequality");
    bounds_cmd
        ->add_option("name", cli.bound_name,
                     "eq1|eq2|eq3|ozl2|condg2|meixner1|meixner2|charlier3|oze|schur")
        ->required();
    bounds_cmd->add_option("--coeffs", cli.coeffs_text,
                           "comma-separated rationals, or '-' for stdin");
    bounds_cmd->add_option("--n", cli.expansion_n, "expected expansion length minus one");
    bounds_cmd->add_option("--basis", cli.basis_name,
                           "monomial|krawtchouk-product|laguerre-ratio");
    bounds_cmd->add_option("--basis-alpha", cli.basis_alpha, "laguerre-ratio alpha");
    bounds_cmd->add_option("--q", cli.q_text, "bound parameter q");
    bounds_cmd->add_option("--s", cli.bound_s, "distinguished index");
    bounds_cmd->add_option("--mu", cli.bound_mu, "stated multiplicity");
    bounds_cmd->add_option("--k", cli.oze_k, "k for the factorial-ratio bound");
    cli.family_flags.attach(bounds_cmd, false, false);
    bounds_cmd->add_option("--a0", cli.schur_a0, "schur a_0");
    bounds_cmd->add_option("--an", cli.schur_an, "schur a_n");
    bounds_cmd->add_option("--nu", cli.schur_nu, "number of real roots");
    bounds_cmd->add_option("--l2", cli.schur_l2, "sum of squared coefficients");
    bounds_cmd->add_option("--l1", cli.schur_l1, "sum of absolute coefficients");
    add_format(bounds_cmd);
    bounds_cmd->callback([&] { apply_format(); cli.run_bounds(); });

    CLI::App* verify_cmd = app.add_subcommand("verify", "double-check a witness");
    verify_cmd->add_option("--coeffs", cli.coeffs_text, "monomial coefficients")->required();
    verify_cmd->add_option("--mu", cli.claimed_mu, "claimed multiplicity")->required();
    verify_cmd->callback([&] { cli.run_verify(); });

    CLI::App* search_cmd = app.add_subcommand("search", "extremal multiplicity search");
    search_cmd->add_option("--n", cli.search_n, "degree bound")->required();
    search_cmd->add_option("--alphabet", cli.alphabet_text, "comma-separated alphabet");
    search_cmd->add_flag("--allow-zero-a0", cli.allow_zero_a0, "do not force a_0 != 0");
    search_cmd->add_flag("--no-prune", cli.no_prune, "disable moment pruning");
    search_cmd->add_option("--threads", cli.threads, "worker threads");
    search_cmd->add_option("--max-witnesses", cli.max_witnesses, "witness list cap");
    search_cmd->callback([&] { cli.run_search(); });

    CLI::App* mac_cmd = app.add_subcommand("macwilliams", "distance-distribution transform");
    mac_cmd->add_option("--dist", cli.dist_text, "distribution as JSON array or CSV")
        ->required();
    mac_cmd->add_option("--d", cli.distance, "code distance for the vanishing factor");
    mac_cmd->callback([&] { cli.run_macwilliams(); });

    CLI::App* table_cmd = app.add_subcommand("table", "searched optimum versus the cap");
    table_cmd->add_option("--n-from", cli.n_from, "first degree")->required();
    table_cmd->add_option("--n-to", cli.n_to, "last degree")->required();
    table_cmd->add_option("--alphabet", cli.alphabet_text, "comma-separated alphabet");
    table_cmd->add_option("--threads", cli.threads, "worker threads");
    add_format(table_cmd);
    table_cmd->callback([&] { apply_format(); cli.run_table(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        ordered_json err;
        err["error"] = "Usage";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        ordered_json err;
        err["error"] = error_code_name(e.code());
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return cli.exit_code;
}
