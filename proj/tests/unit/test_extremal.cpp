#include "doctest.h"

#include "multizero/extremal.hpp"

#include <cstdlib>

#include "multizero/delta_basis.hpp"
#include "multizero/polynomial.hpp"
#include "support/oracles.hpp"

using namespace multizero;

namespace {

std::vector<Rational> rat(std::vector<long> ints) {
    std::vector<Rational> c;
    c.reserve(ints.size());
    for (long v : ints) c.emplace_back(v);
    return c;
}

struct Enumerated {
    int mu_max = -1;
    std::vector<std::vector<Rational>> witnesses;
    std::uint64_t count = 0;
};

// Odometer enumeration with the same admissibility rules as the search
// (a_0 constraint, canonical sign when the alphabet is symmetric), but an
// independent multiplicity path: synthetic division of the polynomial.
Enumerated enumerate(const SearchProblem& problem) {
    bool symmetric = true;
    for (const auto& a : problem.alphabet) {
        bool found = false;
        for (const auto& b : problem.alphabet)
            if (b == -a) { found = true; break; }
        if (!found) { symmetric = false; break; }
    }

    Enumerated result;
    std::vector<std::size_t> idx(static_cast<std::size_t>(problem.n) + 1, 0);
    std::vector<Rational> coeffs(idx.size());
    while (true) {
        bool admissible = true;
        bool seen_nonzero = false;
        for (std::size_t k = 0; k < idx.size() && admissible; ++k) {
            const Rational& value = problem.alphabet[idx[k]];
            if (k == 0 && problem.require_a0_nonzero && value.is_zero()) admissible = false;
            if (symmetric && !seen_nonzero && value.is_negative()) admissible = false;
            if (!value.is_zero()) seen_nonzero = true;
            coeffs[k] = value;
        }
        if (admissible && seen_nonzero) {
            Polynomial p(coeffs);
            int mu = multiplicity_at(p, Rational(1));
            if (mu > result.mu_max) {
                result.mu_max = mu;
                result.witnesses.clear();
                result.count = 0;
            }
            if (mu == result.mu_max) {
                ++result.count;
                result.witnesses.push_back(coeffs);
            }
        }
        // Advance, most significant digit first to match search order.
        std::size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < problem.alphabet.size()) break;
            idx[pos] = 0;
            if (pos == 0) return result;
        }
    }
}

std::vector<Rational> alphabet(std::vector<long> ints) { return rat(std::move(ints)); }

}  // namespace

TEST_CASE("small instances") {
    SearchProblem p1{1, alphabet({-1, 0, 1}), true};
    SearchResult r1 = search_max_multiplicity(p1);
    CHECK(r1.mu_max == 1);
    REQUIRE(r1.witnesses.size() == 1);
    CHECK(r1.witnesses[0] == rat({1, -1}));

    SearchProblem p2{3, alphabet({0, 1}), true};
    SearchResult r2 = search_max_multiplicity(p2);
    CHECK(r2.mu_max == 0);

    SearchProblem p3{6, alphabet({-1, 0, 1}), true};
    SearchResult r3 = search_max_multiplicity(p3);
    CHECK(r3.mu_max == 3);
    bool found = false;
    for (const auto& w : r3.witnesses)
        if (w == rat({1, -1, -1, 0, 1, 1, -1})) found = true;
    CHECK(found);
    CHECK(r3.mu_max <= r3.bound_used);
}

TEST_CASE("search equals exhaustive enumeration") {
    for (const auto& letters : {alphabet({-1, 1}), alphabet({0, 1}), alphabet({-1, 0, 1})}) {
        for (int n = 1; n <= 8; ++n) {
            SearchProblem problem{n, letters, true};
            SearchOptions options;
            options.max_witnesses = 100000;
            SearchResult got = search_max_multiplicity(problem, options);
            Enumerated expected = enumerate(problem);
            CAPTURE(n);
            CAPTURE(letters.size());
            CHECK(got.mu_max == expected.mu_max);
            CHECK(got.total_witnesses == expected.count);
            CHECK(got.witnesses == expected.witnesses);
        }
    }
}

TEST_CASE("pruning changes neither the optimum nor the witness set") {
    for (const auto& letters : {alphabet({-1, 1}), alphabet({0, 1}), alphabet({-1, 0, 1})}) {
        for (int n = 4; n <= 8; ++n) {
            SearchProblem problem{n, letters, true};
            SearchOptions pruned;
            pruned.max_witnesses = 100000;
            SearchOptions plain = pruned;
            plain.prune = false;
            SearchResult a = search_max_multiplicity(problem, pruned);
            SearchResult b = search_max_multiplicity(problem, plain);
            CHECK(a.mu_max == b.mu_max);
            CHECK(a.total_witnesses == b.total_witnesses);
            CHECK(a.witnesses == b.witnesses);
            CHECK(a.nodes_explored <= b.nodes_explored);
        }
    }
}

TEST_CASE("parallel partitions merge to the sequential result") {
    SearchProblem problem{9, alphabet({-1, 0, 1}), true};
    SearchOptions seq;
    seq.max_witnesses = 100000;
    SearchOptions par = seq;
    par.threads = 4;
    SearchResult a = search_max_multiplicity(problem, seq);
    SearchResult b = search_max_multiplicity(problem, par);
    CHECK(a.mu_max == b.mu_max);
    CHECK(a.total_witnesses == b.total_witnesses);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("products of cyclotomic-style factors appear as witnesses") {
    Polynomial acc = Polynomial::constant(Rational(1));
    for (int m = 1; m <= 4; ++m) {
        std::vector<Rational> factor(static_cast<std::size_t>(m) + 1, Rational(0));
        factor[0] = Rational(1);
        factor[static_cast<std::size_t>(m)] = Rational(-1);
        acc = acc * Polynomial(factor);
        int n = m * (m + 1) / 2;
        REQUIRE(acc.degree() == n);

        bool in_alphabet = true;
        for (int i = 0; i <= n; ++i) {
            const Rational& c = acc.coeff(i);
            if (c != Rational(0) && c != Rational(1) && c != Rational(-1)) in_alphabet = false;
        }
        if (!in_alphabet) continue;  // the m = 4 product may leave the alphabet

        SearchProblem problem{n, alphabet({-1, 0, 1}), true};
        SearchResult r = search_max_multiplicity(problem);
        CHECK(r.mu_max >= m);
    }
}

TEST_CASE("witness verification uses both detection paths") {
    CHECK(verify_witness(rat({1, -2, 1}), 2));
    CHECK(verify_witness(rat({1, -1, -1, 0, 1, 1, -1}), 3));
    CHECK_FALSE(verify_witness(rat({1, -1}), 2));
    CHECK_FALSE(verify_witness(rat({0, 0}), 0));
    CHECK_FALSE(verify_witness({}, 0));
    SearchProblem problem{7, alphabet({-1, 0, 1}), true};
    SearchResult r = search_max_multiplicity(problem);
    for (const auto& w : r.witnesses) CHECK(verify_witness(w, r.mu_max));
}

TEST_CASE("oversized instances are rejected") {
    CHECK_THROWS_AS(search_max_multiplicity(SearchProblem{30, alphabet({-1, 0, 1}), true}),
                    Error);
    CHECK_THROWS_AS(search_max_multiplicity(SearchProblem{45, alphabet({-1, 1}), true}),
                    Error);
    SearchOptions tiny;
    tiny.node_budget = 10;
    CHECK_THROWS_AS(search_max_multiplicity(SearchProblem{8, alphabet({-1, 0, 1}), true}, tiny),
                    Error);
    CHECK_THROWS_AS(search_max_multiplicity(SearchProblem{0, alphabet({-1, 1}), true}), Error);
    CHECK_THROWS_AS(search_max_multiplicity(SearchProblem{3, {}, true}), Error);
    CHECK_THROWS_AS(search_max_multiplicity(SearchProblem{3, rat({1, 1}), true}), Error);
}

TEST_CASE("search-versus-cap table") {
    auto rows = bound_vs_search_table(1, 8, alphabet({-1, 0, 1}));
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
        CAPTURE(row.n);
        CHECK(row.mu_star <= row.cap);
        CHECK(row.envelope == doctest::Approx(2.0 * std::sqrt(row.n * std::log(2.0))));
    }
    CHECK(rows[5].n == 6);
    CHECK(rows[5].mu_star == 3);
    CHECK(rows[5].cap == 4);
    CHECK_THROWS_AS(bound_vs_search_table(5, 4, alphabet({-1, 1})), Error);
}
