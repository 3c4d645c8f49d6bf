#pragma once

#include <cstdint>
#include <vector>

#include "multizero/rational.hpp"

namespace multizero {

/// Search instance: coefficients a_0..a_n drawn from a finite alphabet,
/// maximizing the multiplicity of the zero at 1 (monomial basis).
struct SearchProblem {
    int n = 1;
    std::vector<Rational> alphabet;
    bool require_a0_nonzero = true;
};

struct SearchOptions {
    bool prune = true;
    int threads = 1;
    std::size_t max_witnesses = 64;
    /// 0 means the built-in size gate only.
    std::uint64_t node_budget = 0;
};

struct SearchResult {
    /// Highest multiplicity found; -1 when no admissible assignment exists.
    int mu_max = -1;
    /// Witnesses attaining mu_max, in deterministic search order, capped
    /// at max_witnesses; total_witnesses counts all of them. When the
    /// alphabet is closed under negation only canonical representatives
    /// (first nonzero coefficient positive) are explored.
    std::vector<std::vector<Rational>> witnesses;
    std::uint64_t total_witnesses = 0;
    std::uint64_t nodes_explored = 0;
    /// A-priori cap on mu from the l-infinity bound for this alphabet.
    int bound_used = 0;
};

SearchResult search_max_multiplicity(const SearchProblem& problem,
                                     const SearchOptions& options = {});

/// Double-path check: the claimed multiplicity must agree with both the
/// moment detector and synthetic division of the explicit polynomial.
bool verify_witness(const std::vector<Rational>& coeffs, int claimed_mu);

struct TableRow {
    int n = 0;
    int mu_star = 0;
    int cap = 0;
    double envelope = 0.0;
};

/// Per degree: searched optimum, the a-priori cap, and the envelope
/// 2 sqrt(n ln 2). The searched optimum never exceeds the cap.
std::vector<TableRow> bound_vs_search_table(int n_from, int n_to,
                                            const std::vector<Rational>& alphabet,
                                            const SearchOptions& options = {});

}  // namespace multizero
