#include "multizero/extremal.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "multizero/bounds.hpp"
#include "multizero/delta_basis.hpp"
#include "multizero/polynomial.hpp"

namespace multizero {

namespace {

struct Shared {
    const SearchProblem* problem = nullptr;
    SearchOptions options;
    int jcap = 0;
    std::vector<std::vector<Rational>> ff;      // ff[i][j] = i(i-1)...(i-j+1)
    std::vector<std::vector<Rational>> suffix;  // suffix[j][k] = sum_{i>=k} ff[i][j]
    Rational max_abs;
    bool symmetric = false;
    std::atomic<std::uint64_t> nodes{0};
};

struct TaskResult {
    int best = -1;
    std::vector<std::vector<Rational>> witnesses;
    std::uint64_t count = 0;
};

class Walker {
  public:
    Walker(Shared& shared) : s_(shared) {
        const int n = s_.problem->n;
        assign_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
        moments_.assign(static_cast<std::size_t>(s_.jcap) + 1, Rational(0));
    }

    TaskResult run(const std::vector<Rational>& prefix) {
        bool has_nonzero = false;
        for (std::size_t k = 0; k < prefix.size(); ++k) {
            count_node();
            assign_[k] = prefix[k];
            add_moments(static_cast<int>(k), prefix[k]);
            if (!prefix[k].is_zero()) has_nonzero = true;
        }
        step(static_cast<int>(prefix.size()), has_nonzero);
        return std::move(result_);
    }

  private:
    void count_node() {
        std::uint64_t total = s_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (s_.options.node_budget != 0 && total > s_.options.node_budget)
            raise(ErrorCode::InstanceTooLarge,
                  "node budget " + std::to_string(s_.options.node_budget) + " exhausted");
    }

    void add_moments(int k, const Rational& value) {
        if (value.is_zero()) return;
        for (int j = 0; j <= s_.jcap; ++j)
            moments_[static_cast<std::size_t>(j)] += value * s_.ff[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }

    void sub_moments(int k, const Rational& value) {
        if (value.is_zero()) return;
        for (int j = 0; j <= s_.jcap; ++j)
            moments_[static_cast<std::size_t>(j)] -= value * s_.ff[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }

    bool can_still_tie(int k) const {
        // A completion shifts moment j by at most max_abs * suffix[j][k]
        // in either direction; once a low moment is out of reach the
        // branch cannot reach the current best.
        for (int j = 0; j < result_.best && j <= s_.jcap; ++j) {
            if (moments_[static_cast<std::size_t>(j)].abs()
                    > s_.max_abs * s_.suffix[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])
                return false;
        }
        return true;
    }

    void step(int k, bool has_nonzero) {
        const int n = s_.problem->n;
        if (k == n + 1) {
            leaf(has_nonzero);
            return;
        }
        if (s_.options.prune && result_.best >= 1 && !can_still_tie(k))
            return;
        for (const Rational& value : s_.problem->alphabet) {
            if (k == 0 && s_.problem->require_a0_nonzero && value.is_zero()) continue;
            if (s_.symmetric && !has_nonzero && value.is_negative()) continue;
            count_node();
            assign_[static_cast<std::size_t>(k)] = value;
            add_moments(k, value);
            step(k + 1, has_nonzero || !value.is_zero());
            sub_moments(k, value);
        }
    }

    void leaf(bool has_nonzero) {
        if (!has_nonzero) return;
        int mu = -1;
        for (int j = 0; j <= s_.jcap; ++j) {
            if (!moments_[static_cast<std::size_t>(j)].is_zero()) {
                mu = j;
                break;
            }
        }
        if (mu < 0)
            throw std::logic_error("multiplicity exceeded its a-priori cap");
        if (mu > result_.best) {
            result_.best = mu;
            result_.witnesses.clear();
            result_.count = 0;
        }
        if (mu == result_.best) {
            ++result_.count;
            if (result_.witnesses.size() < s_.options.max_witnesses)
                result_.witnesses.push_back(assign_);
        }
    }

    Shared& s_;
    std::vector<Rational> assign_;
    std::vector<Rational> moments_;
    TaskResult result_;
};

void collect_prefixes(const SearchProblem& problem, bool symmetric, int depth,
                      std::vector<Rational>& prefix, bool has_nonzero,
                      std::vector<std::vector<Rational>>& out) {
    if (static_cast<int>(prefix.size()) == depth) {
        out.push_back(prefix);
        return;
    }
    int k = static_cast<int>(prefix.size());
    for (const Rational& value : problem.alphabet) {
        if (k == 0 && problem.require_a0_nonzero && value.is_zero()) continue;
        if (symmetric && !has_nonzero && value.is_negative()) continue;
        prefix.push_back(value);
        collect_prefixes(problem, symmetric, depth, prefix,
                         has_nonzero || !value.is_zero(), out);
        prefix.pop_back();
    }
}

Rational min_nonzero_abs(const std::vector<Rational>& alphabet) {
    Rational best(0);
    for (const auto& a : alphabet) {
        if (a.is_zero()) continue;
        Rational v = a.abs();
        if (best.is_zero() || v < best) best = v;
    }
    return best;
}

}  // namespace

SearchResult search_max_multiplicity(const SearchProblem& problem,
                                     const SearchOptions& options) {
    if (problem.n < 1)
        raise(ErrorCode::InvalidParameters, "degree bound must be at least 1");
    if (problem.alphabet.empty())
        raise(ErrorCode::InvalidParameters, "alphabet must be nonempty");
    for (std::size_t i = 0; i < problem.alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < problem.alphabet.size(); ++j)
            if (problem.alphabet[i] == problem.alphabet[j])
                raise(ErrorCode::InvalidParameters, "alphabet entries must be distinct");

    double bits = (problem.n + 1) * std::log2(static_cast<double>(problem.alphabet.size()));
    if (bits > 40.0)
        raise(ErrorCode::InstanceTooLarge,
              "search space of " + std::to_string(problem.alphabet.size()) + "^"
                  + std::to_string(problem.n + 1) + " assignments is off limits");

    Rational min_abs = min_nonzero_abs(problem.alphabet);
    SearchResult result;
    if (min_abs.is_zero())
        return result;  // no nonzero letters: only the zero assignment exists

    Shared shared;
    shared.problem = &problem;
    shared.options = options;
    shared.max_abs = Rational(0);
    for (const auto& a : problem.alphabet) {
        Rational v = a.abs();
        if (v > shared.max_abs) shared.max_abs = v;
    }
    shared.symmetric = true;
    for (const auto& a : problem.alphabet) {
        bool found = false;
        for (const auto& b : problem.alphabet)
            if (b == -a) { found = true; break; }
        if (!found) { shared.symmetric = false; break; }
    }

    int cap = max_mu_for_norm(problem.n, NormConstraint::LinfRatio,
                              Rational(1) + shared.max_abs / min_abs);
    result.bound_used = cap;
    shared.jcap = cap < problem.n ? cap : problem.n;

    const int n = problem.n;
    shared.ff.assign(static_cast<std::size_t>(n) + 1, {});
    for (int i = 0; i <= n; ++i) {
        auto& row = shared.ff[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(shared.jcap) + 1, Rational(0));
        for (int j = 0; j <= shared.jcap; ++j)
            row[static_cast<std::size_t>(j)] =
                falling_factorial(Rational(static_cast<long>(i)), static_cast<unsigned long>(j));
    }
    shared.suffix.assign(static_cast<std::size_t>(shared.jcap) + 1, {});
    for (int j = 0; j <= shared.jcap; ++j) {
        auto& row = shared.suffix[static_cast<std::size_t>(j)];
        row.assign(static_cast<std::size_t>(n) + 2, Rational(0));
        for (int k = n; k >= 0; --k)
            row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) + 1]
                + shared.ff[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }

    int prefix_depth = n + 1 < 2 ? n + 1 : 2;
    std::vector<std::vector<Rational>> prefixes;
    std::vector<Rational> scratch;
    collect_prefixes(problem, shared.symmetric, prefix_depth, scratch, false, prefixes);

    std::vector<TaskResult> task_results(prefixes.size());
    std::vector<std::exception_ptr> task_errors(prefixes.size());
    int threads = options.threads > 1 ? options.threads : 1;
    if (threads > static_cast<int>(prefixes.size()) && !prefixes.empty())
        threads = static_cast<int>(prefixes.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t id = next.fetch_add(1);
            if (id >= prefixes.size()) return;
            try {
                Walker walker(shared);
                task_results[id] = walker.run(prefixes[id]);
            } catch (...) {
                task_errors[id] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : task_errors)
        if (err) std::rethrow_exception(err);

    for (const auto& task : task_results)
        if (task.best > result.mu_max) result.mu_max = task.best;
    for (const auto& task : task_results) {
        if (task.best != result.mu_max) continue;
        result.total_witnesses += task.count;
        for (const auto& w : task.witnesses) {
            if (result.witnesses.size() >= options.max_witnesses) break;
            result.witnesses.push_back(w);
        }
    }
    result.nodes_explored = shared.nodes.load();
    return result;
}

bool verify_witness(const std::vector<Rational>& coeffs, int claimed_mu) {
    if (coeffs.empty()) return false;
    bool all_zero = true;
    for (const auto& c : coeffs)
        if (!c.is_zero()) { all_zero = false; break; }
    if (all_zero) return false;

    ExpansionVector v(DeltaBasisSpec::monomial(static_cast<int>(coeffs.size()) - 1), coeffs);
    if (multiplicity_from_coeffs(v) != claimed_mu) return false;
    return multiplicity_at(Polynomial(coeffs), Rational(1)) == claimed_mu;
}

std::vector<TableRow> bound_vs_search_table(int n_from, int n_to,
                                            const std::vector<Rational>& alphabet,
                                            const SearchOptions& options) {
    if (n_from < 1 || n_to < n_from)
        raise(ErrorCode::InvalidParameters, "bad degree range");
    std::vector<TableRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        SearchProblem problem;
        problem.n = n;
        problem.alphabet = alphabet;
        problem.require_a0_nonzero = true;
        SearchResult r = search_max_multiplicity(problem, options);
        TableRow row;
        row.n = n;
        row.mu_star = r.mu_max;
        row.cap = r.bound_used;
        row.envelope = 2.0 * std::sqrt(n * std::log(2.0));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace multizero
