#pragma once

// Ground-truth Hurwitz numbers by exhaustive enumeration of monodromy
// factorizations. H_g(n | b) counts tuples (sigma, t_1, ..., t_r) with
// sigma an n-cycle, every t_i a transposition and
// cycle_type(t_r ... t_1 sigma) = b, divided by n!; here r = 2g + q - 1.
// Transitivity is automatic because sigma is an n-cycle. The (n-1)!
// n-cycles contribute equally (conjugation), so the count is taken with
// sigma fixed to the full cycle (1 2 ... n) and divided by n only.
//
// The enumeration walks an odometer over transposition indices (base
// n(n-1)/2, r digits) keeping prefix products, in inverse form: with
// W = (t_d ... t_1 sigma)^{-1}, appending the transposition (p q) on the
// left of the product is the O(1) update swap(W[p], W[q]), and W has the
// same cycle type as the product.

#include "hurwitz/normalization.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hurwitz {

struct EnumerationOptions {
    std::uint64_t budget = 100'000'000;  // max tuple evaluations per call
    unsigned threads = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t budget, Int required)
        : std::runtime_error("enumeration infeasible: needs " + required.str() +
                             " tuple evaluations, budget is " + std::to_string(budget)),
          budget_(budget),
          required_(std::move(required)) {}

    std::uint64_t budget() const { return budget_; }
    const Int& required() const { return required_; }

private:
    std::uint64_t budget_;
    Int required_;
};

namespace detail {

inline bool type_matches(const std::vector<int>& images, const std::vector<int>& target_mult) {
    const int n = static_cast<int>(images.size());
    static thread_local std::vector<int> counts;
    static thread_local std::vector<char> seen;
    counts.assign(n + 1, 0);
    seen.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images[j]) {
            seen[j] = 1;
            ++len;
        }
        ++counts[len];
    }
    for (int v = 1; v <= n; ++v)
        if (counts[v] != target_mult[v]) return false;
    return true;
}

inline std::uint64_t count_from(std::vector<int>& w,
                                const std::vector<std::pair<int, int>>& trans,
                                int depth, const std::vector<int>& target_mult) {
    if (depth == 0) return type_matches(w, target_mult) ? 1 : 0;
    std::uint64_t c = 0;
    for (const auto& [p, q] : trans) {
        std::swap(w[p], w[q]);
        c += count_from(w, trans, depth - 1, target_mult);
        std::swap(w[p], w[q]);
    }
    return c;
}

}  // namespace detail

// Number of r-tuples (t_1, ..., t_r) of transpositions in S_n with
// cycle_type(t_r ... t_1 sigma) = target. Exposed separately from the
// Hurwitz wrapper so tests can drive it with arbitrary sigma and with
// (r, target) combinations of mismatched parity (which must count zero).
inline std::uint64_t count_transposition_tuples(const Permutation& sigma, int r,
                                                const Partition& target,
                                                const EnumerationOptions& opts = {}) {
    if (r < 0) throw std::invalid_argument("count_transposition_tuples: r must be >= 0");
    const int n = sigma.size();
    const Int pairs = Int(n) * (n - 1) / 2;
    const Int required = boost::multiprecision::pow(pairs, static_cast<unsigned>(r));
    if (required > opts.budget) throw BudgetExceeded(opts.budget, required);
    if (target.degree() != n) return 0;

    std::vector<std::pair<int, int>> trans;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) trans.emplace_back(i, j);

    std::vector<int> target_mult = target.multiplicities();
    std::vector<int> w = sigma.inverse().images();

    const unsigned workers =
        std::min<unsigned>(std::max(opts.threads, 1u), r >= 1 ? static_cast<unsigned>(trans.size()) : 1u);
    if (workers <= 1 || r == 0)
        return detail::count_from(w, trans, r, target_mult);

    // Split on the first transposition index; integer partial sums make the
    // result independent of the worker count.
    std::atomic<std::size_t> next{0};
    std::vector<std::uint64_t> subtotal(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            std::vector<int> local = w;
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= trans.size()) return;
                const auto& [p, q] = trans[i];
                std::swap(local[p], local[q]);
                subtotal[t] += detail::count_from(local, trans, r - 1, target_mult);
                std::swap(local[p], local[q]);
            }
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t s : subtotal) total += s;
    return total;
}

// H_g(n | b) by brute force: fixed-sigma tuple count divided by n.
inline Rational hurwitz_by_enumeration(int genus, const Partition& b,
                                       const EnumerationOptions& opts = {}) {
    const int r = branch_point_count(genus, b);
    const int n = b.degree();
    const std::uint64_t count = count_transposition_tuples(full_cycle(n), r, b, opts);
    return Rational(count) / n;
}

struct EnumerationTable {
    std::map<HurwitzKey, Rational> values;
    std::vector<std::pair<HurwitzKey, Int>> skipped;  // over budget: key -> required tuples
};

// Every (g, b) with deg(b) <= max_n and g <= max_genus that fits the
// budget; infeasible keys are reported in `skipped`, not fatal.
inline EnumerationTable enumeration_table(int max_n, int max_genus,
                                          const EnumerationOptions& opts = {}) {
    EnumerationTable table;
    for (int n = 1; n <= max_n; ++n)
        for (const Partition& b : all_partitions(n))
            for (int g = 0; g <= max_genus; ++g) {
                try {
                    table.values.emplace(HurwitzKey{g, b}, hurwitz_by_enumeration(g, b, opts));
                } catch (const BudgetExceeded& e) {
                    table.skipped.emplace_back(HurwitzKey{g, b}, e.required());
                }
            }
    return table;
}

}  // namespace hurwitz
