#pragma once

// Memoized cut-and-join recursion, the engine's fast path. It works in the
// aut-scaled convention H'_g(n|b) = H_g(n|b) * |aut(b)|:
//
//   H'_g(b) = 1/2 sum_{i} sum_{c+d=b_i, c,d>=1} c d H'_{g-1}(b - b_i + {c,d})
//           + 1/2 sum_{i != j} (b_i + b_j)     H'_g  (b - b_i - b_j + {b_i+b_j})
//
// with both inner sums over ordered choices (the 1/2 prefactors compensate)
// and positions i, j taken literally even when parts repeat. The first sum
// is skipped at g = 0. Every recursive call lowers r = 2g + q - 1 by one
// and preserves the degree n, bottoming out at H'_0(n|(n)) = 1/n.

#include "hurwitz/normalization.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hurwitz {

class CutJoinEngine {
public:
    // H' for (g, b). Thread safe: concurrent callers may race to compute a
    // key, but the value is deterministic, so whichever write lands is right.
    Rational hprime(int genus, const Partition& b) {
        if (genus < 0) throw std::invalid_argument("hprime: genus must be >= 0");
        const int r = branch_point_count(genus, b);
        if (r == 0)  // forces g = 0, q = 1, b = (n)
            return Rational(1) / b.degree();

        const HurwitzKey key{genus, b};
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }

        const int q = b.length();
        Rational sum = 0;
        if (genus > 0) {
            for (int i = 0; i < q; ++i)
                for (int c = 1; c < b.part(i); ++c) {
                    const int d = b.part(i) - c;
                    sum += Rational(c * d) * hprime(genus - 1, b.with_split(i, c, d));
                }
        }
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                if (i == j) continue;
                sum += Rational(b.part(i) + b.part(j)) * hprime(genus, b.with_merged(i, j));
            }
        sum /= 2;

        std::lock_guard lock(mutex_);
        return memo_.emplace(key, sum).first->second;
    }

    Rational raw(int genus, const Partition& b) { return from_prime(b, hprime(genus, b)); }

    Rational hat(int genus, const Partition& b) { return to_hat(genus, b, raw(genus, b)); }

    // Bottom-up bulk tabulation: fills the memo in increasing r so that each
    // evaluation finds its children already cached (no deep recursion).
    void prefill(int max_n, int max_genus) {
        const int max_r = 2 * max_genus + max_n - 1;
        for (int r = 1; r <= max_r; ++r)
            for (int n = 1; n <= max_n; ++n)
                for (const Partition& b : all_partitions(n))
                    for (int g = 0; g <= max_genus; ++g)
                        if (branch_point_count(g, b) == r) hprime(g, b);
    }

    std::size_t memo_size() const {
        std::lock_guard lock(mutex_);
        return memo_.size();
    }

private:
    std::map<HurwitzKey, Rational> memo_;
    mutable std::mutex mutex_;
};

}  // namespace hurwitz
