#pragma once

// Seeded generators shared by the property-style tests.

#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/rational.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testsupport {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0xC0FFEE) { return std::mt19937_64(seed); }

inline hurwitz::Rational random_rational(std::mt19937_64& rng, int num_bound = 100,
                                         int den_bound = 50) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return hurwitz::Rational(num(rng)) / den(rng);
}

inline hurwitz::Rational random_nonzero_rational(std::mt19937_64& rng) {
    for (;;) {
        hurwitz::Rational r = random_rational(rng);
        if (r != 0) return r;
    }
}

inline std::vector<int> random_parts(std::mt19937_64& rng, int max_len = 6, int max_part = 9) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> part(1, max_part);
    std::vector<int> v(len(rng));
    for (int& p : v) p = part(rng);
    return v;
}

inline hurwitz::Partition random_partition(std::mt19937_64& rng, int max_len = 6,
                                           int max_part = 9) {
    return hurwitz::Partition(random_parts(rng, max_len, max_part));
}

inline hurwitz::Permutation random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return hurwitz::Permutation(std::move(im));
}

}  // namespace testsupport
