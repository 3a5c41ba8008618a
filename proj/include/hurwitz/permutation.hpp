#pragma once

// Dense permutations of {1,...,n}, stored 0-based as image arrays (entry i
// is the image of i). Composition convention, used consistently by the
// enumeration code: compose(a, b) applies b first, then a.

#include "hurwitz/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        if (n == 0) throw std::invalid_argument("Permutation: empty image array");
        std::vector<char> seen(n, 0);
        for (int v : images_) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_.at(i); }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
        return Permutation(std::move(inv));
    }

    Partition cycle_type() const {
        std::vector<int> lengths;
        std::vector<char> seen(images_.size(), 0);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = static_cast<int>(i); !seen[j]; j = images_[j]) {
                seen[j] = 1;
                ++len;
            }
            lengths.push_back(len);
        }
        return Partition(std::move(lengths));
    }

    // Diagnostic cycle notation, 1-based, fixed points omitted: "(1 2 3)(4 5)".
    // The identity prints as "()". Not a stable interchange format.
    std::string cycle_string() const {
        std::string s;
        std::vector<char> seen(images_.size(), 0);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i] || images_[i] == static_cast<int>(i)) continue;
            s += '(';
            bool first = true;
            for (int j = static_cast<int>(i); !seen[j]; j = images_[j]) {
                seen[j] = 1;
                if (!first) s += ' ';
                s += std::to_string(j + 1);
                first = false;
            }
            s += ')';
        }
        return s.empty() ? "()" : s;
    }

    friend Permutation compose(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size())
            throw std::invalid_argument("compose: size mismatch");
        std::vector<int> im(a.images_.size());
        for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.images_[b.images_[i]];
        return Permutation(std::move(im));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// All n(n-1)/2 transpositions of {1,...,n}; empty for n < 2.
inline std::vector<Permutation> all_transpositions(int n) {
    std::vector<Permutation> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> im(n);
            std::iota(im.begin(), im.end(), 0);
            std::swap(im[i], im[j]);
            out.emplace_back(std::move(im));
        }
    return out;
}

// The full cycle (1 2 ... n); its cycle type is the one-part partition (n).
inline Permutation full_cycle(int n) {
    if (n < 1) throw std::invalid_argument("full_cycle: n must be >= 1");
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return Permutation(std::move(im));
}

}  // namespace hurwitz
