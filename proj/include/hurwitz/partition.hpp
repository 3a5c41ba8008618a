#pragma once

// Integer partitions in canonical non-increasing order. A Partition is a
// ramification profile: parts b_1 >= ... >= b_q >= 1 with degree
// n = b_1 + ... + b_q and length q. Hurwitz numbers depend only on the
// multiset of parts, so every constructor canonicalizes.

#include "hurwitz/rational.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("Partition: empty part list");
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("Partition: parts must be >= 1");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_.at(i); }

    // |aut(b)|: order of the group permuting equal parts, i.e. the product
    // of the factorials of the part multiplicities.
    Int aut_order() const {
        Int a = 1;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            a *= factorial(static_cast<unsigned>(j - i));
            i = j;
        }
        return a;
    }

    // multiplicities()[v] = number of parts equal to v, for v in [0, degree()].
    std::vector<int> multiplicities() const {
        std::vector<int> m(degree() + 1, 0);
        for (int p : parts_) ++m[p];
        return m;
    }

    // Part at position i replaced by c and d (c + d == part(i)).
    Partition with_split(int i, int c, int d) const {
        std::vector<int> v = parts_;
        v.at(i) = c;
        v.push_back(d);
        return Partition(std::move(v));
    }

    // Parts at positions i != j replaced by their sum.
    Partition with_merged(int i, int j) const {
        if (i == j) throw std::invalid_argument("with_merged: positions must differ");
        std::vector<int> v = parts_;
        v.at(i) += v.at(j);
        v.erase(v.begin() + j);
        return Partition(std::move(v));
    }

    Partition with_appended_ones(int k) const {
        std::vector<int> v = parts_;
        v.insert(v.end(), k, 1);
        return Partition(std::move(v));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Partition parse(const std::string& s) {
        std::vector<int> v;
        std::stringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            std::size_t pos = 0;
            int p = 0;
            try {
                p = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
            }
            if (pos != tok.size())
                throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
            v.push_back(p);
        }
        return Partition(std::move(v));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;  // non-increasing
};

// Key for a one-part double Hurwitz number H_g(n | b).
struct HurwitzKey {
    int genus;
    Partition profile;

    // Number of simple branch points, r = 2g + q - 1.
    int branch_points() const { return 2 * genus + profile.length() - 1; }

    friend bool operator==(const HurwitzKey&, const HurwitzKey&) = default;
    friend auto operator<=>(const HurwitzKey&, const HurwitzKey&) = default;
};

// All partitions of n, largest-lexicographic first: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> all_partitions(int n) {
    if (n < 1) throw std::invalid_argument("all_partitions: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace hurwitz
