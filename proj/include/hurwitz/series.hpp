#pragma once

// Truncated generating function of one-part double Hurwitz numbers,
//
//   F(theta, x_1, x_2, ...) = sum_g sum_b H_g(n|b) theta^r / r! x_{b_1}...x_{b_q},
//
// r = 2g + q - 1, with one monomial per partition multiset, truncated to
// total x-degree <= N and theta-order <= R. The cut-and-join operator
//
//   (1/2) sum_{i,j >= 1} ( i j x_{i+j} d^2/dx_i dx_j + (i+j) x_i x_j d/dx_{i+j} )
//
// is applied as literal formal calculus on the truncated support: d/dx_k
// multiplies by the multiplicity of the part k and removes one such part,
// so the i = j case picks up the falling factorial m(m-1) on its own. Both
// summands conserve total x-degree, which makes the truncation in N exact;
// only the theta window needs care (theta_derivative lowers it by one).
// This module never touches the recursion's formula, so comparing
// d F/d theta against the applied operator is an independent check.

#include "hurwitz/cut_join.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

struct SeriesKey {
    int theta_order;
    Partition monomial;

    friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
    // Dump and iteration order: theta-order, then degree, then
    // largest-lexicographic part list first.
    friend bool operator<(const SeriesKey& a, const SeriesKey& b) {
        if (a.theta_order != b.theta_order) return a.theta_order < b.theta_order;
        if (a.monomial.degree() != b.monomial.degree()) return a.monomial.degree() < b.monomial.degree();
        return a.monomial.parts() > b.monomial.parts();
    }
};

class TruncatedSeries {
public:
    TruncatedSeries(int max_degree, int max_theta_order)
        : max_degree_(max_degree), max_theta_order_(max_theta_order) {
        if (max_degree < 1 || max_theta_order < 0)
            throw std::invalid_argument("TruncatedSeries: bad truncation bounds");
    }

    int max_degree() const { return max_degree_; }
    int max_theta_order() const { return max_theta_order_; }

    Rational coefficient(int theta_order, const Partition& b) const {
        auto it = terms_.find(SeriesKey{theta_order, b});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Accumulates c into the coefficient at (theta_order, b); keys outside
    // the truncation bounds are dropped, entries that reach zero are erased.
    void add(int theta_order, const Partition& b, const Rational& c) {
        if (c == 0) return;
        if (theta_order < 0 || theta_order > max_theta_order_ || b.degree() > max_degree_) return;
        const SeriesKey key{theta_order, b};
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<SeriesKey, Rational>& terms() const { return terms_; }

    // One line per stored term: "theta^r | b | coefficient".
    std::string dump() const {
        std::ostringstream os;
        for (const auto& [key, c] : terms_)
            os << "theta^" << key.theta_order << " | " << key.monomial.str() << " | "
               << to_string(c) << "\n";
        return os.str();
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.max_degree_, b.max_degree_),
                            std::min(a.max_theta_order_, b.max_theta_order_));
        for (const auto& [k, c] : a.terms_) out.add(k.theta_order, k.monomial, c);
        for (const auto& [k, c] : b.terms_) out.add(k.theta_order, k.monomial, c);
        return out;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.max_degree_, b.max_degree_),
                            std::min(a.max_theta_order_, b.max_theta_order_));
        for (const auto& [k, c] : a.terms_) out.add(k.theta_order, k.monomial, c);
        for (const auto& [k, c] : b.terms_) out.add(k.theta_order, k.monomial, -c);
        return out;
    }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
        TruncatedSeries out(a.max_degree_, a.max_theta_order_);
        if (s == 0) return out;
        for (const auto& [k, c] : a.terms_) out.add(k.theta_order, k.monomial, s * c);
        return out;
    }

private:
    int max_degree_;
    int max_theta_order_;
    std::map<SeriesKey, Rational> terms_;
};

// F truncated to degree <= N, theta-order <= R: the coefficient at (r, b)
// is H_g(n|b) / r! for the unique g with 2g + q - 1 = r, when that g is a
// non-negative integer.
inline TruncatedSeries generating_series(CutJoinEngine& engine, int max_degree,
                                         int max_theta_order) {
    TruncatedSeries f(max_degree, max_theta_order);
    for (int n = 1; n <= max_degree; ++n)
        for (const Partition& b : all_partitions(n)) {
            const int q = b.length();
            for (int g = 0;; ++g) {
                const int r = 2 * g + q - 1;
                if (r > max_theta_order) break;
                f.add(r, b, engine.raw(g, b) / Rational(factorial(static_cast<unsigned>(r))));
            }
        }
    return f;
}

// d/d theta: the coefficient at (r-1, b) is r times the one at (r, b).
inline TruncatedSeries theta_derivative(const TruncatedSeries& s) {
    TruncatedSeries out(s.max_degree(), std::max(0, s.max_theta_order() - 1));
    for (const auto& [key, c] : s.terms()) {
        if (key.theta_order == 0) continue;
        out.add(key.theta_order - 1, key.monomial, Rational(key.theta_order) * c);
    }
    return out;
}

// The cut-and-join operator, term by term. For a monomial with part
// multiplicities m:
//   i j x_{i+j} d^2/dx_i dx_j  removes one part i and one part j (factor
//     m_i m_j, or m_i (m_i - 1) when i = j) and appends i + j;
//   (i+j) x_i x_j d/dx_{i+j}   removes one part i + j (factor m_{i+j}) and
//     appends i and j.
// Both conserve the total x-degree.
inline TruncatedSeries cut_join_operator(const TruncatedSeries& s) {
    TruncatedSeries out(s.max_degree(), s.max_theta_order());
    const Rational half(1, 2);
    for (const auto& [key, c] : s.terms()) {
        const Partition& b = key.monomial;
        const std::vector<int> mult = b.multiplicities();
        const int n = b.degree();

        // distinct part values present in b
        std::vector<int> values;
        for (int v = 1; v <= n; ++v)
            if (mult[v] > 0) values.push_back(v);

        for (int i : values)
            for (int j : values) {
                const long factor = i == j ? static_cast<long>(mult[i]) * (mult[i] - 1)
                                           : static_cast<long>(mult[i]) * mult[j];
                if (factor == 0) continue;
                std::vector<int> parts = b.parts();
                parts.erase(std::find(parts.begin(), parts.end(), i));
                parts.erase(std::find(parts.begin(), parts.end(), j));
                parts.push_back(i + j);
                out.add(key.theta_order, Partition(std::move(parts)),
                        half * Rational(static_cast<long>(i) * j * factor) * c);
            }

        for (int v : values)
            for (int i = 1; i < v; ++i) {
                const int j = v - i;  // ordered pairs (i, j) with i + j = v
                std::vector<int> parts = b.parts();
                parts.erase(std::find(parts.begin(), parts.end(), v));
                parts.push_back(i);
                parts.push_back(j);
                out.add(key.theta_order, Partition(std::move(parts)),
                        half * Rational(static_cast<long>(v) * mult[v]) * c);
            }
    }
    return out;
}

// d F/d theta minus the applied operator, on the window where the
// truncation is exact (theta-order <= R-1; every x-degree <= N is exact
// because the operator conserves degree). Identically zero if the
// cut-and-join equation holds.
inline TruncatedSeries pde_residual(CutJoinEngine& engine, int max_degree, int max_theta_order) {
    if (max_theta_order < 1)
        throw std::invalid_argument("pde_residual: need max_theta_order >= 1");
    const TruncatedSeries f = generating_series(engine, max_degree, max_theta_order);
    return theta_derivative(f) - cut_join_operator(f);
}

}  // namespace hurwitz
