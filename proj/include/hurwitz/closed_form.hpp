#pragma once

// Closed forms. With the power-sum invariants A = -1 + sum b_i^2 and
// B = -1 + sum b_i^4, the genus-2 hat-normalized Hurwitz number is
//
//   genus2_hat(b) = (1/24^2) (A^2/2 - B/5).
//
// Appending a part 1 shifts (A, B) to (A+1, B+1), so at genus 2 the
// alternating relation collapses to one polynomial identity in (A, B):
//
//   (A^2/2 - B/5) - 2 ((A+1)^2/2 - (B+1)/5) + ((A+2)^2/2 - (B+2)/5) = 1,
//
// verified here symbolically (the A-part telescopes to 1, the B-part
// cancels), not just at sample points.

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace hurwitz {

struct ABInvariants {
    Rational A, B;
};

inline ABInvariants ab_invariants(const Partition& b) {
    Int a = -1, bb = -1;
    for (int p : b.parts()) {
        const Int p2 = Int(p) * p;
        a += p2;
        bb += p2 * p2;
    }
    return {Rational(a), Rational(bb)};
}

inline Rational genus2_hat(const Partition& b) {
    const auto [A, B] = ab_invariants(b);
    return (A * A / 2 - B / 5) / 576;
}

// Dense-enough bivariate polynomials with exact rational coefficients,
// keyed by (degree in A, degree in B); just what the identity check needs.
class BivariatePoly {
public:
    BivariatePoly() = default;

    static BivariatePoly constant(const Rational& c) {
        BivariatePoly p;
        p.set(0, 0, c);
        return p;
    }
    static BivariatePoly var_a() {
        BivariatePoly p;
        p.set(1, 0, 1);
        return p;
    }
    static BivariatePoly var_b() {
        BivariatePoly p;
        p.set(0, 1, 1);
        return p;
    }

    Rational coefficient(int da, int db) const {
        auto it = coeffs_.find({da, db});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set(int da, int db, const Rational& c) {
        if (c == 0)
            coeffs_.erase({da, db});
        else
            coeffs_[{da, db}] = c;
    }

    bool is_zero() const { return coeffs_.empty(); }

    BivariatePoly& operator+=(const BivariatePoly& o) {
        for (const auto& [k, c] : o.coeffs_) set(k.first, k.second, coefficient(k.first, k.second) + c);
        return *this;
    }
    BivariatePoly& operator-=(const BivariatePoly& o) {
        for (const auto& [k, c] : o.coeffs_) set(k.first, k.second, coefficient(k.first, k.second) - c);
        return *this;
    }
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }

    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly p;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) {
                const int da = ka.first + kb.first, db = ka.second + kb.second;
                p.set(da, db, p.coefficient(da, db) + ca * cb);
            }
        return p;
    }
    friend BivariatePoly operator*(const Rational& s, const BivariatePoly& a) {
        BivariatePoly p;
        for (const auto& [k, c] : a.coeffs_) p.set(k.first, k.second, s * c);
        return p;
    }

    Rational eval(const Rational& a, const Rational& b) const {
        Rational v = 0;
        for (const auto& [k, c] : coeffs_)
            v += c * pow_rational(a, k.first) * pow_rational(b, k.second);
        return v;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : coeffs_) {
            if (!first) os << " + ";
            os << "(" << to_string(c) << ")";
            if (k.first) os << "*A^" << k.first;
            if (k.second) os << "*B^" << k.second;
            first = false;
        }
        return os.str();
    }

private:
    std::map<std::pair<int, int>, Rational> coeffs_;
};

namespace detail {

// (A + sa)^2 / 2 - (B + sb) / 5 as a formal polynomial.
inline BivariatePoly shifted_core(int sa, int sb) {
    const BivariatePoly a = BivariatePoly::var_a() + BivariatePoly::constant(sa);
    const BivariatePoly b = BivariatePoly::var_b() + BivariatePoly::constant(sb);
    return Rational(1, 2) * (a * a) - Rational(1, 5) * b;
}

}  // namespace detail

// Left-hand side of the shift identity at a numeric point.
inline Rational shift_identity_lhs(const Rational& A, const Rational& B) {
    const auto core = [](const Rational& a, const Rational& b) -> Rational {
        return a * a / 2 - b / 5;
    };
    return core(A, B) - 2 * core(A + 1, B + 1) + core(A + 2, B + 2);
}

// LHS - 1, expanded symbolically; the expected value is the zero polynomial.
inline BivariatePoly shift_identity_residual() {
    return detail::shifted_core(0, 0) - Rational(2) * detail::shifted_core(1, 1) +
           detail::shifted_core(2, 2) - BivariatePoly::constant(1);
}

// Hat-normalized value by closed form; only genus 0 (constant 1) and
// genus 2 are available.
inline std::optional<Rational> closed_form_hat(int genus, const Partition& b) {
    if (genus == 0) return Rational(1);
    if (genus == 2) return genus2_hat(b);
    return std::nullopt;
}

}  // namespace hurwitz
