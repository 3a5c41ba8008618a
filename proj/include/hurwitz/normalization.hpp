#pragma once

// Conversions among the three conventions for a one-part double Hurwitz
// number H_g(n | b_1,...,b_q):
//
//   raw    H       each cover weighted by 1/|aut(f)|
//   prime  H'   =  H * |aut(b)|
//   hat    Hhat =  H * |aut(b)| / (n^{2g+q-2} (2g+q-1)!)
//
// The exponent 2g+q-2 can be -1 (g = 0, q = 1); powers are taken over
// rationals so that case needs no special handling.

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

inline int branch_point_count(int genus, const Partition& b) {
    if (genus < 0) throw std::invalid_argument("genus must be >= 0");
    return 2 * genus + b.length() - 1;
}

// |aut(b)| / (n^{2g+q-2} (2g+q-1)!), the factor taking raw to hat.
inline Rational hat_scale(int genus, const Partition& b) {
    const int r = branch_point_count(genus, b);
    const Rational power = pow_rational(Rational(b.degree()), 2 * genus + b.length() - 2);
    return Rational(b.aut_order()) / (power * Rational(factorial(static_cast<unsigned>(r))));
}

inline Rational to_hat(int genus, const Partition& b, const Rational& raw) {
    return raw * hat_scale(genus, b);
}

inline Rational from_hat(int genus, const Partition& b, const Rational& hat) {
    return hat / hat_scale(genus, b);
}

inline Rational to_prime(const Partition& b, const Rational& raw) {
    return raw * b.aut_order();
}

inline Rational from_prime(const Partition& b, const Rational& prime) {
    return prime / Rational(b.aut_order());
}

}  // namespace hurwitz
