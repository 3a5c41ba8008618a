#pragma once

// Exact arithmetic. Every Hurwitz quantity in this library is a Rational
// (arbitrary-precision, always in lowest terms with positive denominator);
// there is no floating point anywhere in the engine.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hurwitz {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& x) { return x.str(); }

// "p/q" in lowest terms, "p" alone when q == 1, "-p/q" for negatives.
inline std::string to_string(const Rational& x) { return x.str(); }

// Accepts exactly the format produced by to_string: an optional leading
// '-' on the numerator, and an unsigned denominator after '/'.
inline Rational parse_rational(const std::string& s) {
    const auto bad = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
    const auto is_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    bool neg = false;
    if (!num.empty() && num.front() == '-') {
        neg = true;
        num.erase(num.begin());
    }
    if (!is_digits(num) || !is_digits(den)) bad();
    Int d(den);
    if (d == 0) bad();
    Rational r = Rational(Int(num)) / d;
    return neg ? -r : r;
}

// Exact integer power; exp may be negative (base must be nonzero then).
inline Rational pow_rational(const Rational& base, long exp) {
    if (exp < 0 && base == 0)
        throw std::domain_error("pow_rational: zero base with negative exponent");
    const unsigned long e = exp < 0 ? -static_cast<unsigned long>(exp) : exp;
    using boost::multiprecision::pow;
    Int n = pow(numerator(base), static_cast<unsigned>(e));
    Int d = pow(denominator(base), static_cast<unsigned>(e));
    if (exp < 0) {
        n.swap(d);
        if (d < 0) { n = -n; d = -d; }
    }
    return Rational(n, d);
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c *= n - k + i;   // divides exactly at every step
        c /= i;
    }
    return c;
}

}  // namespace hurwitz
