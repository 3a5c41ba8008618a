#pragma once

// The alternating binomial relation among hat-normalized values with
// appended 1-parts: for every g >= 0 and profile b,
//
//   sum_{k=0}^{g} (-1)^k C(g,k) hat{H}_g(b + {1^k}) = (-1)^g / 24^g.
//
// Terms are computed through the cut-and-join engine (never the genus-2
// closed form), which keeps this check independent of the closed-form
// code path; the verdict carries the per-term hat values so callers can
// cross-check them however they like.

#include "hurwitz/cut_join.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <vector>

namespace hurwitz {

struct RelationVerdict {
    int genus;
    Partition profile;
    Rational lhs, rhs;
    bool equal;
    std::vector<Rational> hat_terms;  // hat value at b + {1^k}, k = 0..genus
};

inline Rational alternating_sum_target(int genus) {
    return pow_rational(Rational(-1, 24), genus);
}

inline RelationVerdict check_alternating_relation(CutJoinEngine& engine, int genus,
                                                  const Partition& b) {
    RelationVerdict v{genus, b, 0, alternating_sum_target(genus), false, {}};
    for (int k = 0; k <= genus; ++k) {
        const Rational term = engine.hat(genus, b.with_appended_ones(k));
        v.hat_terms.push_back(term);
        const Rational coeff(binomial(static_cast<unsigned>(genus), static_cast<unsigned>(k)));
        v.lhs += (k % 2 == 0 ? coeff : -coeff) * term;
    }
    v.equal = v.lhs == v.rhs;
    return v;
}

inline Rational alternating_sum(CutJoinEngine& engine, int genus, const Partition& b) {
    return check_alternating_relation(engine, genus, b).lhs;
}

}  // namespace hurwitz
