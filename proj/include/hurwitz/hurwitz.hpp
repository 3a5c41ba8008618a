#pragma once

// Exact computation of one-part double Hurwitz numbers H_g(n | b_1,...,b_q)
// by three independent routes -- brute-force monodromy enumeration, the
// cut-and-join recursion, and closed forms -- plus the identities relating
// them, all over arbitrary-precision rationals.

#include "hurwitz/closed_form.hpp"
#include "hurwitz/cut_join.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/normalization.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/relations.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/table.hpp"
