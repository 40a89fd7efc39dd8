#pragma once

#include <utility>

#include "dialectica/logic.hpp"

namespace dialectica {

using ThreeLevelObject = Family2<TwoLevelObject>;

// Fixed instances over the boolean lineale used by the monad demonstrations.
// Entries are 0/1 elements; every index set is a range of integers.

// Six binary indices (x, y, u, v, p, q) with hom-sets empty in both
// directions between mu(D_f(mu) G) and mu(mu_D G).
ThreeLevelObject second_law_instance(const LinearModel& model);

// Outer 1 x 2, inner 2 x 1, entry [y != u].
TwoLevelObject bang_mu_instance(const LinearModel& model);

// One outer witness and no outer counter-witness: !mu G and mu !G are both
// the one-point object with value the unit.
TwoLevelObject bang_mu_control(const LinearModel& model);

// All index sets singletons, entry the unit.
TwoLevelObject bang_mu_singleton(const LinearModel& model);

// G: outer 1 x 2, inner 2 x 1, entry y xor u.  H: outer 2 x 1, inner 1 x 1,
// entry w.  The lax map mu G (x) mu H -> mu(G (x) H) has no inverse.
std::pair<TwoLevelObject, TwoLevelObject> lax_monoidal_instance(const LinearModel& model);

// Both arguments all-singleton with entry the unit; the lax map is invertible.
std::pair<TwoLevelObject, TwoLevelObject> lax_monoidal_control(const LinearModel& model);

}  // namespace dialectica
