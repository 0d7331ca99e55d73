#pragma once

#include "bcabe/states/labels.hpp"
#include "bcabe/tensor/types.hpp"

namespace bcabe {

/// Uniform mixture of the 2^(two_n - 2) GHZ projectors of the family.
/// two_n = 2 yields the Bell projector closing the recursion:
/// rho+ -> [Phi+], rho- -> [Phi-], sigma+ -> [Psi+], sigma- -> [Psi-].
DensityMatrix build_family(int two_n, FamilyLabel label);

/// Orthogonal projector onto the support of build_family(two_n, label).
Projector family_support(int two_n, FamilyLabel label);

/// Four-qubit mixture of identical Bell pairs on (1,2) and (3,4):
/// 1/4 sum_B [B] (x) [B].
DensityMatrix smolin_state();

} // namespace bcabe
