#pragma once

// Characters of concrete representations, given as weight multisets.

#include "chern/char_ring.h"
#include "chern/weyl.h"

namespace chern {

/**
 * Standard representation: GL(n) has weights e_1..e_n; Sp(2l) and SO(2l)
 * have +-e_1..+-e_l; SO(2l+1) adds the zero weight. Tori are rejected.
 */
VirtualCharacter standard(GroupSpec const &g);

/** lambda^p(x). */
VirtualCharacter exterior(VirtualCharacter const &x, int p);

/** Sym^p(x): coefficient p of lambda_{-t}(x)^{-1}. */
VirtualCharacter symmetric(VirtualCharacter const &x, int p);

/** Weight negation. */
VirtualCharacter dual(VirtualCharacter const &x);

/** True iff x is constant on Weyl orbits, i.e. x comes from R(G) = R(T)^W. */
bool assert_g_rep(VirtualCharacter const &x, GroupSpec const &g);

/** w.x: [a] -> [w.a]. */
VirtualCharacter act(SignedPermutation const &w, VirtualCharacter const &x);

} // namespace chern
