#pragma once

#include "roxlab/family.hpp"
#include "roxlab/games.hpp"

namespace roxlab {

// Family combinators that keep collision-style guarantees of the base family
// while handing the adversary a trivial win in the always/everywhere games.
// Only the classical attacks are provided here.

// H_k = 0^d when k = 0^n, F_k otherwise. Params unchanged.
FunctionFamily zero_key_family(const FunctionFamily& base);

// H_k(0^m) = 0^d, H_k(x) = 1 || F_k(x) otherwise. Digest grows by one bit.
FunctionFamily pinned_zero_family(const FunctionFamily& base);

// aPre: key 0^n, answer 0^m.
Adversary attack_apre_zero_key();
// aSec: key 0^n, answer x' with its last bit flipped.
Adversary attack_asec_zero_key();
// ePre: target 0^d before seeing the key, answer 0^m.
Adversary attack_epre_pinned();

}  // namespace roxlab
