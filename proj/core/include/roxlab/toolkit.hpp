#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roxlab/bitstring.hpp"
#include "roxlab/rox.hpp"
#include "roxlab/seed.hpp"

namespace roxlab {

// Procedures that move witnesses between ROX and its compression function.

struct CollisionWitness {
  BitString first;   // compression input from the first message's trace
  BitString second;  // compression input from the second message's trace
  std::size_t round = 0;  // 1-based round of the first message
};

// Scans both traces backward from the final round and returns the first pair
// of differing compression inputs whose outputs agree. Throws
// NoCollidingRound if the chains diverge first or no differing round exists.
// Rejects equal or non-colliding messages.
CollisionWitness extract_collision(RoxInstance& inst, const BitString& key,
                                   const BitString& first,
                                   const BitString& second);

enum class OracleId { kMask, kPad };

struct ProgrammedPoint {
  OracleId oracle;
  BitString input;
  BitString value;
};

struct EmbedResult {
  BitString message;  // ROX input whose round-`round` compression input is x
  std::size_t round = 0;
  std::vector<ProgrammedPoint> programmed;
  std::size_t attempts = 0;  // random messages drawn before a mask fit
};

struct EmbedOptions {
  // Length of the ROX message. Drawn from [max(b*i, n), min(b*(i+2),
  // L*b - 2n)] when unset.
  std::optional<std::size_t> message_bits;
  std::size_t max_attempts = 64;
};

// Digest width above which the shared-mask fixed-point search is refused.
inline constexpr std::size_t kMaxMaskSearchBits = 20;

/// Builds a ROX message whose round-`round` compression input is `x` and
/// programs the single mask-oracle cell that makes it so.
///
/// x = h || g with |h| = b, |g| = d. A random message of length >= b*round
/// gets h spliced in as block `round`; the mask cell (xbar, k, nu(round)) is
/// then programmed to g ^ chain_{round-1}. When an earlier round reuses the
/// same mask cell (round not a power of two), the chain itself depends on the
/// programmed value, so the value is found by a fixed-point search over all
/// 2^d candidates, redrawing the random message if none fits.
///
/// Throws LateProgramming if the mask cell was already evaluation-queried.
EmbedResult embed_message(RoxInstance& inst, const BitString& key,
                          const BitString& x, std::size_t round,
                          const Seed& seed, const EmbedOptions& options = {});

// x_ell || (chain_{ell-1} ^ mask_ell): a compression preimage of the ROX
// digest of `message`, using ell - 1 compression calls.
BitString extract_preimage(RoxInstance& inst, const BitString& key,
                           const BitString& message);

}  // namespace roxlab
