#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "roxlab/games.hpp"
#include "roxlab/rox.hpp"

namespace roxlab {

/// Collision finder from an eSec adversary: run its first stage to obtain the
/// target x, take the challenger's key, run its second stage for x', and
/// submit (x, x'). Wins the Coll game exactly when the eSec adversary would
/// have won on the same coins.
Adversary coll_from_esec(Adversary esec);

struct ReductionRecord {
  bool inner_won = false;  // wrapped ROX-level adversary won its own game
  bool outer_won = false;  // reduction's answer re-validated against H
  bool failed = false;     // extracted round differed from embedded round
  std::size_t embed_round = 0;
  std::size_t extracted_round = 0;
  std::uint64_t extra_queries = 0;  // oracle queries spent by the reduction
  std::uint64_t query_bound = 0;    // q(x) of the adversary's ROX message
  std::string note;
};

// Append-only, thread-safe list of per-trial records.
class ReductionLog {
 public:
  void add(ReductionRecord record);
  std::vector<ReductionRecord> records() const;

 private:
  mutable std::mutex mu_;
  std::vector<ReductionRecord> records_;
};

struct RoxReductionConfig {
  std::size_t max_blocks = 16;
  std::size_t i_max = 8;
};

/// aPre (or Pre) adversary against H built from one against ROX over H.
///
/// First stage: build a ROX instance with fresh oracles from the reduction's
/// coins and run the wrapped first stage against it, forwarding its key.
/// Second stage: hand the H challenge digest to the wrapped adversary as a
/// ROX target and turn its answer into an H preimage with extract_preimage.
/// In the Pre game the instance is built at the second stage instead.
Adversary rox_apre_reduction(Adversary rox_adversary,
                             RoxReductionConfig config = {},
                             std::shared_ptr<ReductionLog> log = nullptr);

/// aSec (or Sec) adversary against H built from one against ROX over H.
///
/// Second stage: pick i uniformly in [1, i_max], embed the challenge message
/// at round i, run the wrapped adversary on the embedding, extract a
/// collision and answer its second half iff it sits at round i. Anything else
/// is a FAIL and the trial is lost.
Adversary rox_asec_reduction(Adversary rox_adversary,
                             RoxReductionConfig config = {},
                             std::shared_ptr<ReductionLog> log = nullptr);

// ell(x) + q2(x) in closed form.
std::uint64_t query_count(const RoxInstance& inst, std::size_t message_bits);

struct DigestDistance {
  double total_variation = 0.0;
  std::uint64_t samples = 0;
};

// Empirical total-variation distance between H_k(uniform m-bit x) and
// ROX_k(uniform message_bits-bit x). Reported only; digest width <= 20.
DigestDistance challenge_digest_distance(RoxInstance& inst,
                                         const BitString& key,
                                         std::size_t message_bits,
                                         std::uint64_t samples, Rng& rng);

// Planted adversaries with known win conditions.

// eSec: target uniform from its own coins, answer target ^ 1 (last bit).
Adversary esec_flip_adversary();

// ROX aPre/Pre: key 0^n; up to `budget` random messages of `message_bits`
// bits until one hits the target digest.
Adversary rox_preimage_search_adversary(std::size_t message_bits,
                                        std::uint64_t budget);

// ROX aSec/Sec: key 0^n; flips the first bit of block `round` of the target
// when that bit lies inside the message, else returns the target unchanged.
Adversary rox_block_flip_adversary(std::size_t round);

}  // namespace roxlab
