#include "roxlab/toolkit.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

#include "roxlab/errors.hpp"

namespace roxlab {

CollisionWitness extract_collision(RoxInstance& inst, const BitString& key,
                                   const BitString& first,
                                   const BitString& second) {
  if (first == second) {
    throw InvalidArgument("collision extraction needs two distinct messages");
  }
  const auto a = rox_trace(inst, key, first);
  const auto b = rox_trace(inst, key, second);
  if (a.back().chain_out != b.back().chain_out) {
    throw InvalidArgument("messages do not collide under ROX");
  }
  const std::size_t rounds = std::min(a.size(), b.size());
  for (std::size_t back = 0; back < rounds; ++back) {
    const RoundTrace& ra = a[a.size() - 1 - back];
    const RoundTrace& rb = b[b.size() - 1 - back];
    if (ra.chain_out != rb.chain_out) {
      throw NoCollidingRound(fmt::format(
          "chains diverge at round {} before any differing input", ra.round));
    }
    if (ra.compression_input != rb.compression_input) {
      return {ra.compression_input, rb.compression_input, ra.round};
    }
  }
  throw NoCollidingRound(
      fmt::format("all {} compared rounds have equal inputs", rounds));
}

EmbedResult embed_message(RoxInstance& inst, const BitString& key,
                          const BitString& x, std::size_t round,
                          const Seed& seed, const EmbedOptions& options) {
  const std::size_t n = inst.key_bits();
  const std::size_t b = inst.block_bits();
  const std::size_t d = inst.digest_bits();
  if (key.size() != n) {
    throw InvalidArgument(
        fmt::format("key has {} bits, expected n = {}", key.size(), n));
  }
  if (x.size() != b + d) {
    throw InvalidArgument(fmt::format(
        "embedded input has {} bits, expected m = {}", x.size(), b + d));
  }
  if (round == 0 || round > inst.max_blocks()) {
    throw InvalidArgument(fmt::format("embedding round {} outside [1, {}]",
                                      round, inst.max_blocks()));
  }
  const std::size_t lo = std::max(b * round, n);
  const std::size_t hi = std::min(b * (round + 2), inst.max_message_bits());
  if (options.message_bits) {
    const std::size_t len = *options.message_bits;
    if (len < lo || len > inst.max_message_bits()) {
      throw InvalidArgument(fmt::format(
          "message length {} infeasible for round {} (need [{}, {}])", len,
          round, lo, inst.max_message_bits()));
    }
  } else if (lo > hi) {
    throw InvalidArgument(fmt::format(
        "no feasible message length for round {} (window [{}, {}])", round, lo,
        hi));
  }

  const bool shared_mask = !std::has_single_bit(round);
  if (shared_mask && d > kMaxMaskSearchBits) {
    throw InvalidArgument(fmt::format(
        "round {} reuses an earlier mask; fixed-point search over 2^{} values "
        "is refused (limit 2^{})",
        round, d, kMaxMaskSearchBits));
  }

  Rng rng(seed);
  const std::size_t length =
      options.message_bits ? *options.message_bits : lo + rng.uniform(hi - lo + 1);
  const BitString head = x.slice(0, b);
  const BitString tail = x.slice(b, d);
  const std::size_t target_nu = nu(round);

  for (std::size_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    BitString message = rng.bits(length);
    for (std::size_t j = 0; j < b; ++j) {
      message.set((round - 1) * b + j, head.bit(j));
    }
    const BitString prefix = message.slice(0, n);
    const BitString point = inst.mask_input(prefix, key, round);
    if (inst.mask_oracle().was_queried(point)) {
      throw LateProgramming(fmt::format(
          "mask cell {} was queried before programming", point.to_string()));
    }
    std::vector<BitString> blocks;
    blocks.reserve(round - 1);
    for (std::size_t j = 0; j + 1 < round; ++j) {
      blocks.push_back(message.slice(j * b, b));
    }

    std::optional<BitString> value;
    if (!shared_mask) {
      value = tail ^ rox_chain(inst, key, prefix, blocks);
    } else {
      std::vector<std::optional<BitString>> masks(blocks.size());
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (nu(j + 1) != target_nu) {
          masks[j] = inst.mask_oracle().query(inst.mask_input(prefix, key, j + 1));
        }
      }
      const std::uint64_t candidates = std::uint64_t{1} << d;
      for (std::uint64_t c = 0; c < candidates && !value; ++c) {
        const BitString guess = BitString::from_uint(c, d);
        BitString chain = inst.iv();
        for (std::size_t j = 0; j < blocks.size(); ++j) {
          chain = inst.family().eval(
              key, concat(blocks[j], chain ^ (masks[j] ? *masks[j] : guess)));
        }
        if ((tail ^ chain) == guess) value = guess;
      }
    }
    if (value) {
      inst.mask_oracle().program(point, *value);
      EmbedResult result;
      result.message = std::move(message);
      result.round = round;
      result.programmed.push_back({OracleId::kMask, point, *value});
      result.attempts = attempt;
      return result;
    }
  }
  throw Error(fmt::format("no consistent mask value for round {} after {} "
                          "attempts",
                          round, options.max_attempts));
}

BitString extract_preimage(RoxInstance& inst, const BitString& key,
                           const BitString& message) {
  const PaddedMessage padded = pad_rox(inst, message);
  const std::size_t last = padded.block_count;
  const BitString chain =
      rox_chain(inst, key, padded.prefix,
                std::span<const BitString>(padded.blocks).first(last - 1));
  const BitString mask =
      inst.mask_oracle().query(inst.mask_input(padded.prefix, key, last));
  return concat(padded.blocks[last - 1], chain ^ mask);
}

}  // namespace roxlab
