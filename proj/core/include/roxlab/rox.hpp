#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "roxlab/bitstring.hpp"
#include "roxlab/family.hpp"
#include "roxlab/oracle.hpp"
#include "roxlab/seed.hpp"

namespace roxlab {

/// ROX iterated hash over a compression family, with its two oracles.
///
/// Widths (n key, b block, d digest, L max blocks):
///   index field   w_idx = ceil(lg(L + 1))      encodes nu(i) and counters j
///   length field  w_len = ceil(lg(L * b + 1))  encodes |x|
///   mask oracle   (xbar || k || nu(i))  : 2n + w_idx   -> d bits
///   pad oracle    (xbar || |x| || j)    : n + w_len + w_idx -> 2n bits
///
/// The instance owns both oracles and is single-owner mutable state.
class RoxInstance {
 public:
  // IV defaults to 0^d.
  RoxInstance(FunctionFamily family, std::size_t max_blocks,
              const Seed& oracle_seed);
  RoxInstance(FunctionFamily family, std::size_t max_blocks,
              const Seed& oracle_seed, BitString iv);

  const FunctionFamily& family() const { return family_; }
  std::size_t key_bits() const { return family_.params().key_bits; }
  std::size_t block_bits() const { return family_.params().block_bits(); }
  std::size_t digest_bits() const { return family_.params().digest_bits; }
  std::size_t max_blocks() const { return max_blocks_; }
  const BitString& iv() const { return iv_; }
  std::size_t index_bits() const { return index_bits_; }
  std::size_t length_bits() const { return length_bits_; }

  // Valid message lengths are [n, L*b - 2n].
  std::size_t min_message_bits() const { return key_bits(); }
  std::size_t max_message_bits() const;
  // ceil((b + 2n - 1) / 2n)
  std::size_t max_pad_queries() const;

  OracleSim& mask_oracle() { return mask_oracle_; }
  const OracleSim& mask_oracle() const { return mask_oracle_; }
  OracleSim& pad_oracle() { return pad_oracle_; }
  const OracleSim& pad_oracle() const { return pad_oracle_; }
  std::uint64_t oracle_queries() const;

  BitString mask_input(const BitString& prefix, const BitString& key,
                       std::size_t round) const;
  BitString pad_input(const BitString& prefix, std::size_t message_bits,
                      std::size_t counter) const;

  // Same family, parameters and IV; cold oracles from `oracle_seed`.
  RoxInstance fresh(const Seed& oracle_seed) const;

 private:
  FunctionFamily family_;
  std::size_t max_blocks_;
  BitString iv_;
  std::size_t index_bits_;
  std::size_t length_bits_;
  Seed oracle_seed_;
  OracleSim mask_oracle_;
  OracleSim pad_oracle_;
};

// 2-adic valuation: the largest t with 2^t dividing i. Rejects i = 0.
std::size_t nu(std::uint64_t i);

// ceil((|x| + 2n) / b)
std::size_t block_count(const RoxInstance& inst, std::size_t message_bits);

struct PaddedMessage {
  std::vector<BitString> blocks;
  std::size_t block_count = 0;   // ell(x)
  std::size_t pad_queries = 0;   // q2(x), pad-oracle outputs consumed
  BitString prefix;              // first n bits of x
  std::size_t message_bits = 0;  // |x|

  BitString joined() const;
};

PaddedMessage pad_rox(RoxInstance& inst, const BitString& message);

// Chaining value after the given block prefix; IV for an empty prefix.
BitString rox_chain(RoxInstance& inst, const BitString& key,
                    const BitString& prefix, std::span<const BitString> blocks);

BitString rox_eval(RoxInstance& inst, const BitString& key,
                   const BitString& message);

struct RoundTrace {
  std::size_t round = 0;  // 1-based
  BitString block;
  BitString chain_in;
  BitString mask;
  BitString compression_input;  // block || (chain_in ^ mask)
  BitString chain_out;
};

std::vector<RoundTrace> rox_trace(RoxInstance& inst, const BitString& key,
                                  const BitString& message);

// Plain strengthened Merkle-Damgard: x || 1 || 0* || be(|x|, length_bits),
// padded to a block multiple, chained as H_k(x_i || chain_{i-1}) from iv.
BitString md_strengthened_eval(const FunctionFamily& family,
                               const BitString& key, const BitString& iv,
                               const BitString& message,
                               std::size_t length_bits);

// ROX restricted to messages of exactly `message_bits` bits, exposed as an
// ordinary family. Shares (and mutates the oracle tables of) `inst`, so the
// returned family must stay with the owner of `inst`.
FunctionFamily rox_family(std::shared_ptr<RoxInstance> inst,
                          std::size_t message_bits);

}  // namespace roxlab
