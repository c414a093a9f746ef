#include "roxlab/rox.hpp"

#include <bit>

#include <fmt/format.h>

#include "roxlab/errors.hpp"

namespace roxlab {
namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t bits_for(std::size_t max_value) {
  return static_cast<std::size_t>(std::bit_width(max_value));
}

void check_key(const RoxInstance& inst, const BitString& key) {
  if (key.size() != inst.key_bits()) {
    throw InvalidArgument(fmt::format("key has {} bits, expected n = {}",
                                      key.size(), inst.key_bits()));
  }
}

void check_message(const RoxInstance& inst, const BitString& message) {
  if (message.size() < inst.min_message_bits()) {
    throw InvalidArgument(fmt::format(
        "x̄ undefined: message has {} bits, fewer than n = {}", message.size(),
        inst.key_bits()));
  }
  if (block_count(inst, message.size()) > inst.max_blocks()) {
    throw InvalidArgument(fmt::format(
        "message of {} bits exceeds max block count L = {} (ell = {})",
        message.size(), inst.max_blocks(),
        block_count(inst, message.size())));
  }
}

}  // namespace

RoxInstance::RoxInstance(FunctionFamily family, std::size_t max_blocks,
                         const Seed& oracle_seed)
    : RoxInstance(family, max_blocks, oracle_seed,
                  BitString::zeros(family.params().digest_bits)) {}

RoxInstance::RoxInstance(FunctionFamily family, std::size_t max_blocks,
                         const Seed& oracle_seed, BitString iv)
    : family_(std::move(family)),
      max_blocks_(max_blocks),
      iv_(std::move(iv)),
      index_bits_(bits_for(max_blocks)),
      length_bits_(bits_for(max_blocks * family_.params().block_bits())),
      oracle_seed_(oracle_seed),
      mask_oracle_(2 * family_.params().key_bits + index_bits_,
                   family_.params().digest_bits, oracle_seed.derive("ro1")),
      pad_oracle_(family_.params().key_bits + length_bits_ + index_bits_,
                  2 * family_.params().key_bits, oracle_seed.derive("ro2")) {
  if (family_.shape() != FunctionFamily::Shape::kCompression) {
    throw InvalidArgument("ROX needs a compression family");
  }
  family_.params().validate_for_rox();
  if (max_blocks_ == 0) throw InvalidArgument("L must be positive");
  if (iv_.size() != digest_bits()) {
    throw InvalidArgument(fmt::format("IV has {} bits, expected d = {}",
                                      iv_.size(), digest_bits()));
  }
  if (max_blocks_ * block_bits() < 3 * key_bits()) {
    throw InvalidArgument(fmt::format(
        "no valid message length: need L*b >= 3n (L={}, b={}, n={})",
        max_blocks_, block_bits(), key_bits()));
  }
  if (max_pad_queries() >= (std::size_t{1} << index_bits_)) {
    throw InvalidArgument(fmt::format(
        "padding counter up to {} does not fit the {}-bit index field",
        max_pad_queries(), index_bits_));
  }
}

std::size_t RoxInstance::max_message_bits() const {
  return max_blocks_ * block_bits() - 2 * key_bits();
}

std::size_t RoxInstance::max_pad_queries() const {
  return ceil_div(block_bits() + 2 * key_bits() - 1, 2 * key_bits());
}

std::uint64_t RoxInstance::oracle_queries() const {
  return mask_oracle_.stats().queries + pad_oracle_.stats().queries;
}

BitString RoxInstance::mask_input(const BitString& prefix, const BitString& key,
                                  std::size_t round) const {
  BitString in = prefix;
  in.append(key);
  in.append(BitString::from_uint(nu(round), index_bits_));
  return in;
}

BitString RoxInstance::pad_input(const BitString& prefix,
                                 std::size_t message_bits,
                                 std::size_t counter) const {
  BitString in = prefix;
  in.append(BitString::from_uint(message_bits, length_bits_));
  in.append(BitString::from_uint(counter, index_bits_));
  return in;
}

RoxInstance RoxInstance::fresh(const Seed& oracle_seed) const {
  return RoxInstance(family_, max_blocks_, oracle_seed, iv_);
}

std::size_t nu(std::uint64_t i) {
  if (i == 0) throw InvalidArgument("nu(0) is undefined");
  std::size_t t = 0;
  while (i % 2 == 0) {
    i /= 2;
    ++t;
  }
  return t;
}

std::size_t block_count(const RoxInstance& inst, std::size_t message_bits) {
  return ceil_div(message_bits + 2 * inst.key_bits(), inst.block_bits());
}

BitString PaddedMessage::joined() const {
  BitString out;
  for (const auto& b : blocks) out.append(b);
  return out;
}

PaddedMessage pad_rox(RoxInstance& inst, const BitString& message) {
  check_message(inst, message);
  PaddedMessage out;
  out.message_bits = message.size();
  out.prefix = message.slice(0, inst.key_bits());
  out.block_count = block_count(inst, message.size());
  const std::size_t b = inst.block_bits();
  const std::size_t target = out.block_count * b;

  BitString padded = message;
  while (padded.size() < target) {
    ++out.pad_queries;
    padded.append(inst.pad_oracle().query(
        inst.pad_input(out.prefix, message.size(), out.pad_queries)));
  }
  padded = padded.slice(0, target);
  out.blocks.reserve(out.block_count);
  for (std::size_t i = 0; i < out.block_count; ++i) {
    out.blocks.push_back(padded.slice(i * b, b));
  }
  return out;
}

BitString rox_chain(RoxInstance& inst, const BitString& key,
                    const BitString& prefix,
                    std::span<const BitString> blocks) {
  check_key(inst, key);
  if (prefix.size() != inst.key_bits()) {
    throw InvalidArgument(fmt::format("prefix has {} bits, expected n = {}",
                                      prefix.size(), inst.key_bits()));
  }
  if (blocks.size() > inst.max_blocks()) {
    throw InvalidArgument(fmt::format("{} blocks exceed L = {}", blocks.size(),
                                      inst.max_blocks()));
  }
  BitString chain = inst.iv();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != inst.block_bits()) {
      throw InvalidArgument(fmt::format("block {} has {} bits, expected b = {}",
                                        i + 1, blocks[i].size(),
                                        inst.block_bits()));
    }
    const BitString mask =
        inst.mask_oracle().query(inst.mask_input(prefix, key, i + 1));
    chain = inst.family().eval(key, concat(blocks[i], chain ^ mask));
  }
  return chain;
}

BitString rox_eval(RoxInstance& inst, const BitString& key,
                   const BitString& message) {
  check_key(inst, key);
  const PaddedMessage padded = pad_rox(inst, message);
  return rox_chain(inst, key, padded.prefix, padded.blocks);
}

std::vector<RoundTrace> rox_trace(RoxInstance& inst, const BitString& key,
                                  const BitString& message) {
  check_key(inst, key);
  const PaddedMessage padded = pad_rox(inst, message);
  std::vector<RoundTrace> trace;
  trace.reserve(padded.block_count);
  BitString chain = inst.iv();
  for (std::size_t i = 0; i < padded.block_count; ++i) {
    RoundTrace round;
    round.round = i + 1;
    round.block = padded.blocks[i];
    round.chain_in = chain;
    round.mask =
        inst.mask_oracle().query(inst.mask_input(padded.prefix, key, i + 1));
    round.compression_input = concat(round.block, chain ^ round.mask);
    round.chain_out = inst.family().eval(key, round.compression_input);
    chain = round.chain_out;
    trace.push_back(std::move(round));
  }
  return trace;
}

BitString md_strengthened_eval(const FunctionFamily& family,
                               const BitString& key, const BitString& iv,
                               const BitString& message,
                               std::size_t length_bits) {
  family.params().validate();
  const std::size_t b = family.params().block_bits();
  if (iv.size() != family.params().digest_bits) {
    throw InvalidArgument(fmt::format("IV has {} bits, expected d = {}",
                                      iv.size(), family.params().digest_bits));
  }
  if (length_bits == 0 || length_bits > 63 ||
      (message.size() >> length_bits) != 0) {
    throw InvalidArgument(fmt::format(
        "message of {} bits is too long for a {}-bit length field",
        message.size(), length_bits));
  }
  BitString padded = message;
  padded.append_bit(true);
  while ((padded.size() + length_bits) % b != 0) padded.append_bit(false);
  padded.append(BitString::from_uint(message.size(), length_bits));

  BitString chain = iv;
  for (std::size_t off = 0; off < padded.size(); off += b) {
    chain = family.eval(key, concat(padded.slice(off, b), chain));
  }
  return chain;
}

FunctionFamily rox_family(std::shared_ptr<RoxInstance> inst,
                          std::size_t message_bits) {
  if (!inst) throw InvalidArgument("null ROX instance");
  if (message_bits < inst->min_message_bits() ||
      message_bits > inst->max_message_bits()) {
    throw InvalidArgument(fmt::format(
        "ROX message slice of {} bits outside [{}, {}]", message_bits,
        inst->min_message_bits(), inst->max_message_bits()));
  }
  FamilyParams params{inst->key_bits(), message_bits, inst->digest_bits()};
  return FunctionFamily(
      params, "rox:" + inst->family().label(),
      [inst](const BitString& k, const BitString& x) {
        return rox_eval(*inst, k, x);
      },
      FunctionFamily::Shape::kGeneral);
}

}  // namespace roxlab
