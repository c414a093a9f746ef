#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "roxlab/bitstring.hpp"

namespace roxlab {

// All pseudorandomness is drawn from SHAKE256. Byte-level layout (big-endian
// integers, `be32(len) || bytes` for strings and bit strings):
//
//   master(s)         = SHAKE256("roxlab:master" || be64(s))[0..32)
//   derive(v, l, i)   = SHAKE256("roxlab:derive" || v || be32(|l|) || l
//                                || be64(i))[0..32)
//   xof(v, dom, ...)  = SHAKE256("roxlab:xof" || v || be32(|dom|) || dom
//                                || be32(bitlen) || packed bits ...)
//   rng block c       = SHAKE256("roxlab:rng" || v || be64(c))[0..64)
//
// tools/golden/rox_reference.py reimplements this layout independently.

inline constexpr std::size_t kSeedBytes = 32;

struct PathElement {
  std::string label;
  std::uint64_t index = 0;
};

/// 256-bit master value plus the labeled path it was derived along.
class Seed {
 public:
  static Seed from_u64(std::uint64_t value);
  static Seed from_bytes(const std::array<std::uint8_t, kSeedBytes>& value);

  Seed derive(std::string_view label, std::uint64_t index = 0) const;

  const std::array<std::uint8_t, kSeedBytes>& value() const { return value_; }
  const std::vector<PathElement>& path() const { return path_; }
  std::string path_string() const;
  std::string hex() const;

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.value_ == b.value_;
  }

 private:
  std::array<std::uint8_t, kSeedBytes> value_{};
  std::vector<PathElement> path_;
};

/// Incremental SHAKE256 absorb/squeeze bound to a seed and domain label.
/// Squeezing finalizes the sponge; the object is single use.
class Xof {
 public:
  Xof(const Seed& seed, std::string_view domain);
  ~Xof();
  Xof(Xof&&) noexcept;
  Xof& operator=(Xof&&) noexcept;
  Xof(const Xof&) = delete;
  Xof& operator=(const Xof&) = delete;

  Xof& absorb(const BitString& bits);
  Xof& absorb_u64(std::uint64_t value);
  BitString squeeze_bits(std::size_t bits);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Deterministic bit stream. Also a UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(const Seed& seed);

  bool next_bit();
  BitString bits(std::size_t count);
  std::uint64_t next_u64();
  // Uniform in [0, bound), bound >= 1, by rejection sampling.
  std::uint64_t uniform(std::uint64_t bound);
  // Bernoulli with probability numerator/denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator);
  // Fresh seed from the next 256 stream bits.
  Seed fork();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next_u64(); }

 private:
  void refill();

  std::array<std::uint8_t, kSeedBytes> key_{};
  std::array<std::uint8_t, 64> block_{};
  std::uint64_t counter_ = 0;
  std::size_t bit_pos_ = 512;
};

}  // namespace roxlab
