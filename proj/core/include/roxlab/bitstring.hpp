#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace roxlab {

/// Bit vector with exact, possibly non-byte-aligned length.
///
/// Bits are stored most-significant-bit first: bit 0 is the high bit of the
/// first byte. Unused trailing bits of the last byte are always zero, so two
/// strings compare equal iff they have the same length and the same bits.
///
/// Text form is `<decimal bitlen>:<hex>`, where the hex part has exactly
/// ceil(len/4) digits and the final nibble is zero-padded on the right
/// (`4:a` is 1010, `3:a` is 101, `0:` is the empty string).
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size);

  static BitString zeros(std::size_t size) { return BitString(size); }
  static BitString ones(std::size_t size);
  // Big-endian, fixed width. Throws if value does not fit.
  static BitString from_uint(std::uint64_t value, std::size_t width);
  // From a string of '0'/'1' characters.
  static BitString from_binary(std::string_view bits);
  static BitString from_bytes(std::span<const std::uint8_t> bytes,
                              std::size_t size);
  static BitString parse(std::string_view text);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool bit(std::size_t index) const;
  void set(std::size_t index, bool value);
  BitString flipped(std::size_t index) const;

  BitString slice(std::size_t offset, std::size_t length) const;
  BitString& append(const BitString& other);
  BitString& append_bit(bool value);

  bool is_zero() const;
  // Requires size() <= 64.
  std::uint64_t to_uint() const;

  std::span<const std::uint8_t> bytes() const { return bytes_; }
  std::string to_string() const;
  std::string to_binary() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a,
                                          const BitString& b);

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

BitString concat(const BitString& a, const BitString& b);
// Throws InvalidArgument on length mismatch.
BitString operator^(const BitString& a, const BitString& b);

struct BitStringHash {
  std::size_t operator()(const BitString& s) const noexcept;
};

}  // namespace roxlab
