#include "roxlab/bitstring.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "roxlab/errors.hpp"

namespace roxlab {
namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

std::size_t byte_count(std::size_t bits) { return (bits + 7) / 8; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString::BitString(std::size_t size) : bytes_(byte_count(size)), size_(size) {}

BitString BitString::ones(std::size_t size) {
  BitString out(size);
  for (std::size_t i = 0; i < size; ++i) out.set(i, true);
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw InvalidArgument(
        fmt::format("value {} does not fit in {} bits", value, width));
  }
  BitString out(width);
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    out.set(width - 1 - i, ((value >> i) & 1U) != 0);
  }
  return out;
}

BitString BitString::from_binary(std::string_view bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw InvalidArgument(
          fmt::format("invalid binary digit '{}' at position {}", bits[i], i));
    }
    out.set(i, bits[i] == '1');
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes,
                                std::size_t size) {
  if (bytes.size() * 8 < size) {
    throw InvalidArgument(fmt::format("{} bytes cannot hold {} bits",
                                      bytes.size(), size));
  }
  BitString out(size);
  std::copy_n(bytes.begin(), out.bytes_.size(), out.bytes_.begin());
  if (size % 8 != 0) {
    out.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - size % 8));
  }
  return out;
}

BitString BitString::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument(
        fmt::format("bit string '{}' lacks the '<bitlen>:<hex>' form", text));
  }
  std::size_t size = 0;
  const auto len_part = text.substr(0, colon);
  const auto [ptr, ec] =
      std::from_chars(len_part.data(), len_part.data() + len_part.size(), size);
  if (ec != std::errc() || ptr != len_part.data() + len_part.size() ||
      len_part.empty()) {
    throw InvalidArgument(fmt::format("bad bit length in '{}'", text));
  }
  const auto hex = text.substr(colon + 1);
  if (hex.size() != (size + 3) / 4) {
    throw InvalidArgument(fmt::format(
        "'{}': {} bits need {} hex digits, got {}", text, size,
        (size + 3) / 4, hex.size()));
  }
  BitString out(size);
  for (std::size_t j = 0; j < hex.size(); ++j) {
    const int v = hex_value(hex[j]);
    if (v < 0) {
      throw InvalidArgument(fmt::format("invalid hex digit in '{}'", text));
    }
    for (std::size_t b = 0; b < 4; ++b) {
      const bool value = ((v >> (3 - b)) & 1) != 0;
      const std::size_t index = 4 * j + b;
      if (index < size) {
        out.set(index, value);
      } else if (value) {
        throw InvalidArgument(
            fmt::format("'{}': padding bits of the last nibble must be zero",
                        text));
      }
    }
  }
  return out;
}

bool BitString::bit(std::size_t index) const {
  if (index >= size_) {
    throw InvalidArgument(
        fmt::format("bit index {} out of range for length {}", index, size_));
  }
  return ((bytes_[index / 8] >> (7 - index % 8)) & 1U) != 0;
}

void BitString::set(std::size_t index, bool value) {
  if (index >= size_) {
    throw InvalidArgument(
        fmt::format("bit index {} out of range for length {}", index, size_));
  }
  const auto mask = static_cast<std::uint8_t>(1U << (7 - index % 8));
  if (value) {
    bytes_[index / 8] |= mask;
  } else {
    bytes_[index / 8] &= static_cast<std::uint8_t>(~mask);
  }
}

BitString BitString::flipped(std::size_t index) const {
  BitString out = *this;
  out.set(index, !bit(index));
  return out;
}

BitString BitString::slice(std::size_t offset, std::size_t length) const {
  if (offset > size_ || length > size_ - offset) {
    throw InvalidArgument(fmt::format(
        "slice [{}, {}) out of range for length {}", offset, offset + length,
        size_));
  }
  BitString out(length);
  if (offset % 8 == 0) {
    std::copy_n(bytes_.begin() + static_cast<std::ptrdiff_t>(offset / 8),
                out.bytes_.size(), out.bytes_.begin());
    if (length % 8 != 0) {
      out.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - length % 8));
    }
    return out;
  }
  for (std::size_t i = 0; i < length; ++i) out.set(i, bit(offset + i));
  return out;
}

BitString& BitString::append(const BitString& other) {
  const std::size_t old = size_;
  size_ += other.size_;
  bytes_.resize(byte_count(size_), 0);
  if (old % 8 == 0) {
    std::copy(other.bytes_.begin(), other.bytes_.end(),
              bytes_.begin() + static_cast<std::ptrdiff_t>(old / 8));
    return *this;
  }
  for (std::size_t i = 0; i < other.size_; ++i) set(old + i, other.bit(i));
  return *this;
}

BitString& BitString::append_bit(bool value) {
  ++size_;
  bytes_.resize(byte_count(size_), 0);
  set(size_ - 1, value);
  return *this;
}

bool BitString::is_zero() const {
  return std::all_of(bytes_.begin(), bytes_.end(),
                     [](std::uint8_t b) { return b == 0; });
}

std::uint64_t BitString::to_uint() const {
  if (size_ > 64) {
    throw InvalidArgument(
        fmt::format("{}-bit string does not fit in 64 bits", size_));
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < size_; ++i) value = (value << 1) | (bit(i) ? 1 : 0);
  return value;
}

std::string BitString::to_string() const {
  std::string out = fmt::format("{}:", size_);
  const std::size_t digits = (size_ + 3) / 4;
  out.reserve(out.size() + digits);
  for (std::size_t j = 0; j < digits; ++j) {
    const std::uint8_t byte = bytes_[j / 2];
    out.push_back(kHexDigits[j % 2 == 0 ? byte >> 4 : byte & 0x0F]);
  }
  return out;
}

std::string BitString::to_binary() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.bytes_.begin(), a.bytes_.end(), b.bytes_.begin(), b.bytes_.end());
}

BitString concat(const BitString& a, const BitString& b) {
  BitString out = a;
  out.append(b);
  return out;
}

BitString operator^(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument(
        fmt::format("xor of mismatched lengths {} and {}", a.size(), b.size()));
  }
  std::vector<std::uint8_t> bytes(a.bytes().begin(), a.bytes().end());
  for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] ^= b.bytes()[i];
  return BitString::from_bytes(bytes, a.size());
}

std::size_t BitStringHash::operator()(const BitString& s) const noexcept {
  // FNV-1a over length and bytes.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint8_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (std::size_t i = 0; i < 8; ++i) {
    mix(static_cast<std::uint8_t>(s.size() >> (8 * i)));
  }
  for (auto b : s.bytes()) mix(b);
  return static_cast<std::size_t>(h);
}

}  // namespace roxlab
