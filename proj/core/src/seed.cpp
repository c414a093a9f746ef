#include "roxlab/seed.hpp"

#include <bit>
#include <stdexcept>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "roxlab/errors.hpp"

namespace roxlab {
namespace {

const EVP_MD* shake256() {
  static EVP_MD* md = EVP_MD_fetch(nullptr, "SHAKE256", nullptr);
  if (md == nullptr) throw std::runtime_error("SHAKE256 unavailable");
  return md;
}

struct CtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
using CtxPtr = std::unique_ptr<EVP_MD_CTX, CtxDeleter>;

CtxPtr new_ctx() {
  CtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), shake256(), nullptr) != 1) {
    throw std::runtime_error("SHAKE256 init failed");
  }
  return ctx;
}

void update(EVP_MD_CTX* ctx, const void* data, std::size_t len) {
  if (len != 0 && EVP_DigestUpdate(ctx, data, len) != 1) {
    throw std::runtime_error("SHAKE256 update failed");
  }
}

void update_be(EVP_MD_CTX* ctx, std::uint64_t value, std::size_t width) {
  std::array<std::uint8_t, 8> buf{};
  for (std::size_t i = 0; i < width; ++i) {
    buf[i] = static_cast<std::uint8_t>(value >> (8 * (width - 1 - i)));
  }
  update(ctx, buf.data(), width);
}

void update_str(EVP_MD_CTX* ctx, std::string_view s) {
  update(ctx, s.data(), s.size());
}

void finish(EVP_MD_CTX* ctx, std::uint8_t* out, std::size_t len) {
  if (EVP_DigestFinalXOF(ctx, out, len) != 1) {
    throw std::runtime_error("SHAKE256 finalize failed");
  }
}

}  // namespace

Seed Seed::from_u64(std::uint64_t value) {
  auto ctx = new_ctx();
  update_str(ctx.get(), "roxlab:master");
  update_be(ctx.get(), value, 8);
  Seed seed;
  finish(ctx.get(), seed.value_.data(), kSeedBytes);
  seed.path_.push_back({"master", value});
  return seed;
}

Seed Seed::from_bytes(const std::array<std::uint8_t, kSeedBytes>& value) {
  Seed seed;
  seed.value_ = value;
  return seed;
}

Seed Seed::derive(std::string_view label, std::uint64_t index) const {
  auto ctx = new_ctx();
  update_str(ctx.get(), "roxlab:derive");
  update(ctx.get(), value_.data(), value_.size());
  update_be(ctx.get(), label.size(), 4);
  update_str(ctx.get(), label);
  update_be(ctx.get(), index, 8);
  Seed child;
  finish(ctx.get(), child.value_.data(), kSeedBytes);
  child.path_ = path_;
  child.path_.push_back({std::string(label), index});
  return child;
}

std::string Seed::path_string() const {
  std::string out;
  for (const auto& e : path_) {
    if (!out.empty()) out += '/';
    out += fmt::format("{}[{}]", e.label, e.index);
  }
  return out;
}

std::string Seed::hex() const {
  std::string out;
  for (auto b : value_) out += fmt::format("{:02x}", b);
  return out;
}

struct Xof::Impl {
  CtxPtr ctx;
  bool finished = false;
};

Xof::Xof(const Seed& seed, std::string_view domain)
    : impl_(std::make_unique<Impl>()) {
  impl_->ctx = new_ctx();
  update_str(impl_->ctx.get(), "roxlab:xof");
  update(impl_->ctx.get(), seed.value().data(), seed.value().size());
  update_be(impl_->ctx.get(), domain.size(), 4);
  update_str(impl_->ctx.get(), domain);
}

Xof::~Xof() = default;
Xof::Xof(Xof&&) noexcept = default;
Xof& Xof::operator=(Xof&&) noexcept = default;

Xof& Xof::absorb(const BitString& bits) {
  if (impl_->finished) throw std::logic_error("Xof already squeezed");
  update_be(impl_->ctx.get(), bits.size(), 4);
  update(impl_->ctx.get(), bits.bytes().data(), bits.bytes().size());
  return *this;
}

Xof& Xof::absorb_u64(std::uint64_t value) {
  if (impl_->finished) throw std::logic_error("Xof already squeezed");
  update_be(impl_->ctx.get(), value, 8);
  return *this;
}

BitString Xof::squeeze_bits(std::size_t bits) {
  if (impl_->finished) throw std::logic_error("Xof already squeezed");
  impl_->finished = true;
  std::vector<std::uint8_t> out((bits + 7) / 8);
  if (out.empty()) return BitString();
  finish(impl_->ctx.get(), out.data(), out.size());
  return BitString::from_bytes(out, bits);
}

Rng::Rng(const Seed& seed) : key_(seed.value()) {}

void Rng::refill() {
  auto ctx = new_ctx();
  update_str(ctx.get(), "roxlab:rng");
  update(ctx.get(), key_.data(), key_.size());
  update_be(ctx.get(), counter_++, 8);
  finish(ctx.get(), block_.data(), block_.size());
  bit_pos_ = 0;
}

bool Rng::next_bit() {
  if (bit_pos_ >= block_.size() * 8) refill();
  const bool b = ((block_[bit_pos_ / 8] >> (7 - bit_pos_ % 8)) & 1U) != 0;
  ++bit_pos_;
  return b;
}

BitString Rng::bits(std::size_t count) {
  BitString out(count);
  for (std::size_t i = 0; i < count; ++i) out.set(i, next_bit());
  return out;
}

std::uint64_t Rng::next_u64() {
  std::uint64_t v = 0;
  for (int i = 0; i < 64; ++i) v = (v << 1) | (next_bit() ? 1 : 0);
  return v;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform bound must be positive");
  if (bound == 1) return 0;
  const int width = std::bit_width(bound - 1);
  for (;;) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | (next_bit() ? 1 : 0);
    if (v < bound) return v;
  }
}

bool Rng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return uniform(denominator) < numerator;
}

Seed Rng::fork() {
  std::array<std::uint8_t, kSeedBytes> value{};
  for (auto& b : value) {
    std::uint8_t v = 0;
    for (int i = 0; i < 8; ++i) v = static_cast<std::uint8_t>((v << 1) | (next_bit() ? 1 : 0));
    b = v;
  }
  return Seed::from_bytes(value);
}

}  // namespace roxlab
