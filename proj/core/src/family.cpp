#include "roxlab/family.hpp"

#include <fmt/format.h>

#include "roxlab/errors.hpp"

namespace roxlab {

void FamilyParams::validate() const {
  if (key_bits == 0 || message_bits == 0 || digest_bits == 0) {
    throw InvalidArgument(fmt::format(
        "family widths must be positive (n={}, m={}, d={})", key_bits,
        message_bits, digest_bits));
  }
  if (message_bits <= digest_bits) {
    throw InvalidArgument(fmt::format(
        "block size b = m - d must be > 0 (m={}, d={})", message_bits,
        digest_bits));
  }
}

void FamilyParams::validate_for_rox() const {
  validate();
  if (digest_bits < 2 * block_bits()) {
    throw InvalidArgument(fmt::format(
        "ROX requires d >= 2b (d={}, b={})", digest_bits, block_bits()));
  }
}

FunctionFamily::FunctionFamily(FamilyParams params, std::string label,
                               EvalFn eval, Shape shape)
    : params_(params),
      label_(std::move(label)),
      eval_(std::make_shared<const EvalFn>(std::move(eval))),
      shape_(shape) {
  if (shape == Shape::kCompression) {
    params_.validate();
  } else if (params_.key_bits == 0 || params_.digest_bits == 0) {
    throw InvalidArgument("family key and digest widths must be positive");
  }
  if (!*eval_) throw InvalidArgument("family evaluator is empty");
}

BitString FunctionFamily::eval(const BitString& key,
                               const BitString& message) const {
  if (key.size() != params_.key_bits) {
    throw InvalidArgument(fmt::format("{}: key has {} bits, expected {}",
                                      label_, key.size(), params_.key_bits));
  }
  if (message.size() != params_.message_bits) {
    throw InvalidArgument(fmt::format("{}: message has {} bits, expected {}",
                                      label_, message.size(),
                                      params_.message_bits));
  }
  BitString out = (*eval_)(key, message);
  if (out.size() != params_.digest_bits) {
    throw InvalidArgument(fmt::format("{}: digest has {} bits, expected {}",
                                      label_, out.size(),
                                      params_.digest_bits));
  }
  return out;
}

FunctionFamily FunctionFamily::with_label(std::string label) const {
  FunctionFamily copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

FunctionFamily tabulated_family(const Seed& seed, const FamilyParams& params) {
  params.validate();
  if (params.key_bits > kMaxTabulatedBits ||
      params.message_bits > kMaxTabulatedBits ||
      params.digest_bits > kMaxTabulatedBits) {
    throw InvalidArgument(fmt::format(
        "tabulated family widths must be <= {} (n={}, m={}, d={})",
        kMaxTabulatedBits, params.key_bits, params.message_bits,
        params.digest_bits));
  }
  const std::string domain =
      fmt::format("tabulated:{},{},{}", params.key_bits, params.message_bits,
                  params.digest_bits);
  const std::size_t d = params.digest_bits;
  return FunctionFamily(
      params, "tab",
      [seed, domain, d](const BitString& k, const BitString& x) {
        return Xof(seed, domain).absorb(k).absorb(x).squeeze_bits(d);
      });
}

FunctionFamily constant_family(const FamilyParams& params,
                               const BitString& value) {
  if (value.size() != params.digest_bits) {
    throw InvalidArgument(fmt::format(
        "constant has {} bits, digest width is {}", value.size(),
        params.digest_bits));
  }
  return FunctionFamily(
      params, value.is_zero() ? "const0" : "const:" + value.to_string(),
      [value](const BitString&, const BitString&) { return value; });
}

FunctionFamily injective_family(const Seed& seed, const FamilyParams& params) {
  if (params.digest_bits < params.message_bits) {
    throw InvalidArgument(fmt::format(
        "injective family needs d >= m (m={}, d={})", params.message_bits,
        params.digest_bits));
  }
  const std::size_t m = params.message_bits;
  const std::size_t tail = params.digest_bits - m;
  return FunctionFamily(
      params, "inj",
      [seed, m, tail](const BitString& k, const BitString& x) {
        BitString out =
            x ^ Xof(seed, "injective-pad").absorb(k).squeeze_bits(m);
        out.append(
            Xof(seed, "injective-tail").absorb(k).absorb(x).squeeze_bits(tail));
        return out;
      },
      FunctionFamily::Shape::kGeneral);
}

FunctionFamily counting_family(
    const FunctionFamily& base,
    std::shared_ptr<std::atomic<std::uint64_t>> counter) {
  return FunctionFamily(
      base.params(), base.label(),
      [base, counter](const BitString& k, const BitString& x) {
        counter->fetch_add(1, std::memory_order_relaxed);
        return base.eval(k, x);
      },
      base.shape());
}

}  // namespace roxlab
