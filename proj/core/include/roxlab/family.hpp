#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "roxlab/bitstring.hpp"
#include "roxlab/seed.hpp"

namespace roxlab {

/// Widths of a keyed family {0,1}^key x {0,1}^message -> {0,1}^digest.
struct FamilyParams {
  std::size_t key_bits = 0;
  std::size_t message_bits = 0;
  std::size_t digest_bits = 0;

  // message_bits - digest_bits; only meaningful once validate() passed.
  std::size_t block_bits() const { return message_bits - digest_bits; }

  // Compression-function constraints: all widths positive, block size > 0.
  void validate() const;
  // Additionally digest >= 2 * block, as iterated by ROX.
  void validate_for_rox() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Immutable, shareable keyed function family.
class FunctionFamily {
 public:
  using EvalFn =
      std::function<BitString(const BitString& key, const BitString& message)>;

  enum class Shape {
    kCompression,  // message_bits > digest_bits required
    kGeneral,      // any positive widths (ROX slices, injective references)
  };

  FunctionFamily(FamilyParams params, std::string label, EvalFn eval,
                 Shape shape = Shape::kCompression);

  const FamilyParams& params() const { return params_; }
  const std::string& label() const { return label_; }
  Shape shape() const { return shape_; }

  // Checks key/message widths and the width of the produced digest.
  BitString eval(const BitString& key, const BitString& message) const;

  FunctionFamily with_label(std::string label) const;

 private:
  FamilyParams params_;
  std::string label_;
  std::shared_ptr<const EvalFn> eval_;
  Shape shape_;
};

inline constexpr std::size_t kMaxTabulatedBits = 16;

// Pseudorandom family: eval(k, x) = first d bits of
// xof(seed, "tabulated:<n>,<m>,<d>", k, x). Each width must be <= 16.
FunctionFamily tabulated_family(const Seed& seed, const FamilyParams& params);

FunctionFamily constant_family(const FamilyParams& params,
                               const BitString& value);

// Expanding family (digest >= message) injective under every key:
// eval(k, x) = (x ^ pad_k) || xof(seed, "injective-tail", k, x).
FunctionFamily injective_family(const Seed& seed, const FamilyParams& params);

// Wraps a family and increments `counter` on every evaluation.
FunctionFamily counting_family(
    const FunctionFamily& base,
    std::shared_ptr<std::atomic<std::uint64_t>> counter);

}  // namespace roxlab
