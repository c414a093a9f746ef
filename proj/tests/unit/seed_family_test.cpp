#include <gtest/gtest.h>

#include <set>

#include "roxlab/errors.hpp"
#include "roxlab/family.hpp"
#include "roxlab/seed.hpp"

namespace roxlab {
namespace {

TEST(Seed, DerivationIsDeterministicAndPathSensitive) {
  const Seed root = Seed::from_u64(1);
  EXPECT_EQ(root.derive("a", 3), Seed::from_u64(1).derive("a", 3));
  EXPECT_FALSE(root.derive("a", 3) == root.derive("a", 4));
  EXPECT_FALSE(root.derive("a", 3) == root.derive("b", 3));
  EXPECT_FALSE(root.derive("a").derive("b") == root.derive("b").derive("a"));
  EXPECT_EQ(root.derive("game").derive("trial", 2).path_string(),
            "master[1]/game[0]/trial[2]");
}

// Pinned against hashlib.shake_256(b"roxlab:master" + (1).to_bytes(8, "big")).
TEST(Seed, MasterMatchesShakeLayout) {
  EXPECT_EQ(Seed::from_u64(1).hex(),
            "096974f051932ad668cf895e794ea8283c6bcbed49bc267dee1547a7e2d4ca9a");
}

TEST(Rng, UniformStaysInRange) {
  Rng rng(Seed::from_u64(2));
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform(7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_THROW(rng.uniform(0), InvalidArgument);
}

TEST(FamilyParams, Validation) {
  EXPECT_NO_THROW((FamilyParams{4, 12, 8}.validate_for_rox()));
  EXPECT_THROW((FamilyParams{4, 8, 8}.validate()), InvalidArgument);   // b = 0
  EXPECT_THROW((FamilyParams{4, 6, 8}.validate()), InvalidArgument);   // b < 0
  EXPECT_NO_THROW((FamilyParams{4, 13, 8}.validate()));
  EXPECT_THROW((FamilyParams{4, 13, 8}.validate_for_rox()), InvalidArgument);
  EXPECT_THROW((FamilyParams{0, 12, 8}.validate()), InvalidArgument);
}

TEST(TabulatedFamily, Reproducible) {
  const FamilyParams p{4, 12, 8};
  Rng rng(Seed::from_u64(3));
  for (int i = 0; i < 100; ++i) {
    const Seed s = rng.fork();
    const BitString k = rng.bits(4);
    const BitString x = rng.bits(12);
    EXPECT_EQ(tabulated_family(s, p).eval(k, x),
              tabulated_family(s, p).eval(k, x));
  }
}

TEST(TabulatedFamily, DistinctSeedsDifferOnProbes) {
  const FamilyParams p{4, 12, 8};
  const auto f1 = tabulated_family(Seed::from_u64(1), p);
  const auto f2 = tabulated_family(Seed::from_u64(2), p);
  Rng probes(Seed::from_u64(99));
  int differing = 0;
  for (int i = 0; i < 16; ++i) {
    const BitString k = probes.bits(4);
    const BitString x = probes.bits(12);
    differing += f1.eval(k, x) != f2.eval(k, x) ? 1 : 0;
  }
  EXPECT_GT(differing, 0);
}

TEST(TabulatedFamily, ExhaustiveImageIsSmall) {
  const auto f = tabulated_family(Seed::from_u64(4), {4, 6, 4});
  std::size_t evaluations = 0;
  std::set<std::uint64_t> image;
  for (std::uint64_t k = 0; k < 16; ++k) {
    for (std::uint64_t x = 0; x < 64; ++x) {
      image.insert(
          f.eval(BitString::from_uint(k, 4), BitString::from_uint(x, 6)).to_uint());
      ++evaluations;
    }
  }
  EXPECT_EQ(evaluations, 1024u);
  EXPECT_EQ(image.size(), 16u);  // all 2^4 digests are hit w.o.p.
}

TEST(TabulatedFamily, RejectsWideParams) {
  EXPECT_THROW(tabulated_family(Seed::from_u64(1), {17, 12, 8}), InvalidArgument);
  EXPECT_THROW(tabulated_family(Seed::from_u64(1), {4, 20, 8}), InvalidArgument);
}

TEST(Family, EvalChecksWidths) {
  const auto f = tabulated_family(Seed::from_u64(1), {4, 12, 8});
  EXPECT_THROW(f.eval(BitString(3), BitString(12)), InvalidArgument);
  EXPECT_THROW(f.eval(BitString(4), BitString(11)), InvalidArgument);
  EXPECT_EQ(f.eval(BitString(4), BitString(12)).size(), 8u);
}

TEST(ConstantFamily, AlwaysReturnsConstant) {
  const FamilyParams p{4, 12, 8};
  const auto f = constant_family(p, BitString::zeros(8));
  Rng rng(Seed::from_u64(5));
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(f.eval(rng.bits(4), rng.bits(12)), BitString::zeros(8));
  }
  EXPECT_THROW(constant_family(p, BitString::zeros(7)), InvalidArgument);
}

TEST(InjectiveFamily, IsInjectivePerKey) {
  const auto f = injective_family(Seed::from_u64(6), {4, 6, 8});
  for (std::uint64_t k = 0; k < 16; ++k) {
    std::set<BitString> image;
    for (std::uint64_t x = 0; x < 64; ++x) {
      image.insert(f.eval(BitString::from_uint(k, 4), BitString::from_uint(x, 6)));
    }
    EXPECT_EQ(image.size(), 64u);
  }
}

TEST(CountingFamily, CountsEvaluations) {
  auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
  const auto f = counting_family(
      constant_family({4, 12, 8}, BitString::zeros(8)), counter);
  f.eval(BitString(4), BitString(12));
  f.eval(BitString(4), BitString(12));
  EXPECT_EQ(counter->load(), 2u);
}

}  // namespace
}  // namespace roxlab
