#include <gtest/gtest.h>

#include <set>

#include "roxlab/errors.hpp"
#include "roxlab/rox.hpp"

namespace roxlab {
namespace {

constexpr FamilyParams kToy{4, 12, 8};  // n=4, b=4, d=8

class RoxTest : public ::testing::Test {
 protected:
  RoxTest()
      : family_(tabulated_family(Seed::from_u64(1).derive("family"), kToy)),
        inst_(family_, 16, Seed::from_u64(1).derive("oracles")) {}

  BitString key(std::uint64_t v = 5) { return BitString::from_uint(v, 4); }

  FunctionFamily family_;
  RoxInstance inst_;
};

TEST(Nu, SmallValues) {
  EXPECT_EQ(nu(1), 0u);
  EXPECT_EQ(nu(4), 2u);
  EXPECT_EQ(nu(6), 1u);
  EXPECT_EQ(nu(12), 2u);
  EXPECT_THROW(nu(0), InvalidArgument);
}

TEST(Nu, DividesExactly) {
  for (std::uint64_t i = 1; i <= 64; ++i) {
    const std::uint64_t p = std::uint64_t{1} << nu(i);
    EXPECT_EQ(i % p, 0u);
    EXPECT_NE(i % (2 * p), 0u);
  }
}

TEST(Nu, TopValueOccursOncePerDyadicRange) {
  for (std::size_t t = 0; t <= 6; ++t) {
    int hits = 0;
    for (std::uint64_t i = 1; i <= (std::uint64_t{1} << t); ++i) {
      hits += nu(i) == t ? 1 : 0;
    }
    EXPECT_EQ(hits, 1) << t;
    EXPECT_EQ(nu(std::uint64_t{1} << t), t);
  }
}

TEST_F(RoxTest, Widths) {
  EXPECT_EQ(inst_.index_bits(), 5u);    // ceil(lg 17)
  EXPECT_EQ(inst_.length_bits(), 7u);   // ceil(lg 65)
  EXPECT_EQ(inst_.mask_oracle().in_bits(), 13u);
  EXPECT_EQ(inst_.mask_oracle().out_bits(), 8u);
  EXPECT_EQ(inst_.pad_oracle().in_bits(), 16u);
  EXPECT_EQ(inst_.pad_oracle().out_bits(), 8u);
  EXPECT_EQ(inst_.iv(), BitString::zeros(8));
}

TEST_F(RoxTest, PadToyExamples) {
  const PaddedMessage p = pad_rox(inst_, BitString::parse("4:a"));
  EXPECT_EQ(p.block_count, 3u);
  EXPECT_EQ(p.pad_queries, 1u);
  EXPECT_EQ(p.joined().size(), 12u);
  EXPECT_EQ(p.prefix, BitString::parse("4:a"));
  EXPECT_EQ(block_count(inst_, 13), 6u);
}

TEST_F(RoxTest, PadInvariantsOverAllLengths) {
  Rng rng(Seed::from_u64(3));
  const std::size_t n = 4, b = 4;
  for (std::size_t len = n; len <= inst_.max_message_bits(); ++len) {
    const BitString x = rng.bits(len);
    const PaddedMessage p = pad_rox(inst_, x);
    const std::size_t ell = (len + 2 * n + b - 1) / b;
    EXPECT_EQ(p.block_count, ell);
    EXPECT_EQ(p.joined().size(), ell * b);
    EXPECT_EQ(p.joined().slice(0, len), x);
    EXPECT_EQ(p.pad_queries, (ell * b - len + 2 * n - 1) / (2 * n));
    EXPECT_GE(p.pad_queries, 1u);
    EXPECT_LE(p.pad_queries, (b + 2 * n - 1 + 2 * n - 1) / (2 * n));
    for (const auto& blk : p.blocks) EXPECT_EQ(blk.size(), b);
  }
}

TEST_F(RoxTest, PadRejectsShortAndLongMessages) {
  try {
    pad_rox(inst_, BitString(3));
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("x̄ undefined"), std::string::npos);
  }
  EXPECT_NO_THROW(pad_rox(inst_, BitString(inst_.max_message_bits())));
  try {
    pad_rox(inst_, BitString(inst_.max_message_bits() + 1));
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("exceeds max block count"),
              std::string::npos);
  }
}

TEST_F(RoxTest, EmptyChainIsIv) {
  EXPECT_EQ(rox_chain(inst_, key(), BitString(4), {}), inst_.iv());
  EXPECT_EQ(inst_.oracle_queries(), 0u);
}

TEST_F(RoxTest, OneBlockChainUnrolls) {
  const BitString xbar = BitString::parse("4:9");
  const BitString x1 = BitString::parse("4:3");
  const std::vector<BitString> blocks{x1};
  const BitString got = rox_chain(inst_, key(), xbar, blocks);
  const BitString mask =
      inst_.mask_oracle().query(concat(concat(xbar, key()), BitString(5)));
  EXPECT_EQ(got, family_.eval(key(), concat(x1, inst_.iv() ^ mask)));
}

TEST_F(RoxTest, ChainRejectsBadBlockWidth) {
  const std::vector<BitString> blocks{BitString(3)};
  EXPECT_THROW(rox_chain(inst_, key(), BitString(4), blocks), InvalidArgument);
}

TEST_F(RoxTest, EvalDeterministic) {
  const BitString x = BitString::parse("13:caf0");
  EXPECT_EQ(rox_eval(inst_, key(), x), rox_eval(inst_, key(), x));
  RoxInstance other = inst_.fresh(Seed::from_u64(1).derive("oracles"));
  EXPECT_EQ(rox_eval(other, key(), x), rox_eval(inst_, key(), x));
}

TEST_F(RoxTest, ColdEvalQueryCountIsEllPlusQ2) {
  Rng rng(Seed::from_u64(4));
  for (std::size_t len = 4; len <= inst_.max_message_bits(); ++len) {
    RoxInstance cold = inst_.fresh(Seed::from_u64(len));
    const BitString x = rng.bits(len);
    const PaddedMessage p = pad_rox(cold, x);
    RoxInstance cold2 = inst_.fresh(Seed::from_u64(len));
    rox_eval(cold2, key(), x);
    EXPECT_EQ(cold2.oracle_queries(), p.block_count + p.pad_queries) << len;
  }
}

std::set<BitString> mask_points(const RoxInstance& inst) {
  std::set<BitString> out;
  for (const auto& e : inst.mask_oracle().transcript()) out.insert(e.input);
  return out;
}

TEST_F(RoxTest, DifferentPrefixesUseDifferentMaskPoints) {
  RoxInstance a = inst_.fresh(Seed::from_u64(9));
  RoxInstance b = inst_.fresh(Seed::from_u64(9));
  rox_eval(a, key(), BitString::parse("8:a0"));
  rox_eval(b, key(), BitString::parse("8:50"));
  for (const auto& p : mask_points(a)) EXPECT_EQ(mask_points(b).count(p), 0u);
}

TEST_F(RoxTest, DifferentKeysUseDifferentMaskPoints) {
  RoxInstance a = inst_.fresh(Seed::from_u64(9));
  RoxInstance b = inst_.fresh(Seed::from_u64(9));
  const BitString x = BitString::parse("20:abcde");
  rox_eval(a, key(1), x);
  rox_eval(b, key(2), x);
  for (const auto& p : mask_points(a)) EXPECT_EQ(mask_points(b).count(p), 0u);
}

TEST_F(RoxTest, TraceConsistency) {
  const BitString x = BitString::parse("21:abcde8");
  const auto trace = rox_trace(inst_, key(), x);
  ASSERT_EQ(trace.size(), block_count(inst_, x.size()));
  EXPECT_EQ(trace.back().chain_out, rox_eval(inst_, key(), x));
  EXPECT_EQ(trace.front().chain_in, inst_.iv());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& r = trace[i];
    EXPECT_EQ(r.round, i + 1);
    EXPECT_EQ(r.compression_input, concat(r.block, r.chain_in ^ r.mask));
    EXPECT_EQ(family_.eval(key(), r.compression_input), r.chain_out);
    if (i > 0) EXPECT_EQ(r.chain_in, trace[i - 1].chain_out);
  }
  // nu(1) = nu(3): rounds 1 and 3 read the same mask cell.
  EXPECT_EQ(trace[0].mask, trace[2].mask);
}

TEST_F(RoxTest, InstanceConstraints) {
  EXPECT_THROW(RoxInstance(tabulated_family(Seed::from_u64(1), {4, 13, 8}), 16,
                           Seed::from_u64(1)),
               InvalidArgument);  // d < 2b
  EXPECT_THROW(RoxInstance(family_, 0, Seed::from_u64(1)), InvalidArgument);
  EXPECT_THROW(RoxInstance(family_, 16, Seed::from_u64(1), BitString(7)),
               InvalidArgument);
  EXPECT_THROW(RoxInstance(family_, 2, Seed::from_u64(1)), InvalidArgument);
}

TEST_F(RoxTest, MdOneBlock) {
  // |x| = 1: x || 1 || 0 || be(1, 2) fills one 4-bit block.
  const BitString x = BitString::parse("1:8");
  const BitString block = BitString::from_binary("1101");
  EXPECT_EQ(md_strengthened_eval(family_, key(), inst_.iv(), x, 2),
            family_.eval(key(), concat(block, inst_.iv())));
  EXPECT_EQ(md_strengthened_eval(family_, key(), inst_.iv(), x, 2),
            md_strengthened_eval(family_, key(), inst_.iv(), x, 2));
  EXPECT_THROW(md_strengthened_eval(family_, key(), inst_.iv(), BitString(4), 2),
               InvalidArgument);
}

TEST_F(RoxTest, MdDiffersFromRox) {
  const BitString x = BitString::parse("16:beef");
  EXPECT_NE(md_strengthened_eval(family_, key(), inst_.iv(), x, 7),
            rox_eval(inst_, key(), x));
}

TEST_F(RoxTest, RoxFamilySlice) {
  auto shared = std::make_shared<RoxInstance>(inst_.fresh(Seed::from_u64(2)));
  const FunctionFamily f = rox_family(shared, 12);
  EXPECT_EQ(f.params(), (FamilyParams{4, 12, 8}));
  const BitString x = BitString::parse("12:123");
  RoxInstance check = inst_.fresh(Seed::from_u64(2));
  EXPECT_EQ(f.eval(key(), x), rox_eval(check, key(), x));
  EXPECT_THROW(rox_family(shared, 3), InvalidArgument);
}

}  // namespace
}  // namespace roxlab
