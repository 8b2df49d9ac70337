#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tbtrellis/error_trellis.hpp"
#include "tbtrellis/scalar_parity.hpp"

namespace {

using namespace tbt;

PolyMatrix h1() { return PolyMatrix::from_strings({{"11", "01", "11"}, {"01", "1", "1"}}); }
const oracle::Coeffs& g1_coeffs() {
  static const auto c = oracle::coeffs({{"1", "101", "111"}});
  return c;
}

BitVector flat(const oracle::Word& w) { return flatten(oracle::to_seq(w)); }

TEST(HScalarTerminated, SingleSection) {
  const ScalarParity p = hscalar_terminated(h1(), 1);
  EXPECT_EQ(p.matrix, BitMatrix::from_rows({"101", "011", "111", "100"}));
  EXPECT_EQ(p.kind, ParityKind::terminated);
}

TEST(HScalarTerminated, FlushedCodewordsAreInTheNullSpace) {
  // Zero-tail termination: append M = 2 zero inputs, then the 7 output
  // symbols satisfy the terminated (7+1)r x 7n check matrix.
  const ScalarParity p = hscalar_terminated(h1(), 7);
  EXPECT_EQ(p.matrix.rows(), 16U);
  EXPECT_EQ(p.matrix.cols(), 21U);
  for (std::uint64_t v = 0; v < 32; ++v) {
    oracle::Word u = oracle::info_word(v, 5, 1);
    u.push_back({0});
    u.push_back({0});
    // With two trailing zeros the circular encoding equals the linear one.
    EXPECT_TRUE(scalar_syndrome(p, flat(oracle::circular_encode(g1_coeffs(), u))).is_zero()) << v;
  }
}

TEST(HScalarTailbiting, ShapeRankAndBlockRow) {
  const ScalarParity p = hscalar_tailbiting(h1(), 5);
  EXPECT_EQ(p.matrix.rows(), 10U);
  EXPECT_EQ(p.matrix.cols(), 15U);
  EXPECT_EQ(p.matrix.rank(), 10U);
  const BitMatrix h0 = h1().coefficient(0), h1c = h1().coefficient(1), zero(2, 3);
  EXPECT_EQ(p.matrix.block(0, 0, 2, 3), h0);
  EXPECT_EQ(p.matrix.block(0, 3, 2, 3), zero);
  EXPECT_EQ(p.matrix.block(0, 12, 2, 3), h1c);
  EXPECT_EQ(p.matrix.block(2, 0, 2, 3), h1c);
  EXPECT_EQ(p.matrix.block(2, 3, 2, 3), h0);
}

TEST(HScalarTailbiting, MembershipOfAllCodewords) {
  const ScalarParity p = hscalar_tailbiting(h1(), 5);
  std::set<oracle::Word> code;
  for (const auto& c : oracle::all_codewords(g1_coeffs(), 5)) {
    EXPECT_TRUE(is_tailbiting_codeword(p, flat(c.y)));
    code.insert(c.y);
  }
  EXPECT_EQ(code.size(), 32U);
  std::mt19937_64 rng(13);
  std::size_t rejected = 0;
  while (rejected < 1000) {
    const oracle::Word w = oracle::info_word(rng() & 0x7FFF, 5, 3);
    if (code.count(w)) continue;
    ASSERT_FALSE(is_tailbiting_codeword(p, flat(w)));
    ++rejected;
  }
}

TEST(HScalarTailbiting, Examples) {
  const ScalarParity p = hscalar_tailbiting(h1(), 5);
  EXPECT_TRUE(is_tailbiting_codeword(p, parse_sequence("111 110 010 011 000", 3)));
  EXPECT_FALSE(is_tailbiting_codeword(p, parse_sequence("111 110 110 111 000", 3)));
  EXPECT_TRUE(is_tailbiting_codeword(p, zero_sequence(5, 3)));
  EXPECT_THROW(is_tailbiting_codeword(p, zero_sequence(4, 3)), Error);
  EXPECT_THROW(is_tailbiting_codeword(hscalar_terminated(h1(), 5), zero_sequence(5, 3)), Error);
}

TEST(HScalarTailbiting, AgreesWithSyndromeSequence) {
  const ScalarParity p = hscalar_tailbiting(h1(), 5);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Sequence z = oracle::to_seq(oracle::info_word(rng() & 0x7FFF, 5, 3));
    const bool zero_syn = hamming_weight(tailbiting_syndromes(h1(), z).symbols) == 0;
    ASSERT_EQ(is_tailbiting_codeword(p, z), zero_syn);
  }
}

TEST(HScalarTailbiting, CyclicShiftInvariance) {
  const ScalarParity p = hscalar_tailbiting(h1(), 5);
  for (const auto& c : oracle::all_codewords(g1_coeffs(), 5)) {
    oracle::Word shifted = c.y;
    std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
    EXPECT_TRUE(is_tailbiting_codeword(p, flat(shifted)));
  }
}

TEST(HScalarTailbiting, CoincidingBlocksAreSummed) {
  // N = M = 1: the H_0 and H_1 blocks land in the same place.
  const ScalarParity p = hscalar_tailbiting(h1(), 1);
  EXPECT_EQ(p.matrix, h1().coefficient(0) + h1().coefficient(1));
  EXPECT_EQ(block_layout(p), "H0+H1\n");

  const PolyMatrix h2 = PolyMatrix::from_strings({{"101", "011", "1"}, {"1", "111", "01"}});
  const ScalarParity q = hscalar_tailbiting(h2, 2);
  EXPECT_EQ(q.matrix.block(0, 0, 2, 3), h2.coefficient(0) + h2.coefficient(2));
  EXPECT_EQ(q.matrix.block(0, 3, 2, 3), h2.coefficient(1));
}

TEST(HScalarTailbiting, RejectsTooFewSections) {
  const PolyMatrix h2 = PolyMatrix::from_strings({{"101", "011", "1"}, {"1", "111", "01"}});
  EXPECT_THROW(hscalar_tailbiting(h2, 1), Error);
  EXPECT_THROW(hscalar_tailbiting(h1(), 0), Error);
  EXPECT_THROW(hscalar_terminated(h1(), 0), Error);
}

TEST(BlockLayout, Tailbiting) {
  EXPECT_EQ(block_layout(hscalar_tailbiting(h1(), 3)),
            "H0 .  H1\n"
            "H1 H0 .\n"
            ".  H1 H0\n");
  EXPECT_EQ(block_layout(hscalar_terminated(h1(), 2)),
            "H0 .\n"
            "H1 H0\n"
            ".  H1\n");
}

}  // namespace
