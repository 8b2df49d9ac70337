#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tbtrellis/state_machines.hpp"

namespace {

using namespace tbt;

PolyMatrix g1() { return PolyMatrix::from_strings({{"1", "101", "111"}}); }
PolyMatrix h1() { return PolyMatrix::from_strings({{"11", "01", "11"}, {"01", "1", "1"}}); }

SfState sf(const char* bits) { return SyndromeFormer(h1()).state_from_bits(BitVector::from_string(bits)); }
EncState enc(const char* bits) { return FeedforwardEncoder(g1()).state_from_bits(BitVector::from_string(bits)); }
BitVector bv(const char* s) { return BitVector::from_string(s); }

TEST(SfStep, FirstStepOfReceivedWord) {
  const auto s = sf_step(h1(), sf("00"), bv("111"));
  EXPECT_EQ(s.next, sf("11"));
  EXPECT_EQ(s.syndrome, bv("00"));
}

TEST(SfStep, ThirdStepOfReceivedWord) {
  const auto s = sf_step(h1(), sf("01"), bv("110"));
  EXPECT_EQ(s.next, sf("01"));
  EXPECT_EQ(s.syndrome, bv("10"));
}

TEST(SfStep, ZeroIsFixed) {
  const auto s = sf_step(h1(), sf("00"), bv("000"));
  EXPECT_TRUE(s.next.bits().is_zero());
  EXPECT_TRUE(s.syndrome.is_zero());
}

TEST(SfStep, LengthMismatch) {
  EXPECT_THROW(sf_step(h1(), sf("00"), bv("11")), Error);
  EXPECT_THROW(sf_step(h1(), SfState(2, 2), bv("111")), Error);
}

TEST(SfRun, ReceivedWordFromZero) {
  const auto z = parse_sequence("111 110 110 111 000", 3);
  const auto run = sf_run(h1(), sf("00"), z);
  EXPECT_EQ(run.final_state, sf("00"));
  EXPECT_EQ(render_sequence(run.syndromes), "00 00 10 01 11");
}

TEST(SfRun, ReversedWordUnderReciprocal) {
  const auto zt = parse_sequence("000 111 110 110 111", 3);
  const auto run = sf_run(h1().reciprocal(), sf("00"), zt);
  EXPECT_EQ(run.final_state, sf("00"));
  EXPECT_EQ(render_sequence(run.syndromes), "00 11 01 10 00");
}

TEST(SfRun, EmptySequence) {
  const auto run = sf_run(h1(), sf("10"), Sequence{});
  EXPECT_EQ(run.final_state, sf("10"));
  EXPECT_TRUE(run.syndromes.empty());
}

TEST(ExtendedState, Windows) {
  auto xi = extended_state(h1(), parse_sequence("000 111", 3));
  EXPECT_EQ(xi.zeta, bv("00"));
  EXPECT_EQ(xi.sigma, sf("11"));

  xi = extended_state(h1(), parse_sequence("000 000", 3));
  EXPECT_TRUE(xi.zeta.is_zero());
  EXPECT_TRUE(xi.sigma.bits().is_zero());

  xi = extended_state(h1(), parse_sequence("111 110", 3));
  EXPECT_EQ(xi.zeta, bv("00"));
  EXPECT_EQ(xi.sigma, sf("01"));

  EXPECT_THROW(extended_state(h1(), parse_sequence("111", 3)), Error);
}

// Two routes to xi_k: the block matrix H* and the step recursion. With
// M >= 2 this exercises the full upper-triangular layout.
TEST(ExtendedState, MatchesRecursionForLargerMemory) {
  const PolyMatrix h = PolyMatrix::from_strings({{"101", "011", "1"}, {"1", "111", "01"}});
  const SyndromeFormer former(h);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Sequence window;
    for (std::size_t i = 0; i <= former.memory(); ++i) window.push_back(BitVector::from_uint(rng() % 8, 3));
    const SfState start = former.state_from_id(rng() % (1U << former.state_bits()));
    const auto run = former.run(start, window);
    const auto xi = former.extended_state(window);
    EXPECT_EQ(xi.zeta, run.syndromes.back());
    EXPECT_EQ(xi.sigma, run.final_state);
    // The H** route agrees on the state part.
    EXPECT_EQ(former.dual_state(std::span<const BitVector>(window).last(former.memory())), run.final_state);
  }
}

TEST(DualState, FromOutputWindow) {
  EXPECT_EQ(dual_state(h1(), parse_sequence("001", 3)), sf("10"));
  EXPECT_TRUE(dual_state(h1(), parse_sequence("000", 3)).bits().is_zero());
  EXPECT_EQ(dual_state(h1().reciprocal(), parse_sequence("110", 3)), sf("11"));
  EXPECT_THROW(dual_state(h1(), parse_sequence("000 000", 3)), Error);
}

TEST(DualStateOf, MatchesClosedForm) {
  // beta* = (u_{k-1} + u_k, u_k) with beta = (u_{k-1}, u_k)
  for (const auto& beta : FeedforwardEncoder(g1()).all_states()) {
    const bool a = beta.bits()[0], b = beta.bits()[1];
    BitVector expected{a != b, b};
    EXPECT_EQ(dual_state_of(g1(), h1(), beta).bits(), expected) << beta.to_string();
  }
  EXPECT_EQ(dual_state_of(g1(), h1(), enc("10")), sf("10"));
  EXPECT_EQ(dual_state_of(g1(), h1(), enc("00")), sf("00"));
  EXPECT_EQ(dual_state_of(g1(), h1(), enc("11")), sf("01"));
}

TEST(DualStateOf, FrozenInputsDoNotMatter) {
  for (const auto& beta : FeedforwardEncoder(g1()).all_states())
    EXPECT_EQ(dual_state_of(g1(), h1(), beta, false), dual_state_of(g1(), h1(), beta, true));
}

TEST(EncoderStep, Taps) {
  auto s = encoder_step(g1(), enc("01"), bv("1"));
  EXPECT_EQ(s.output, bv("110"));
  EXPECT_EQ(s.next, enc("11"));

  s = encoder_step(g1(), enc("00"), bv("0"));
  EXPECT_EQ(s.output, bv("000"));
  EXPECT_EQ(s.next, enc("00"));

  s = encoder_step(g1(), enc("11"), bv("0"));
  EXPECT_EQ(s.output, bv("010"));
  EXPECT_EQ(s.next, enc("10"));

  EXPECT_THROW(encoder_step(g1(), enc("11"), bv("01")), Error);
}

TEST(EncoderStep, AgreesWithCircularConvolutionOracle) {
  const auto g = oracle::coeffs({{"1", "101", "111"}});
  const FeedforwardEncoder e(g1());
  for (std::uint64_t v = 0; v < 32; ++v) {
    const oracle::Word u = oracle::info_word(v, 5, 1);
    const Sequence info = oracle::to_seq(u);
    EncState state = e.tailbiting_state(info);
    const EncState start = state;
    Sequence y;
    for (const auto& sym : info) {
      auto s = e.step(state, sym);
      state = s.next;
      y.push_back(s.output);
    }
    EXPECT_EQ(state, start);
    EXPECT_EQ(oracle::from_seq(y), oracle::circular_encode(g, u));
    EXPECT_EQ(encode_tailbiting(g1(), info), y);
  }
}

TEST(BackwardState, ReversesRegisters) {
  EXPECT_EQ(backward_state(g1(), enc("10")), enc("01"));
  EXPECT_EQ(backward_state(g1(), enc("00")), enc("00"));
  EXPECT_EQ(backward_state(g1(), enc("11")), enc("11"));
  for (const auto& beta : FeedforwardEncoder(g1()).all_states())
    EXPECT_EQ(backward_state(g1(), backward_state(g1(), beta)), beta);
}

TEST(SyndromeFormer, ConstraintLengthAndReachability) {
  const SyndromeFormer former(h1());
  EXPECT_EQ(former.constraint_length(), 2U);
  EXPECT_EQ(former.reachable_states().size(), 4U);

  // Second row has degree 0: its memory bit is structurally absent.
  const SyndromeFormer partial(PolyMatrix::from_strings({{"11", "1", "0"}, {"1", "0", "1"}}));
  EXPECT_EQ(partial.state_bits(), 2U);
  EXPECT_EQ(partial.constraint_length(), 1U);
  const auto states = partial.reachable_states();
  ASSERT_EQ(states.size(), 2U);
  for (const auto& s : states) EXPECT_FALSE(s.bits()[1]);
}

TEST(Superposition, RandomTuples) {
  const SyndromeFormer former(h1());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const SfState a = former.state_from_id(rng() % 4), b = former.state_from_id(rng() % 4);
    const BitVector e1 = BitVector::from_uint(rng() % 8, 3), e2 = BitVector::from_uint(rng() % 8, 3);
    const auto s1 = former.step(a, e1), s2 = former.step(b, e2), s = former.step(a + b, e1 + e2);
    ASSERT_EQ(s.next, s1.next + s2.next);
    ASSERT_EQ(s.syndrome, s1.syndrome + s2.syndrome);
  }
}

TEST(LastMDetermination, StatesAndSyndromesForget) {
  const PolyMatrix h = PolyMatrix::from_strings({{"101", "011", "1"}, {"1", "111", "01"}});
  const SyndromeFormer former(h);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    SfState a = former.state_from_id(rng() % 16), b = former.state_from_id(rng() % 16);
    for (std::size_t k = 1; k <= 6; ++k) {
      const BitVector e = BitVector::from_uint(rng() % 8, 3);
      const auto sa = former.step(a, e), sb = former.step(b, e);
      if (k >= former.memory() + 1) {
        ASSERT_EQ(sa.syndrome, sb.syndrome);
      }
      a = sa.next;
      b = sb.next;
      if (k >= former.memory()) {
        ASSERT_EQ(a, b);
      }
    }
  }
}

TEST(ZeroSyndromeTraversal, AllCodewordsOfLengthFive) {
  const SyndromeFormer former(h1());
  for (const auto& cw : all_tailbiting_codewords(g1(), 5)) {
    const SfState dual = dual_state_of(g1(), h1(), cw.anchor);
    const auto run = former.run(dual, cw.codeword);
    EXPECT_EQ(run.final_state, dual);
    EXPECT_EQ(hamming_weight(run.syndromes), 0U);
  }
}

}  // namespace
