#include "dispobs/decision.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dispobs;

TEST(Decision, OneSegment) {
  ObservabilityVerdict a = decide_one_segment(schrodinger_symbol(), Slope(Rational(1, 2)));
  EXPECT_EQ(a.qualitative, Answer::Yes);
  EXPECT_EQ(a.quantitative, Answer::Yes);
  EXPECT_EQ(a.reason, Reason::EmptyPi);
  ObservabilityVerdict b = decide_one_segment(schrodinger_symbol(), Slope(3));
  EXPECT_EQ(b.qualitative, Answer::No);
  EXPECT_EQ(b.quantitative, Answer::No);
  EXPECT_EQ(b.pair_witness, (ModePair{0, 3}));
  EXPECT_EQ(decide_one_segment(kdv_symbol(), Slope(5)).quantitative, Answer::Yes);
  ObservabilityVerdict d = decide_one_segment(PolynomialSymbol({1, 2}), Slope(2));
  EXPECT_EQ(d.reason, Reason::GammaDegenerate);
  EXPECT_EQ(d.qualitative, Answer::Undecided);
  ObservabilityVerdict lin = decide_one_segment(PolynomialSymbol({0, 2}), Slope(0));
  EXPECT_EQ(lin.quantitative, Answer::Yes);
  EXPECT_FALSE(lin.min_time->any_positive);
  EXPECT_TRUE(verdict_consistent(b));
}

TEST(Decision, TwoSegments) {
  ObservabilityVerdict s = decide_two_segments(schrodinger_symbol(), Slope(0), Slope(1));
  EXPECT_EQ(s.qualitative, Answer::Yes);
  EXPECT_EQ(s.quantitative, Answer::No);
  EXPECT_EQ(s.reason, Reason::InfiniteG);
  ASSERT_TRUE(s.path_witness);
  EXPECT_EQ(s.exit_code(), 10);

  ObservabilityVerdict k = decide_two_segments(kdv_symbol(), Slope(7), Slope(49));
  EXPECT_EQ(k.quantitative, Answer::Yes);
  EXPECT_EQ(k.exit_code(), 0);

  ObservabilityVerdict h = decide_two_segments(higher_schrodinger_symbol(2), Slope(1), Slope(2));
  EXPECT_EQ(h.quantitative, Answer::Yes);

  ObservabilityVerdict c = decide_two_segments(kdv_symbol(), Slope(7), Slope(13));
  EXPECT_EQ(c.reason, Reason::TwoColoredCycle);
  EXPECT_EQ(c.exit_code(), 20);
  EXPECT_TRUE(verdict_consistent(c));

  EXPECT_THROW(decide_two_segments(kdv_symbol(), Slope(3), Slope(3)), InvalidArgument);
  EXPECT_THROW(decide_two_segments(PolynomialSymbol({0, 1}), Slope(3), Slope(2)), InvalidArgument);
}

TEST(Decision, AddingASegmentNeverHurts) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 3);
  const PolynomialSymbol p = kdv_symbol();
  for (int i = 0; i < 60; ++i) {
    Slope v1(Rational(num(rng), den(rng))), v2(Rational(num(rng), den(rng)));
    if (v1 == v2) continue;
    ObservabilityVerdict one = decide_one_segment(p, v1);
    ObservabilityVerdict two = decide_two_segments(p, v1, v2);
    EXPECT_FALSE(two.quantitative == Answer::Yes && two.qualitative != Answer::Yes);
    EXPECT_EQ(two.qualitative, two.quantitative);
    if (one.quantitative == Answer::Yes) {
      EXPECT_EQ(two.quantitative, Answer::Yes);
      EXPECT_LE(two.components->g_value, 3u);
    }
  }
}

TEST(Decision, WitnessTamperingIsDetected) {
  ObservabilityVerdict c = decide_two_segments(kdv_symbol(), Slope(7), Slope(13));
  c.cycle_witness->vertices[0] += 1;
  EXPECT_FALSE(verdict_consistent(c));
  ObservabilityVerdict s = decide_two_segments(schrodinger_symbol(), Slope(0), Slope(1));
  s.quantitative = Answer::Yes;
  s.qualitative = Answer::No;
  EXPECT_FALSE(verdict_consistent(s));
}
