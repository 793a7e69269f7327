#include <gtest/gtest.h>

#include <random>

#include "locert/braid3.hpp"
#include "locert/errors.hpp"
#include "support.hpp"

using namespace locert;
using namespace locert::braid3;
using test_support::word;

namespace {

BraidWord delta_power(std::int64_t n) {
  // Delta^n for any integer n.
  return BraidWord::delta().power(n);
}

}  // namespace

TEST(BraidWord, ParseAndPrint) {
  EXPECT_EQ(word(" a b\tA B ").to_string(), "abAB");
  EXPECT_EQ(word("").size(), 0u);
  EXPECT_THROW(word("abc"), ParseError);
  EXPECT_THROW(BraidLetter(3, 1), std::invalid_argument);
  EXPECT_THROW(BraidLetter(1, 0), std::invalid_argument);
  EXPECT_EQ(BraidWord::delta_squared().to_string(), "abaaba");
  EXPECT_EQ(BraidWord::longitude().to_string(), "abaabaBBBBBB");
  EXPECT_EQ(BraidWord::sigma2(-3).to_string(), "BBB");
  EXPECT_EQ(word("ab").inverse().to_string(), "BA");
}

TEST(BraidWord, FreeReduceExamples) {
  EXPECT_EQ(free_reduce(word("a A")).to_string(), "");
  EXPECT_EQ(free_reduce(word("a b B A")).to_string(), "");
  EXPECT_EQ(free_reduce(word("a b a")).to_string(), "aba");
}

TEST(BraidWord, ExponentSumExamples) {
  EXPECT_EQ(exponent_sum(word("a b a a b a")), 6);
  EXPECT_EQ(exponent_sum(word("B B B")), -3);
  EXPECT_EQ(exponent_sum(word("a b A B")), 0);
}

TEST(BraidWord, ModularImageExamples) {
  EXPECT_TRUE(modular_image(BraidWord::delta_squared()).empty());
  EXPECT_TRUE(is_trivial(BraidWord::delta_squared() * word("ab").power(-3)));
  EXPECT_EQ(modular_image(word("a")).to_string(), "b^2 a");
  EXPECT_TRUE(modular_image(word("a b a B A B")).empty());
}

TEST(BraidWord, IsTrivialExamples) {
  EXPECT_TRUE(is_trivial(word("a b a B A B")));
  EXPECT_FALSE(is_trivial(BraidWord::delta_squared()));
  EXPECT_TRUE(is_trivial(word("")));
}

TEST(BraidWord, Sigma2PowerExamples) {
  EXPECT_EQ(as_sigma2_power(word("b b b")), 3);
  EXPECT_EQ(as_sigma2_power(word("a")), std::nullopt);
  EXPECT_EQ(as_sigma2_power(word("A b a")), std::nullopt);
  EXPECT_EQ(as_sigma2_power(word("a b A B A b a")), std::nullopt);
  EXPECT_EQ(as_sigma2_power(word("A B a b a")), 1);
  EXPECT_EQ(as_sigma2_power(word("A B a b a A B a b a")), 2);
}

TEST(HandleReduce, Examples) {
  EXPECT_EQ(handle_reduce(word("a b A")).to_string(), "Bab");
  EXPECT_EQ(handle_reduce(word("A b a")).to_string(), "baB");
  EXPECT_EQ(handle_reduce(word("a A")).to_string(), "");
}

TEST(HandleReduce, StepCap) {
  EXPECT_THROW(handle_reduce(word("a a b A A"), {1}), StepCapExceeded);
  EXPECT_NO_THROW(handle_reduce(word("a a b A A"), {10}));
}

TEST(DDOrdering, SignExamples) {
  EXPECT_EQ(dd_sign(word("B")), Sign3::Positive);
  EXPECT_EQ(dd_sign(word("a")), Sign3::Positive);
  EXPECT_EQ(dd_sign(word("b")), Sign3::Negative);
  EXPECT_EQ(dd_sign(word("")), Sign3::Trivial);
  EXPECT_EQ(dd_sign(word("a b a B A B")), Sign3::Trivial);
  EXPECT_EQ(dd_sign(BraidWord::delta()), Sign3::Positive);
}

TEST(DDOrdering, CompareExamples) {
  EXPECT_EQ(dd_compare(word(""), word("B")), Comparison::Less);
  EXPECT_EQ(dd_compare(word("b"), word("")), Comparison::Less);
  EXPECT_EQ(dd_compare(BraidWord::delta_squared(), BraidWord::delta_squared()), Comparison::Equal);
  EXPECT_EQ(dd_compare(word("B"), word("")), Comparison::Greater);
}

TEST(DDOrdering, ConjSignExamples) {
  EXPECT_EQ(conj_sign(word("B"), word("")), Sign3::Positive);
  EXPECT_EQ(conj_sign(word("a B A"), word("a")), Sign3::Positive);
  EXPECT_EQ(conj_sign(word("b"), word("a")), Sign3::Positive);
}

TEST(DDOrdering, DeltaFloorExamples) {
  EXPECT_EQ(delta_floor(word("B")), 0);
  EXPECT_EQ(delta_floor(BraidWord::delta_squared(2)), 2);
  EXPECT_EQ(delta_floor(BraidWord::delta_squared(-1) * word("B")), -1);
  EXPECT_EQ(delta_floor(word("")), 0);
  EXPECT_EQ(delta_floor(word("b")), -1);
}

TEST(Peripheral, CommutesExamples) {
  EXPECT_TRUE(commutes_with_sigma2(BraidWord::sigma2(5)));
  EXPECT_TRUE(commutes_with_sigma2(BraidWord::delta_squared()));
  EXPECT_FALSE(commutes_with_sigma2(word("a")));
}

TEST(Peripheral, ParseExamples) {
  EXPECT_EQ(peripheral_parse(word("b b a b a a b a")), (PeripheralElement{2, 1}));
  EXPECT_EQ(peripheral_parse(word("a")), std::nullopt);
  EXPECT_EQ(peripheral_parse(word("")), (PeripheralElement{0, 0}));
  EXPECT_EQ(peripheral_parse(BraidWord::longitude()), (PeripheralElement{-6, 1}));
}

TEST(Peripheral, RestrictedTypeExamples) {
  EXPECT_EQ(restricted_order_type(word("")), PeripheralOrderType::NegK);
  EXPECT_EQ(restricted_order_type(BraidWord::delta_squared()), PeripheralOrderType::NegK);
  EXPECT_EQ(restricted_order_type(word("a")), PeripheralOrderType::PosK);
}

// ---- oracles --------------------------------------------------------------

TEST(Oracle, SL2RepresentationRespectsBraidRelation) {
  EXPECT_TRUE(test_support::oracle_trivial("abaBAB"));
  EXPECT_FALSE(test_support::oracle_trivial("abaaba"));
  EXPECT_EQ(test_support::sl2_image("abaabaabaaba"), test_support::Mat2{});
}

TEST(Oracle, WordProblemAgreesWithSL2) {
  std::mt19937_64 rng(11);
  int trivial_seen = 0;
  for (int i = 0; i < 1500; ++i) {
    // Half the samples are products w * (shuffled relator conjugates) * w^-1 to hit trivial words.
    std::string s = test_support::random_string(rng, "aAbB", test_support::random_length(rng, 0, 24));
    if (i % 2 == 0) {
      const std::string g = test_support::random_string(rng, "aAbB", test_support::random_length(rng, 0, 8));
      s = g + "abaBAB" + word(g).inverse().to_string();
      if (i % 4 == 0) s = g + "abaaba" + word(g).inverse().to_string() + "ABAABA";
    }
    const bool expected = test_support::oracle_trivial(s);
    trivial_seen += expected;
    ASSERT_EQ(is_trivial(word(s)), expected) << s;
    ASSERT_EQ(handle_reduce(word(s)).empty(), expected) << s;
  }
  EXPECT_GT(trivial_seen, 500);
}

TEST(Oracle, OnePositiveWordsArePositive) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const std::string s = test_support::random_one_positive(rng, test_support::random_length(rng, 0, 20));
    ASSERT_EQ(dd_sign(word(s)), Sign3::Positive) << s;
    ASSERT_EQ(dd_sign(word(s).inverse()), Sign3::Negative) << s;
  }
}

TEST(Oracle, Sigma2PowersFollowTheConeDefinition) {
  for (std::int64_t k = -12; k <= 12; ++k) {
    const Sign3 expected = k < 0 ? Sign3::Positive : k > 0 ? Sign3::Negative : Sign3::Trivial;
    EXPECT_EQ(dd_sign(BraidWord::sigma2(k)), expected);
    EXPECT_EQ(as_sigma2_power(BraidWord::sigma2(k)), k);
  }
}

// ---- properties -----------------------------------------------------------

TEST(Property, Trichotomy) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const BraidWord w = random_word(rng, test_support::random_length(rng, 0, 20));
    const Sign3 s = dd_sign(w);
    ASSERT_EQ(dd_sign(w.inverse()), negate(s)) << w.to_string();
    ASSERT_EQ(s == Sign3::Trivial, is_trivial(w)) << w.to_string();
  }
}

TEST(Property, ConeClosure) {
  std::mt19937_64 rng(22);
  int pairs = 0;
  while (pairs < 300) {
    const BraidWord u = random_word(rng, test_support::random_length(rng, 1, 12));
    const BraidWord v = random_word(rng, test_support::random_length(rng, 1, 12));
    if (dd_sign(u) != Sign3::Positive || dd_sign(v) != Sign3::Positive) continue;
    ++pairs;
    ASSERT_EQ(dd_sign(u * v), Sign3::Positive) << u.to_string() << " * " << v.to_string();
  }
}

TEST(Property, LeftInvariance) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const BraidWord f = random_word(rng, test_support::random_length(rng, 0, 10));
    const BraidWord u = random_word(rng, test_support::random_length(rng, 0, 10));
    const BraidWord v = random_word(rng, test_support::random_length(rng, 0, 10));
    ASSERT_EQ(dd_compare(u, v), dd_compare(f * u, f * v));
  }
}

TEST(Property, HandleReductionSoundness) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 500; ++i) {
    const BraidWord w = random_word(rng, test_support::random_length(rng, 0, 40));
    const BraidWord r = handle_reduce(w);
    ASSERT_EQ(modular_image(r), modular_image(w));
    ASSERT_EQ(exponent_sum(r), exponent_sum(w));
    ASSERT_EQ(test_support::sl2_image(r.to_string()), test_support::sl2_image(w.to_string()));
    int pos = 0, neg = 0;
    for (const auto& l : r.letters()) {
      if (l.generator() == 1) (l.sign() > 0 ? pos : neg)++;
    }
    ASSERT_TRUE(pos == 0 || neg == 0) << r.to_string();
  }
}

TEST(Property, ConjugateBound) {
  std::mt19937_64 rng(25);
  const BraidWord upper = BraidWord::delta_squared();
  const BraidWord lower = BraidWord::delta_squared(-1);
  for (int i = 0; i < 150; ++i) {
    const BraidWord beta = random_word(rng, test_support::random_length(rng, 0, 12));
    for (std::int64_t k = -5; k <= 5; ++k) {
      const BraidWord c = beta.inverse() * BraidWord::sigma2(k) * beta;
      ASSERT_EQ(dd_compare(lower, c), Comparison::Less) << beta.to_string() << " k=" << k;
      ASSERT_EQ(dd_compare(c, upper), Comparison::Less) << beta.to_string() << " k=" << k;
    }
  }
}

TEST(Property, PropertyS) {
  std::mt19937_64 rng(26);
  int tested = 0;
  while (tested < 150) {
    const BraidWord beta = random_word(rng, test_support::random_length(rng, 1, 12));
    if (commutes_with_sigma2(beta)) continue;
    ++tested;
    for (std::int64_t k = -4; k <= 4; ++k) {
      if (k == 0) continue;
      const BraidWord r = handle_reduce(beta.inverse() * BraidWord::sigma2(k) * beta);
      bool has_pos = false, has_neg = false;
      for (const auto& l : r.letters()) {
        if (l.generator() == 1) (l.sign() > 0 ? has_pos : has_neg) = true;
      }
      ASSERT_EQ(has_pos && !has_neg, k > 0) << beta.to_string() << " k=" << k;
    }
  }
}

TEST(Property, DeltaFloorBracketsAndCofinality) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 300; ++i) {
    const BraidWord w = random_word(rng, test_support::random_length(rng, 0, 16));
    const std::int64_t m = delta_floor(w);
    ASSERT_LE(std::abs(m), static_cast<std::int64_t>(w.size()) + 1);
    ASSERT_NE(dd_compare(BraidWord::delta_squared(m), w), Comparison::Greater) << w.to_string();
    ASSERT_EQ(dd_compare(w, BraidWord::delta_squared(m + 1)), Comparison::Less) << w.to_string();
    const std::int64_t bound = static_cast<std::int64_t>(w.size()) + 1;
    ASSERT_EQ(dd_compare(BraidWord::delta_squared(-bound), w), Comparison::Less);
    ASSERT_EQ(dd_compare(w, BraidWord::delta_squared(bound)), Comparison::Less);
  }
}

TEST(Property, MalyutinSubadditivity) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 200; ++i) {
    const BraidWord a = random_word(rng, test_support::random_length(rng, 0, 10));
    const BraidWord b = random_word(rng, test_support::random_length(rng, 0, 10));
    const std::int64_t fa = delta_floor(a), fb = delta_floor(b), fab = delta_floor(a * b);
    ASSERT_GE(fab, fa + fb);
    ASSERT_LE(fab, fa + fb + 1);
  }
}

TEST(Property, DeltaPowersAreExactFloors) {
  for (std::int64_t n = -4; n <= 4; ++n) {
    EXPECT_EQ(delta_floor(delta_power(2 * n)), n);
    // Delta is positive and Delta^2 is the next even power.
    EXPECT_EQ(delta_floor(delta_power(2 * n + 1)), n);
  }
}

TEST(Property, PeripheralParseRoundTrip) {
  std::mt19937_64 rng(29);
  for (std::int64_t k = -6; k <= 6; ++k) {
    for (std::int64_t l = -3; l <= 3; ++l) {
      // Scramble with an inserted trivial word so parsing is not syntactic.
      const BraidWord g = random_word(rng, test_support::random_length(rng, 0, 6));
      const BraidWord w = g * word("abaBAB") * g.inverse() * peripheral_word(k, l);
      ASSERT_EQ(peripheral_parse(w), (PeripheralElement{k, l}));
    }
  }
  EXPECT_EQ(peripheral_parse(word("a b A")), std::nullopt);
}

TEST(Property, RestrictedTypeAgreesWithConjSign) {
  std::mt19937_64 rng(30);
  for (int i = 0; i < 40; ++i) {
    const BraidWord gamma = random_word(rng, test_support::random_length(rng, 0, 10));
    const PeripheralOrderType type = restricted_order_type(gamma);
    for (std::int64_t k = -4; k <= 4; ++k) {
      for (std::int64_t l = -4; l <= 4; ++l) {
        if (k == 0 && l == 0) continue;
        ASSERT_EQ(conj_sign(peripheral_word(k, l), gamma), peripheral_sign(type, k, l))
            << gamma.to_string() << " (" << k << "," << l << ")";
      }
    }
  }
}
