#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace altlift;

namespace {
  Permutation P(const std::string& t, int n) { return Permutation::parse(t, n); }
}

TEST(Perm, ComposeAppliesRightFactorFirst) {
  EXPECT_EQ(compose(P("(1 2)", 3), Permutation(3)).to_string(), "(1 2)");
  EXPECT_EQ(compose(P("(1 2)", 3), P("(1 3)", 3)).to_string(), "(1 3 2)");
  EXPECT_EQ(compose(P("(1 2 3 4 5)", 5), P("(1 2 3 4 5)", 5)).to_string(), "(1 3 5 2 4)");
  EXPECT_THROW(compose(P("(1 2)", 3), P("(1 2)", 4)), SizeError);
}

TEST(Perm, TextIsCanonical) {
  EXPECT_EQ(Permutation(5).to_string(), "id");
  EXPECT_EQ(P("(3 1 2)", 4).to_string(), "(1 2 3)");
  EXPECT_EQ(P("(4 5)(2 1 3)", 5).to_string(), "(1 3 2)(4 5)");
  EXPECT_EQ(P("id", 4), Permutation(4));
  EXPECT_THROW(P("(1 2 2)", 4), ParseError);
  EXPECT_THROW(P("(1 9)", 4), ParseError);
  EXPECT_THROW(P("(1 2", 4), ParseError);
}

TEST(Perm, OrderParityCycleType) {
  EXPECT_EQ(order(Permutation(4)), 1);
  EXPECT_EQ(order(P("(1 2 3)(4 5)", 5)), 6);
  EXPECT_EQ(order(P("(1 2 3 4 5)", 5)), 5);
  EXPECT_EQ(parity(Permutation(3)), Parity::even);
  EXPECT_EQ(parity(P("(1 2)", 3)), Parity::odd);
  EXPECT_EQ(parity(P("(1 2 3)(4 5 6)", 7)), Parity::even);
  EXPECT_EQ(cycle_type(Permutation(5)).parts, (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(P("(1 2 3)(4 5 6)", 7)).parts, (std::vector<int>{3, 3, 1}));
  EXPECT_EQ(cycle_type(P("(1 2 3 4 5)", 5)).parts, (std::vector<int>{5}));
}

TEST(Perm, SplittingTypes) {
  EXPECT_TRUE(splits_in_alt({{5}}));
  EXPECT_FALSE(splits_in_alt({{3, 3, 1}}));
  EXPECT_FALSE(splits_in_alt({{5, 1, 1}}));
  EXPECT_TRUE(splits_in_alt({{3, 1}}));
  EXPECT_THROW(splits_in_alt({{2, 1}}), DomainError);
}

// The (p, p^2) and (p, p^-1) verdicts come from the brute-force search:
// a 5-cycle is A_5-conjugate to its inverse but not to its square.
TEST(Perm, FiveCycleClassesByBruteForce) {
  auto c = P("(1 2 3 4 5)", 5);
  auto sq = P("(1 3 5 2 4)", 5);
  auto inv = P("(1 5 4 3 2)", 5);
  EXPECT_FALSE(oracle::alt_conjugate(oracle::from_lib(c), oracle::from_lib(sq)));
  EXPECT_TRUE(oracle::alt_conjugate(oracle::from_lib(c), oracle::from_lib(inv)));
  EXPECT_FALSE(conjugate_in_alt(c, sq));
  EXPECT_TRUE(conjugate_in_alt(c, inv));
  EXPECT_TRUE(conjugate_in_alt(c, c));
  EXPECT_THROW(conjugate_in_alt(c, P("(1 2)", 5)), DomainError);
}

TEST(Perm, AltConjugacyMatchesBruteForceUpToSeven) {
  for (int n = 4; n <= 7; ++n) {
    auto evens = all_even_permutations(n);
    // one element per Σ_n-type plus a few conjugates of each
    std::mt19937_64 rng(n);
    std::vector<Permutation> sample;
    for (const auto& t : partitions(n)) {
      if (parity(t) == Parity::odd) {
        continue;
      }
      Permutation r = type_representative(t);
      sample.push_back(r);
      for (int k = 0; k < 3; ++k) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        sample.push_back(conjugate(r, Permutation::from_images(img)));
      }
    }
    for (const auto& p : sample) {
      for (const auto& q : sample) {
        bool lib = conjugate_in_alt(p, q);
        bool brute = oracle::alt_conjugate(oracle::from_lib(p), oracle::from_lib(q));
        ASSERT_EQ(lib, brute) << n << ": " << p.to_string() << " vs " << q.to_string();
        if (cycle_type(p) == cycle_type(q) && !splits_in_alt(cycle_type(p))) {
          EXPECT_TRUE(lib);
        }
      }
    }
  }
}

// A splitting type breaks into two A_n-orbits of equal size.
TEST(Perm, SplitClassesHaveTwoEqualHalves) {
  for (int n = 4; n <= 7; ++n) {
    auto evens = all_even_permutations(n);
    for (const auto& t : partitions(n)) {
      if (parity(t) == Parity::odd) {
        continue;
      }
      std::vector<Permutation> cls;
      for (const auto& p : evens) {
        if (cycle_type(p) == t) {
          cls.push_back(p);
        }
      }
      std::map<int, int> halves;
      for (const auto& p : cls) {
        halves[conjugate_in_alt(cls[0], p) ? 0 : 1]++;
      }
      if (splits_in_alt(t)) {
        ASSERT_EQ(halves.size(), 2u) << t.to_string();
        EXPECT_EQ(halves[0], halves[1]);
      } else {
        EXPECT_EQ(halves.size(), 1u) << t.to_string();
      }
    }
  }
}

TEST(Perm, RandomAlgebra) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto rnd = [&] {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      std::shuffle(img.begin(), img.end(), rng);
      return Permutation::from_images(img);
    };
    auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_TRUE(compose(a, a.inverse()).is_identity());
    EXPECT_EQ(parity(compose(a, b)) == Parity::even, parity(a) == parity(b));
    EXPECT_EQ(Permutation::parse(a.to_string(), n), a);
    EXPECT_EQ(compose(a, b).to_string(), oracle::to_lib(oracle::compose(oracle::from_lib(a), oracle::from_lib(b))).to_string());
  }
}
