#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace altlift;

namespace {
  GroupElement E(const std::string& sigma, std::int64_t x, const GroupSpec& s) {
    return {Permutation::parse(sigma, s.n), mod(x, s.m)};
  }

  const std::vector<GroupSpec> kSmall = {{4, 1, 0}, {4, 2, 0}, {4, 2, 1}, {4, 3, 0}, {4, 6, 1},
                                         {5, 1, 0}, {5, 2, 0}, {5, 2, 1}, {5, 3, 0}, {5, 4, 1}};
}

TEST(EGroup, SpecValidation) {
  EXPECT_THROW((GroupSpec{5, 3, 1}.validate()), DomainError);
  EXPECT_THROW((GroupSpec{3, 1, 0}.validate()), DomainError);
  EXPECT_THROW((GroupSpec{5, 0, 0}.validate()), DomainError);
  EXPECT_EQ((GroupSpec{7, 10, 0}.order()), 25200);
  EXPECT_EQ((GroupSpec{5, 2, 1}).display_name(), "Σ_5");
  EXPECT_THROW(parse_element("(1 2)|0", {5, 2, 0}), DomainError);
  EXPECT_EQ(parse_element("(1 2 3 4 5)|27", {7, 30, 1}).x, 27);
  EXPECT_EQ(parse_element("(1 2 3)|-1", {7, 30, 1}).x, 29);
}

TEST(EGroup, MultiplicationExamples) {
  GroupSpec s{5, 2, 1};
  auto a = E("(1 2 3)", 1, s);
  EXPECT_EQ(mul(s, a, identity_element(s)), a);
  // (1 2 3) · (1 2)(1 2 3)(1 2) = (1 2 3)(1 3 2)
  GroupElement sq = mul(s, a, a);
  EXPECT_TRUE(sq.sigma.is_identity());
  EXPECT_EQ(sq.x, 0);
  oracle::Group G(s);
  EXPECT_EQ(G.index(sq), G.mul(G.index(a), G.index(a)));
  EXPECT_EQ(mul(s, E("(3 4 5)", 0, s), E("(3 4 5)", 1, s)).x, 1);
}

TEST(EGroup, MultiplicationAgreesWithOracle) {
  for (const auto& s : kSmall) {
    oracle::Group G(s);
    auto all = all_elements(s);
    ASSERT_EQ(static_cast<int>(all.size()), G.size());
    std::mt19937_64 rng(s.n * 100 + s.m);
    for (int t = 0; t < 2000; ++t) {
      const auto& a = all[rng() % all.size()];
      const auto& b = all[rng() % all.size()];
      ASSERT_EQ(G.index(mul(s, a, b)), G.mul(G.index(a), G.index(b))) << s.to_string();
      ASSERT_EQ(G.index(inverse(s, a)), G.inv(G.index(a)));
    }
  }
}

// For (n,2,1) the map (σ, x) -> σ (1 2)^x is onto Σ_n and multiplicative.
TEST(EGroup, SymmetricModelIsSigmaN) {
  GroupSpec s{5, 2, 1};
  std::set<Permutation> images;
  auto all = all_elements(s);
  for (const auto& a : all) {
    images.insert(sym_image(s, a));
    for (const auto& b : all) {
      ASSERT_EQ(sym_image(s, mul(s, a, b)), compose(sym_image(s, a), sym_image(s, b)));
    }
  }
  EXPECT_EQ(images.size(), 120u);
}

TEST(EGroup, Orders) {
  EXPECT_EQ(element_order({7, 10, 0}, E("(1 2 3 4 5)", 1, {7, 10, 0})), 10);
  EXPECT_EQ(element_order({7, 30, 1}, E("(1 2 3 4 5)", 27, {7, 30, 1})), 20);
  EXPECT_EQ(element_order({7, 30, 1}, identity_element({7, 30, 1})), 1);
  for (const auto& s : kSmall) {
    oracle::Group G(s);
    for (const auto& a : all_elements(s)) {
      ASSERT_EQ(element_order(s, a), G.order(G.index(a)));
      ASSERT_EQ(s.order() % element_order(s, a), 0);
    }
    for (std::int64_t x = 0; x < s.m; ++x) {
      EXPECT_EQ(element_order(s, {Permutation(s.n), x}), additive_order(x, s.m));
    }
  }
}

// The pair ((1 2 3 4 5),1), ((1 5 4 3 2),1) is conjugate in both families:
// 5-cycles are A_5-conjugate to their inverses.
TEST(EGroup, ConjugacyExamplesByBruteForce) {
  for (int i : {0, 1}) {
    GroupSpec s{5, 2, i};
    oracle::Group G(s);
    auto a = E("(1 2 3 4 5)", 1, s), b = E("(1 5 4 3 2)", 1, s);
    EXPECT_TRUE(G.conjugate(G.index(a), G.index(b)));
    EXPECT_TRUE(conjugate_in_e(s, a, b));
    EXPECT_TRUE(conjugate_in_e(s, a, a));
    auto c = E("(1 3 5 2 4)", 1, s);
    EXPECT_EQ(conjugate_in_e(s, a, c), G.conjugate(G.index(a), G.index(c))) << i;
  }
}

TEST(EGroup, ConjugacyAndCentralizersExhaustive) {
  for (const auto& s : kSmall) {
    oracle::Group G(s);
    auto all = all_elements(s);
    const auto& cls = G.classes();
    std::map<int, std::int64_t> class_size;
    for (int k = 0; k < G.size(); ++k) {
      class_size[cls[k]]++;
    }
    for (const auto& a : all) {
      int ia = G.index(a);
      ASSERT_EQ(centralizer_order(s, a), G.centralizer(ia)) << s.to_string() << " " << a.to_string();
      ASSERT_EQ(centralizer_order(s, a) * class_size[cls[ia]], s.order());
    }
    std::mt19937_64 rng(11);
    for (int t = 0; t < 3000; ++t) {
      const auto& a = all[rng() % all.size()];
      const auto& b = all[rng() % all.size()];
      ASSERT_EQ(conjugate_in_e(s, a, b), cls[G.index(a)] == cls[G.index(b)]) << s.to_string();
    }
  }
}

TEST(EGroup, CentralizersFromTheWorkedExample) {
  GroupSpec s{7, 10, 0};
  EXPECT_EQ(centralizer_order(s, E("(1 2 3 4 5)", 1, s)), 50);
  EXPECT_EQ(centralizer_order(s, E("id", 5, s)), 25200);
  EXPECT_EQ(centralizer_order(s, identity_element(s)), s.order());
}

TEST(EGroup, Generation) {
  GroupSpec d{7, 10, 0};
  EXPECT_TRUE(generates(d, {E("(1 2 3 4 5)", 1, d), E("(1 2 3 4 5 6 7)", 1, d)}));
  GroupSpec s{5, 2, 0};
  EXPECT_FALSE(generates(s, {E("(1 2 3)", 0, s)}));
  EXPECT_EQ(subgroup_closure(s, {E("(1 2 3)", 0, s)}).size(), 3u);
  EXPECT_TRUE(generates(s, all_elements(s)));
  EXPECT_THROW(generates(d, {E("(1 2 3 4 5)", 1, d), E("(1 2 3 4 5 6 7)", 1, d)}, 100), IndeterminateError);
}

TEST(EGroup, GeneratingPairsGenerate) {
  std::vector<GroupSpec> specs = kSmall;
  for (auto g : {10, 11}) {
    for (const auto& s : catalog_specs(g)) {
      specs.push_back(s);
    }
  }
  for (GroupSpec s : {GroupSpec{7, 10, 0}, GroupSpec{7, 30, 1}, GroupSpec{7, 30, 0}, GroupSpec{6, 2, 1},
                      GroupSpec{5, 12, 1}, GroupSpec{8, 2, 1}, GroupSpec{6, 4, 0}}) {
    specs.push_back(s);
  }
  for (const auto& s : specs) {
    auto [a, b] = generating_pair(s);
    if (s.order() <= 2000) {
      oracle::Group G(s);
      ASSERT_EQ(G.closure_size({G.index(a), G.index(b)}), G.size()) << s.to_string();
    } else {
      ASSERT_TRUE(generates(s, {a, b})) << s.to_string();
    }
  }
  auto [a, b] = generating_pair({7, 10, 0});
  std::set<long long> orders{order(a.sigma), order(b.sigma)};
  EXPECT_EQ(orders, (std::set<long long>{5, 7}));
  EXPECT_EQ(a.x, 1);
  EXPECT_EQ(b.x, 1);
  auto [c, e] = generating_pair({5, 4, 1});
  EXPECT_EQ(c, E("(3 4 5)", 1, {5, 4, 1}));
  EXPECT_EQ(e.x, 0);
}

TEST(EGroup, AutomorphismsAreHomomorphisms) {
  GroupSpec d{5, 10, 0};
  AutomorphismSpec chi{Permutation::parse("(4 5)", 5), 3};
  EXPECT_EQ(apply_automorphism(d, chi, E("(1 2 3)", 1, d)), E("(1 2 3)", 3, d));
  EXPECT_EQ(apply_automorphism(d, AutomorphismSpec::identity(d), E("(1 2 3)", 1, d)), E("(1 2 3)", 1, d));
  EXPECT_THROW(apply_automorphism(d, AutomorphismSpec{Permutation(5), 2}, E("(1 2 3)", 1, d)), DomainError);

  GroupSpec sd{5, 2, 1};
  AutomorphismSpec odd{Permutation::parse("(1 3)", 5), 1};
  auto b = beta(sd, odd, 1);
  EXPECT_EQ(b, compose(compose(odd.tau, transposition(5, 1, 2)), compose(odd.tau.inverse(), transposition(5, 1, 2))));

  for (GroupSpec s : {GroupSpec{5, 2, 1}, GroupSpec{5, 3, 0}, GroupSpec{4, 6, 1}, GroupSpec{5, 4, 1}}) {
    oracle::Group G(s);
    auto all = all_elements(s);
    for (auto [p, ell] : automorphism_classes(s)) {
      for (const char* tau : {"id", "(1 2)", "(1 3)", "(2 4)(1 3 5)", "(1 2 3)", "(3 4)"}) {
        if (s.n < 5 && std::string(tau).find('5') != std::string::npos) {
          continue;
        }
        AutomorphismSpec chi{Permutation::parse(tau, s.n), ell};
        std::set<int> image;
        for (const auto& a : all) {
          image.insert(G.index(apply_automorphism(s, chi, a)));
        }
        ASSERT_EQ(static_cast<int>(image.size()), G.size());
        std::mt19937_64 rng(3);
        for (int t = 0; t < 400; ++t) {
          const auto& a = all[rng() % all.size()];
          const auto& c = all[rng() % all.size()];
          auto lhs = apply_automorphism(s, chi, mul(s, a, c));
          auto rhs = mul(s, apply_automorphism(s, chi, a), apply_automorphism(s, chi, c));
          ASSERT_EQ(lhs, rhs) << s.to_string() << " " << chi.to_string();
          ASSERT_EQ(element_order(s, apply_automorphism(s, chi, a)), element_order(s, a));
          ASSERT_EQ(conjugate_in_e(s, apply_automorphism(s, chi, a), apply_automorphism(s, chi, c)),
                    conjugate_in_e(s, a, c));
        }
      }
    }
  }
}

TEST(EGroup, CommutatorRealization) {
  for (const char* t : {"id", "(1 2 3)", "(1 2 3 4 5)", "(1 2)(3 4)"}) {
    auto target = Permutation::parse(t, 5);
    auto [r1, r2] = commutator_realize(5, target);
    EXPECT_EQ(compose(compose(r2, r1), compose(r2.inverse(), r1.inverse())), target) << t;
  }
  EXPECT_THROW(commutator_realize(5, Permutation::parse("(1 2)", 5)), DomainError);
  for (int n : {5, 6, 7, 8}) {
    std::mt19937_64 rng(n);
    for (int k = 0; k < 20; ++k) {
      auto target = random_even_permutation(n, rng);
      auto [r1, r2] = commutator_realize(n, target);
      ASSERT_EQ(compose(compose(r2, r1), compose(r2.inverse(), r1.inverse())), target);
    }
  }
}
