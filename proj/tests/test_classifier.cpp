#include <gtest/gtest.h>

#include "specht/classifier.hpp"
#include "specht/homspace.hpp"

using namespace specht;

TEST(Classifier, OneRowExamples) {
  for (int n = 1; n <= 8; ++n)
    for (int e = 2; e <= 5; ++e) EXPECT_EQ(classify(Partition({n}), Partition({n}), e), 1);
  // mu_1 = -1 mod e and the remaining parts equal to e-1.
  EXPECT_EQ(classify(Partition({9}), Partition({5, 2, 2}), 3), 1);
  EXPECT_EQ(classify(Partition({6}), Partition({3, 3}), 4), 1);
  EXPECT_EQ(hom_dim(Partition({6}), Partition({3, 3}), {4, 0}).dim, 1);
  EXPECT_EQ(classify(Partition({7}), Partition({4, 3}), 4), 0);
  EXPECT_EQ(classify(Partition({9}), Partition({5, 2, 1, 1}), 3), 0);
}

TEST(Classifier, TwoPartExample) {
  const auto c = classify_detailed(Partition({4, 1}), Partition({3, 2}), 3);
  EXPECT_EQ(c.branch, Branch::TwoPart);
  EXPECT_EQ(c.dim, 1);
  EXPECT_EQ(c.dim, hom_dim(Partition({4, 1}), Partition({3, 2}), {3, 0}).dim);
}

TEST(Classifier, LastBranchIsZero) {
  const auto c = classify_detailed(Partition({5, 3}), Partition({3, 3, 1, 1}), 3);
  EXPECT_EQ(c.branch, Branch::Last);
  EXPECT_EQ(c.dim, 0);
}

TEST(Classifier, NotDominated) {
  const auto c = classify_detailed(Partition({3, 3}), Partition({4, 2}), 2);
  EXPECT_EQ(c.branch, Branch::NotDominated);
  EXPECT_EQ(c.dim, 0);
}

TEST(GoodShape, Examples) {
  EXPECT_FALSE(good_shape(Partition({4, 4, 4}), 3).is_good);
  const auto g = good_shape(Partition({4, 4, 4, 4}), 3);
  ASSERT_TRUE(g.is_good);
  EXPECT_EQ(g.n_e_minus_1, 0);
  EXPECT_EQ(g.mu_star, Partition({6, 2}));
  EXPECT_EQ(g.alpha, 5);
  EXPECT_EQ(g.beta, 5);
  const auto h = good_shape(Partition({4, 4, 2, 2, 1}), 3);
  ASSERT_TRUE(h.is_good);
  EXPECT_EQ(h.n_e_minus_1, 2);
  EXPECT_EQ(h.alpha, 5);
  EXPECT_EQ(h.beta, 6);
  // mu_1 + 2 not divisible by e.
  EXPECT_FALSE(good_shape(Partition({5, 4, 4, 4}), 3).is_good);
}

TEST(Classifier, DomainErrors) {
  EXPECT_THROW(classify(Partition({3, 2, 1}), Partition({2, 2, 2}), 3), std::invalid_argument);
  EXPECT_THROW(classify(Partition({3, 3}), Partition({2, 2, 2}), 3), std::invalid_argument);
  EXPECT_THROW(classify(Partition({3, 3}), Partition({3, 2}), 3), std::invalid_argument);
  EXPECT_THROW(classify(Partition({3, 3}), Partition({3, 3}), 1), std::invalid_argument);
  EXPECT_FALSE(classifier_applies(Partition({3, 3}), Partition({2, 2, 2})));
  EXPECT_TRUE(classifier_applies(Partition({3, 3}), Partition({3, 2, 1})));
}

TEST(Classifier, DispatchIsTotalAndBounded) {
  for (int n = 1; n <= 14; ++n) {
    const auto parts = partitions(n);
    for (const auto& lambda : parts) {
      if (lambda.length() > 2) continue;
      for (const auto& mu : parts) {
        if (!classifier_applies(lambda, mu)) continue;
        for (int e = 2; e <= 7; ++e) {
          const auto c = classify_detailed(lambda, mu, e);
          EXPECT_TRUE(c.dim == 0 || c.dim == 1);
          EXPECT_EQ(c.dim, classify(Partition(lambda.parts()), Partition(mu.parts()), e));
        }
      }
    }
  }
}

// The full n <= 12 sweep is an acceptance criterion; this is the quick regression slice.
TEST(Classifier, AgreesWithAlgorithmSmallN) {
  for (int n = 1; n <= 9; ++n) {
    const auto parts = partitions(n);
    for (const auto& lambda : parts) {
      if (lambda.length() > 2) continue;
      for (const auto& mu : parts) {
        if (!classifier_applies(lambda, mu)) continue;
        for (int e = 2; e <= 7; ++e)
          EXPECT_EQ(classify(lambda, mu, e), hom_dim(lambda, mu, {e, 0}).dim)
              << lambda.to_string() << " / " << mu.to_string() << " e=" << e;
      }
    }
  }
}
