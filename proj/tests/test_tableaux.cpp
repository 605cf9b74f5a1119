#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "specht/tableaux.hpp"

using namespace specht;

namespace {

// All fillings of a shape by a multiset word, via permutations of the word.
template <class Pred>
std::size_t count_fillings(const Partition& shape, std::vector<int> word, Pred keep) {
  std::sort(word.begin(), word.end());
  std::size_t count = 0;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : shape.parts()) {
      rows.emplace_back(word.begin() + static_cast<long>(pos), word.begin() + static_cast<long>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    if (keep(rows)) ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

bool rows_weak(const std::vector<std::vector<int>>& rows) {
  for (const auto& r : rows)
    if (!std::is_sorted(r.begin(), r.end())) return false;
  return true;
}

bool columns_strict(const std::vector<std::vector<int>>& rows) {
  for (std::size_t j = 1; j < rows.size(); ++j)
    for (std::size_t c = 0; c < rows[j].size(); ++c)
      if (rows[j][c] <= rows[j - 1][c]) return false;
  return true;
}

std::vector<int> type_word(const Composition& nu) {
  std::vector<int> w;
  for (int i = 1; i <= nu.length(); ++i) w.insert(w.end(), static_cast<std::size_t>(nu(i)), i);
  return w;
}

}  // namespace

TEST(Partitions, ParseAndBasics) {
  const Partition p = Partition::parse("5,2");
  EXPECT_EQ(p.n(), 7);
  EXPECT_EQ(p(1), 5);
  EXPECT_EQ(p(3), 0);
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,,1"), std::invalid_argument);
  EXPECT_EQ(Partition({4, 2, 1}).conjugate(), Partition({3, 2, 1, 1}));
  EXPECT_TRUE(Partition({3, 2, 1}).is_restricted(2));
  EXPECT_FALSE(Partition({3, 1}).is_restricted(2));
  EXPECT_EQ(Composition::parse("5,0,2").parts(), (std::vector<int>{5, 0, 2}));
}

TEST(Partitions, EnumerationCounts) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions(n).size(), p[static_cast<std::size_t>(n)]) << n;
  EXPECT_EQ(partitions(5).front(), Partition({5}));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(compositions(n).size(), std::size_t{1} << (n - 1));
}

TEST(Dominance, Examples) {
  for (const auto& mu : partitions(6)) EXPECT_TRUE(dominates(Partition({6}), mu));
  EXPECT_FALSE(dominates(Partition({3, 3}), Partition({4, 2})));
  EXPECT_TRUE(dominates(Partition({5, 2}), Partition({3, 2, 2})));
  EXPECT_THROW(dominates(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST(StandardTableaux, CountsMatchHookFormulaAndBruteForce) {
  EXPECT_EQ(standard_tableaux(Partition({4})).size(), 1u);
  EXPECT_EQ(standard_tableaux(Partition({2, 1})).size(), 2u);
  EXPECT_EQ(standard_tableaux(Partition({3, 2})).size(), 5u);
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n)) {
      std::vector<int> w(static_cast<std::size_t>(n));
      std::iota(w.begin(), w.end(), 1);
      const auto brute =
          count_fillings(lambda, w, [](const auto& rows) { return rows_weak(rows) && columns_strict(rows); });
      EXPECT_EQ(standard_tableaux(lambda).size(), brute) << lambda.to_string();
      EXPECT_EQ(hook_length_count(lambda), brute) << lambda.to_string();
    }
}

TEST(TypedTableaux, ParseAndStatistics) {
  const Composition mu({3, 2, 2});
  const TypedTableau T = TypedTableau::parse("11133/22", mu);
  EXPECT_EQ(T.shape(), Partition({5, 2}));
  EXPECT_EQ(T.c(1, 3), 2);
  EXPECT_EQ(T.c(2, 2), 2);
  EXPECT_EQ(T.lt(1, 3), 3);
  EXPECT_EQ(T.stat({}, {1, 2}), 0);
  EXPECT_EQ(T.stat({1, 2, 3}, {}), 0);
  EXPECT_EQ(T.stat({1, 2, 3}, {1, 2}), 7);
  EXPECT_TRUE(T.is_semistandard());
  EXPECT_EQ(T.to_string(), "11133/22");
  EXPECT_THROW(TypedTableau::parse("1113/22", mu), std::invalid_argument);
}

TEST(TypedTableaux, SemistandardExamples) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n)) {
      const auto s = semistandard_tableaux(lambda, lambda);
      ASSERT_EQ(s.size(), 1u) << lambda.to_string();
      for (int j = 1; j <= lambda.length(); ++j) EXPECT_EQ(s[0].c(j, j), lambda(j));
    }
  const auto ex = semistandard_tableaux(Partition({5, 2}), Partition({3, 2, 2}));
  ASSERT_EQ(ex.size(), 3u);
  EXPECT_EQ(ex[0].to_string(), "11122/33");
  EXPECT_EQ(ex[1].to_string(), "11123/23");
  EXPECT_EQ(ex[2].to_string(), "11133/22");
  EXPECT_TRUE(semistandard_tableaux(Partition({3, 3}), Partition({4, 2})).empty());
}

TEST(TypedTableaux, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n))
      for (const auto& nu : compositions(n)) {
        const auto word = type_word(nu);
        const auto rs = row_standard_tableaux(lambda, nu);
        EXPECT_EQ(rs.size(), count_fillings(lambda, word, rows_weak)) << lambda.to_string() << " / " << nu.to_string();
        EXPECT_TRUE(std::is_sorted(rs.begin(), rs.end()));
        const auto ss = semistandard_tableaux(lambda, nu);
        EXPECT_EQ(ss.size(), count_fillings(lambda, word, [](const auto& r) { return rows_weak(r) && columns_strict(r); }));
        if (!ss.empty() && nu.is_partition()) {
          EXPECT_TRUE(dominates(lambda, nu));
        }
      }
}

TEST(Types, NuDt) {
  const Composition mu({3, 2, 2});
  EXPECT_EQ(nu_dt(mu, 2, 1), Composition({3, 3, 1}));
  EXPECT_EQ(nu_dt(mu, 1, 2), Composition({5, 0, 2}));
  EXPECT_EQ(nu_dt(mu, 2, 2)(3), 0);
  EXPECT_THROW(nu_dt(mu, 3, 1), std::out_of_range);
}

TEST(Applicability, Examples) {
  EXPECT_TRUE(algorithm_applicable(Partition({5, 2}), Partition({3, 2, 2})));
  EXPECT_FALSE(algorithm_applicable(Partition({5, 4}), Partition({3, 3, 2, 1})));
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : partitions(n))
      for (const auto& mu : partitions(n))
        if (lambda.length() <= 2 && mu(1) >= lambda(2)) {
          EXPECT_TRUE(algorithm_applicable(lambda, mu));
        }
}

TEST(Arrows, WorkedExample) {
  const TypedTableau T = TypedTableau::parse("11123/23", Composition({3, 2, 2}));
  const auto us = arrows_dt(T, 2, 1);
  std::set<std::string> got;
  for (const auto& u : us) got.insert(u.to_string());
  EXPECT_EQ(got, (std::set<std::string>{"11122/23", "11123/22"}));
}

TEST(Arrows, ConstructionMatchesPredicateAndIsSemistandard) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : partitions(n))
      for (const auto& mu : partitions(n)) {
        if (!algorithm_applicable(lambda, mu)) continue;
        for (const auto& T : semistandard_tableaux(lambda, mu))
          for (int d = 1; d < mu.length(); ++d)
            for (int t = 1; t <= mu(d + 1); ++t) {
              std::vector<TypedTableau> filtered;
              for (const auto& U : row_standard_tableaux(lambda, nu_dt(mu, d, t)))
                if (arrow_relation(T, U, d, t)) filtered.push_back(U);
              const auto built = arrows_dt(T, d, t);
              EXPECT_EQ(built, filtered) << T.to_string() << " d=" << d << " t=" << t;
              for (const auto& U : built) EXPECT_TRUE(U.is_semistandard()) << U.to_string();
            }
      }
}
