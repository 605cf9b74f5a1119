#include <gtest/gtest.h>

#include <set>

#include "specht/gauss.hpp"
#include "specht/homspace.hpp"
#include "specht/linalg.hpp"

using namespace specht;

namespace {

const Partition lam52({5, 2});
const Partition mu322({3, 2, 2});

std::size_t col_of(const HomMatrix& m, const std::string& s) {
  for (std::size_t c = 0; c < m.num_cols(); ++c)
    if (m.columns()[c].to_string() == s) return c;
  throw std::out_of_range(s);
}

std::size_t row_of(const HomMatrix& m, int d, int t, const std::string& u) {
  for (std::size_t r = 0; r < m.num_rows(); ++r)
    if (m.rows()[r].d == d && m.rows()[r].t == t && m.rows()[r].U.to_string() == u) return r;
  throw std::out_of_range(u);
}

// Rank of the specialized kernel vectors together with extra vectors, by the library's own field type.
template <class F>
std::size_t span_rank(const F& f, const std::vector<std::vector<LaurentPoly>>& vs) {
  DenseMatrix<F> m(f, vs.size(), vs.empty() ? 0 : vs[0].size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j) m.at(i, j) = f.from_poly(vs[i][j]);
  return rank(f, m);
}

}  // namespace

TEST(Entry, WorkedExampleValues) {
  const Composition mu(mu322.parts());
  const auto T1 = TypedTableau::parse("11123/23", mu);
  const auto U1 = TypedTableau::parse("11122/22", Composition({3, 4, 0}));
  EXPECT_EQ(entry(T1, U1, 2, 2), q_var() * quantum_int(2) * quantum_int(2));
  const auto T2 = TypedTableau::parse("11122/33", mu);
  const auto U2 = TypedTableau::parse("11111/33", Composition({5, 0, 2}));
  EXPECT_EQ(entry(T2, U2, 1, 2), gauss_binomial(5, 2));
  // Not an arrow: zero.
  const auto U3 = TypedTableau::parse("11123/22", Composition({3, 3, 1}));
  EXPECT_FALSE(arrow_relation(T2, U3, 2, 1));
  EXPECT_TRUE(entry(T2, U3, 2, 1).is_zero());
  EXPECT_THROW(entry(TypedTableau::parse("12233/11", mu), U3, 2, 1), std::invalid_argument);
}

TEST(BuildMatrix, WorkedExampleShape) {
  const HomMatrix m = build_matrix(lam52, mu322);
  ASSERT_EQ(m.num_cols(), 3u);
  EXPECT_EQ(m.columns()[0].to_string(), "11122/33");
  EXPECT_EQ(m.columns()[1].to_string(), "11123/23");
  EXPECT_EQ(m.columns()[2].to_string(), "11133/22");
  std::set<std::pair<int, int>> dts;
  for (const auto& r : m.rows()) dts.insert({r.d, r.t});
  EXPECT_EQ(dts, (std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  EXPECT_EQ(m.at(row_of(m, 2, 2, "11122/22"), col_of(m, "11123/23")), q_var() * quantum_int(2) * quantum_int(2));
  EXPECT_EQ(m.at(row_of(m, 1, 2, "11111/33"), col_of(m, "11122/33")), gauss_binomial(5, 2));
  EXPECT_EQ(m.at(row_of(m, 1, 2, "11111/33"), col_of(m, "11123/23")), -(quantum_int(2) * quantum_int(4)));
  EXPECT_EQ(m.at(row_of(m, 1, 1, "11113/23"), col_of(m, "11133/22")), -q_var());
}

TEST(BuildMatrix, SingleRowTrivial) {
  const HomMatrix m = build_matrix(Partition({4}), Partition({4}));
  EXPECT_EQ(m.num_cols(), 1u);
  EXPECT_EQ(m.num_rows(), 0u);
  EXPECT_EQ(corank(m, {3, 0}).dim, 1);
}

TEST(BuildMatrix, ParallelMatchesSerialReference) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions(n))
      for (const auto& mu : partitions(n)) {
        if (!dominates(lambda, mu) || !algorithm_applicable(lambda, mu)) continue;
        EXPECT_EQ(build_matrix(lambda, mu), build_matrix_reference(lambda, mu))
            << lambda.to_string() << " / " << mu.to_string();
      }
}

TEST(Corank, MatchesReferenceRank) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : partitions(n))
      for (const auto& mu : partitions(n)) {
        if (lambda == mu || !dominates(lambda, mu) || !algorithm_applicable(lambda, mu)) continue;
        const HomMatrix m = build_matrix(lambda, mu);
        for (FieldConfig f : {FieldConfig{2, 0}, FieldConfig{3, 0}, FieldConfig{3, 2}, FieldConfig{2, 2}}) {
          const auto res = corank(m, f, true);
          EXPECT_EQ(static_cast<std::size_t>(res.dim) + rank_reference(m, f), m.num_cols());
          EXPECT_EQ(res.kernel->size(), static_cast<std::size_t>(res.dim));
        }
      }
}

TEST(HomDim, WorkedExampleDimensions) {
  for (int e : {2, 3, 4, 6, 7}) EXPECT_EQ(hom_dim(lam52, mu322, {e, 0}).dim, 0) << e;
  const auto r = hom_dim(lam52, mu322, {5, 0}, true);
  EXPECT_EQ(r.dim, 1);
  ASSERT_EQ(r.kernel->size(), 1u);
  // Proportional to (q^3[2], -q^2, [2]) at a primitive fifth root of unity.
  with_field({5, 0}, [&](const auto& f) {
    const LaurentPoly q = q_var();
    const std::vector<LaurentPoly> want{q.shifted(2) * quantum_int(2), -q.shifted(1), quantum_int(2)};
    EXPECT_EQ(span_rank(f, {(*r.kernel)[0], want}), 1u);
  });
}

TEST(HomDim, CharacteristicTwoExample) {
  const Partition lambda({10, 5}), mu({8, 3, 1, 1, 1, 1});
  const auto r = hom_dim(lambda, mu, {2, 2}, true);
  ASSERT_EQ(r.dim, 2);
  ASSERT_EQ(r.columns.front().to_string(), "1111111122/23456");
  std::vector<LaurentPoly> indicator(r.columns.size(), LaurentPoly()), ones(r.columns.size(), LaurentPoly(1));
  indicator[0] = LaurentPoly(1);
  with_field({2, 2}, [&](const auto& f) {
    auto vs = *r.kernel;
    EXPECT_EQ(span_rank(f, vs), 2u);
    vs.push_back(indicator);
    vs.push_back(ones);
    EXPECT_EQ(span_rank(f, vs), 2u);
  });
}

TEST(HomDim, FastPathsAndDomain) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n)) EXPECT_EQ(hom_dim(lambda, lambda, {3, 0}).dim, 1);
  EXPECT_EQ(hom_dim(Partition({3, 3}), Partition({4, 2}), {2, 0}).dim, 0);
  EXPECT_THROW(hom_dim(Partition({5, 4}), Partition({3, 3, 2, 1}), {3, 0}), NotApplicable);
  EXPECT_THROW(hom_dim(Partition({5, 4}), Partition({3, 3}), {3, 0}), std::invalid_argument);
  EXPECT_THROW(hom_dim(lam52, mu322, {1, 0}), std::invalid_argument);
}
