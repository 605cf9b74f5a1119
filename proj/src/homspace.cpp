#include "specht/homspace.hpp"

#include <exception>
#include <numeric>

#include "specht/gauss.hpp"
#include "specht/linalg.hpp"

namespace specht {

HomMatrix::HomMatrix(Partition lambda, Partition mu, std::vector<TypedTableau> columns, std::vector<RowKey> rows)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), columns_(std::move(columns)), rows_(std::move(rows)),
      entries_(columns_.size()) {
  for (std::size_t i = 0; i < rows_.size(); ++i) row_lookup_.emplace(rows_[i], i);
}

LaurentPoly HomMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = entries_.at(col);
  auto it = c.find(row);
  return it == c.end() ? LaurentPoly() : it->second;
}

void HomMatrix::set(std::size_t row, std::size_t col, LaurentPoly v) {
  if (row >= rows_.size()) throw std::out_of_range("HomMatrix::set: row");
  auto& c = entries_.at(col);
  if (v.is_zero()) c.erase(row);
  else c[row] = std::move(v);
}

std::optional<std::size_t> HomMatrix::row_index(const RowKey& k) const {
  auto it = row_lookup_.find(k);
  if (it == row_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t HomMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : entries_) n += c.size();
  return n;
}

bool HomMatrix::operator==(const HomMatrix& o) const {
  return lambda_ == o.lambda_ && mu_ == o.mu_ && columns_ == o.columns_ && rows_ == o.rows_ &&
         entries_ == o.entries_;
}

namespace {

void require_applicable(const Partition& lambda, const Partition& mu) {
  if (!algorithm_applicable(lambda, mu))
    throw NotApplicable("the pair lambda=(" + lambda.to_string() + "), mu=(" + mu.to_string() +
                        ") does not satisfy mu-bar_j >= lambda-bar_{j-1} + lambda_{j+1}");
}

long binom2(long m) { return m * (m - 1) / 2; }

// m_UT assuming T ->(d,t) U holds.
LaurentPoly entry_formula(const TypedTableau& T, const TypedTableau& U, int d) {
  const int a = T.rows(), b = T.values();
  LaurentPoly coeff(1);
  long qexp = 0;
  if (d >= a) {
    for (int j = 1; j <= a; ++j) {
      qexp += static_cast<long>(T.below(d, j)) * (U.c(j, d) - T.c(j, d));
      coeff *= gauss_binomial(U.c(j, d), T.c(j, d));
    }
    return coeff.shifted(static_cast<int>(qexp));
  }
  const int x = T.c(d + 1, d + 1) - U.c(d + 1, d + 1);
  if (x % 2) coeff = LaurentPoly(-1);
  qexp -= binom2(x + 1);
  qexp += static_cast<long>(U.c(d + 1, d + 1)) *
          (U.c(d, d) - T.c(d, d) + U.c(d + 1, d + 1) - T.c(d + 1, d + 1));
  coeff *= gauss_binomial(U.c(d, d) - T.c(d + 1, d + 1), T.c(d, d) - U.c(d + 1, d + 1));
  for (int j = 1; j <= d - 1; ++j) {
    qexp += static_cast<long>(T.below(d, j)) * (U.c(j, d) - T.c(j, d));
    coeff *= gauss_binomial(U.c(j, d), T.c(j, d));
  }
  for (int i = d + 2; i <= b; ++i) {
    qexp += static_cast<long>(T.lt(d + 1, i)) * (U.c(d + 1, i) - T.c(d + 1, i));
    coeff *= gauss_binomial(U.c(d + 1, i), T.c(d + 1, i));
  }
  return coeff.shifted(static_cast<int>(qexp));
}

std::pair<std::vector<TypedTableau>, std::vector<RowKey>> matrix_index(const Partition& lambda,
                                                                       const Partition& mu) {
  std::vector<TypedTableau> cols = semistandard_tableaux(lambda, mu);
  std::vector<RowKey> rows;
  for (int d = 1; d < mu.length(); ++d)
    for (int t = 1; t <= mu(d + 1); ++t)
      for (auto& U : semistandard_tableaux(lambda, nu_dt(mu, d, t))) rows.push_back({d, t, std::move(U)});
  return {std::move(cols), std::move(rows)};
}

}  // namespace

LaurentPoly entry(const TypedTableau& T, const TypedTableau& U, int d, int t) {
  if (!T.type().is_partition()) throw std::invalid_argument("entry: type of T must be a partition");
  require_applicable(T.shape(), Partition(T.type().parts()));
  if (!T.is_semistandard()) throw std::invalid_argument("entry: T must be semistandard");
  if (!arrow_relation(T, U, d, t)) return {};
  return entry_formula(T, U, d);
}

HomMatrix build_matrix(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw std::invalid_argument("build_matrix: partitions of different n");
  require_applicable(lambda, mu);
  auto [cols, rows] = matrix_index(lambda, mu);
  HomMatrix m(lambda, mu, cols, rows);
  const auto ncols = static_cast<long>(cols.size());
  std::vector<std::vector<std::pair<std::size_t, LaurentPoly>>> found(cols.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (long ci = 0; ci < ncols; ++ci) {
    try {
      const TypedTableau& T = cols[static_cast<std::size_t>(ci)];
      auto& out = found[static_cast<std::size_t>(ci)];
      for (int d = 1; d < mu.length(); ++d)
        for (int t = 1; t <= mu(d + 1); ++t)
          for (const auto& U : arrows_dt(T, d, t)) {
            auto r = m.row_index({d, t, U});
            if (!r) throw std::logic_error("build_matrix: arrow target " + U.to_string() + " is not semistandard");
            out.emplace_back(*r, entry_formula(T, U, d));
          }
    } catch (...) {
#pragma omp critical(specht_build_matrix_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  for (std::size_t c = 0; c < found.size(); ++c)
    for (auto& [r, v] : found[c]) m.set(r, c, std::move(v));
  return m;
}

HomMatrix build_matrix_reference(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw std::invalid_argument("build_matrix: partitions of different n");
  require_applicable(lambda, mu);
  auto [cols, rows] = matrix_index(lambda, mu);
  HomMatrix m(lambda, mu, cols, rows);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.set(r, c, entry(cols[c], rows[r].U, rows[r].d, rows[r].t));
  return m;
}

namespace {

template <class F>
DenseMatrix<F> specialize_matrix(const F& f, const HomMatrix& m) {
  DenseMatrix<F> d(f, m.num_rows(), m.num_cols());
  for (std::size_t c = 0; c < m.num_cols(); ++c)
    for (const auto& [r, v] : m.column(c)) d.at(r, c) = f.from_poly(v);
  return d;
}

std::vector<LaurentPoly> integral_vector(const CyclotomicField& f, const std::vector<CyclotomicField::Elem>& v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    mpz_class dx = f.denominator(x);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dx.get_mpz_t());
  }
  std::vector<LaurentPoly> out;
  for (const auto& x : v) out.push_back(f.representative(f.scale(x, mpq_class(l))));
  return out;
}

std::vector<LaurentPoly> integral_vector(const GaloisField& f, const std::vector<GaloisField::Elem>& v) {
  std::vector<LaurentPoly> out;
  for (auto x : v) out.push_back(f.representative(x));
  return out;
}

}  // namespace

HomResult corank(const HomMatrix& m, const FieldConfig& f, bool want_kernel) {
  HomResult res;
  res.field = f;
  res.rows = m.num_rows();
  res.cols = m.num_cols();
  res.columns = m.columns();
  with_field(f, [&](const auto& fld) {
    auto dm = specialize_matrix(fld, m);
    if (want_kernel) {
      auto ker = nullspace(fld, std::move(dm));
      res.dim = static_cast<int>(ker.size());
      std::vector<std::vector<LaurentPoly>> k;
      for (const auto& v : ker) k.push_back(integral_vector(fld, v));
      res.kernel = std::move(k);
    } else {
      res.dim = static_cast<int>(m.num_cols() - rank(fld, std::move(dm)));
    }
  });
  return res;
}

std::size_t rank_reference(const HomMatrix& m, const FieldConfig& f) {
  return with_field(f, [&](const auto& fld) { return rank_reference(fld, specialize_matrix(fld, m)); });
}

HomResult hom_dim(const Partition& lambda, const Partition& mu, const FieldConfig& f, bool want_kernel) {
  f.validate();
  if (lambda.n() != mu.n()) throw std::invalid_argument("hom_dim: partitions of different n");
  HomResult res;
  res.field = f;
  if (!dominates(lambda, mu)) {
    res.dim = 0;
    if (want_kernel) res.kernel.emplace();
    return res;
  }
  if (lambda == mu) {
    res.dim = 1;
    res.cols = 1;
    res.columns = semistandard_tableaux(lambda, mu);
    if (want_kernel) res.kernel = std::vector<std::vector<LaurentPoly>>{{LaurentPoly(1)}};
    return res;
  }
  return corank(build_matrix(lambda, mu), f, want_kernel);
}

}  // namespace specht
