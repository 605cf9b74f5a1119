#pragma once

// The symbolic matrix whose corank is dim EHom(S^mu, S^lambda), and its rank
// over a specialization.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "specht/field.hpp"
#include "specht/laurent_poly.hpp"
#include "specht/tableaux.hpp"

namespace specht {

class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RowKey {
  int d = 0, t = 0;
  TypedTableau U;
  auto operator<=>(const RowKey& o) const {
    if (auto c = d <=> o.d; c != 0) return c;
    if (auto c = t <=> o.t; c != 0) return c;
    return U <=> o.U;
  }
  bool operator==(const RowKey& o) const = default;
};

class HomMatrix {
 public:
  HomMatrix() = default;
  HomMatrix(Partition lambda, Partition mu, std::vector<TypedTableau> columns, std::vector<RowKey> rows);

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  const std::vector<TypedTableau>& columns() const { return columns_; }
  const std::vector<RowKey>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return columns_.size(); }

  /// Entry (row, col); zero when not stored.
  LaurentPoly at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, LaurentPoly v);
  /// Nonzero entries of a column, ordered by row.
  const std::map<std::size_t, LaurentPoly>& column(std::size_t col) const { return entries_[col]; }
  std::optional<std::size_t> row_index(const RowKey& k) const;
  std::size_t nonzeros() const;

  bool operator==(const HomMatrix& o) const;

 private:
  Partition lambda_, mu_;
  std::vector<TypedTableau> columns_;
  std::vector<RowKey> rows_;
  std::map<RowKey, std::size_t> row_lookup_;
  std::vector<std::map<std::size_t, LaurentPoly>> entries_;  // per column
};

struct HomResult {
  int dim = 0;
  FieldConfig field;
  std::size_t rows = 0, cols = 0;
  /// Column tableaux, in matrix column order.
  std::vector<TypedTableau> columns;
  /// Kernel basis; each coefficient is an integral polynomial representative in q.
  std::optional<std::vector<std::vector<LaurentPoly>>> kernel;
};

/// Closed-form m_UT; zero unless T ->(d,t) U. Throws NotApplicable outside the method's domain.
LaurentPoly entry(const TypedTableau& T, const TypedTableau& U, int d, int t);

/// Symbolic matrix. Columns are filled in parallel from the arrow enumeration.
HomMatrix build_matrix(const Partition& lambda, const Partition& mu);
/// Serial reference: tests every (row, column) pair with the arrow predicate.
HomMatrix build_matrix_reference(const Partition& lambda, const Partition& mu);

/// Specialize and compute the corank (and optionally a kernel basis).
HomResult corank(const HomMatrix& m, const FieldConfig& f, bool want_kernel = false);
/// Rank by serial forward elimination, for cross-checking corank.
std::size_t rank_reference(const HomMatrix& m, const FieldConfig& f);

/// dim EHom(S^mu, S^lambda) with fast paths; throws NotApplicable when the method does not apply.
HomResult hom_dim(const Partition& lambda, const Partition& mu, const FieldConfig& f, bool want_kernel = false);

}  // namespace specht
