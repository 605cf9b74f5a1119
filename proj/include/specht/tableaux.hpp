#pragma once

// Partitions, compositions and tableaux of a given shape and type.
//
// A row-standard tableau of shape lambda and type nu is stored as its count
// matrix: entry (j, i) is the number of entries equal to i in row j. All
// public accessors use 1-based rows and values, matching the usual notation.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace specht {

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// Parse "5,0,2"; throws std::invalid_argument.
  static Composition parse(std::string_view s);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  /// 1-based part, 0 beyond the end.
  int operator()(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  /// Sum of the first k parts.
  int partial(int k) const;
  bool is_partition() const;

  std::string to_string() const;
  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Composition& o) const { return parts_ <=> o.parts_; }

 protected:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition : public Composition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(std::string_view s);
  /// Conjugate partition.
  Partition conjugate() const;
  /// lambda_i - lambda_{i+1} < e for all i.
  bool is_restricted(int e) const;
};

/// Partial-sum dominance; throws std::invalid_argument on different totals.
bool dominates(const Composition& a, const Composition& b);

/// Partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions(int n);
/// Compositions of n with positive parts.
std::vector<Composition> compositions(int n);

/// Bijective filling, rows listed top to bottom.
struct FilledTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;
  bool operator==(const FilledTableau&) const = default;
  std::string to_string() const;
};

std::vector<FilledTableau> standard_tableaux(const Partition& shape);
/// Hook length formula, used as an independent count.
std::uint64_t hook_length_count(const Partition& shape);

class TypedTableau {
 public:
  TypedTableau() = default;
  /// Zero count matrix; fill with set().
  TypedTableau(Partition shape, Composition type);
  /// From rows of entries (each row any order); shape is taken from the row lengths.
  static TypedTableau from_rows(const std::vector<std::vector<int>>& rows, const Composition& type);
  /// Parse "11122/33" (single-digit entries) with the given type.
  static TypedTableau parse(std::string_view s, const Composition& type);

  const Partition& shape() const { return shape_; }
  const Composition& type() const { return type_; }
  int rows() const { return a_; }
  int values() const { return b_; }

  /// Number of entries equal to value i in row j (1-based); 0 out of range.
  int c(int j, int i) const {
    if (j < 1 || j > a_ || i < 1 || i > b_) return 0;
    return counts_[static_cast<std::size_t>((j - 1) * b_ + (i - 1))];
  }
  void set(int j, int i, int v) { counts_[static_cast<std::size_t>((j - 1) * b_ + (i - 1))] = v; }
  void add(int j, int i, int dv) { counts_[static_cast<std::size_t>((j - 1) * b_ + (i - 1))] += dv; }

  /// Sum of counts over values X and rows Y.
  int stat(const std::set<int>& values, const std::set<int>& rows) const;
  /// Entries < i in row j.
  int lt(int j, int i) const;
  /// Entries > i in row j.
  int gt(int j, int i) const;
  /// Entries equal to i in rows > j.
  int below(int i, int j) const;

  /// Row and column sums match shape and type.
  bool is_valid() const;
  bool is_semistandard() const;

  const std::vector<int>& counts() const { return counts_; }
  /// Rows as sorted entry lists.
  std::vector<std::vector<int>> row_entries() const;
  std::string to_string() const;

  bool operator==(const TypedTableau& o) const { return counts_ == o.counts_ && shape_ == o.shape_ && type_ == o.type_; }
  /// Reading-word order: for a fixed shape, the row-by-row reading words compare
  /// lexicographically, i.e. the flattened count matrices compare in reverse.
  auto operator<=>(const TypedTableau& o) const {
    if (auto c = o.counts_ <=> counts_; c != 0) return c;
    if (auto c = shape_ <=> o.shape_; c != 0) return c;
    return type_ <=> o.type_;
  }

 private:
  Partition shape_;
  Composition type_;
  int a_ = 0, b_ = 0;
  std::vector<int> counts_;
};

struct TypedTableauHash {
  std::size_t operator()(const TypedTableau& t) const;
};

/// All row-standard tableaux of the shape and type, in reading-word order.
std::vector<TypedTableau> row_standard_tableaux(const Partition& shape, const Composition& type);
/// The semistandard subset, same order.
std::vector<TypedTableau> semistandard_tableaux(const Partition& shape, const Composition& type);

/// nu(d,t): move t from part d+1 to part d. Requires 1 <= d < length, 1 <= t <= mu_{d+1}.
Composition nu_dt(const Composition& mu, int d, int t);

/// mu-bar_j >= lambda-bar_{j-1} + lambda_{j+1} for 1 <= j < length(lambda).
bool algorithm_applicable(const Partition& lambda, const Partition& mu);

/// Arrow relation T ->(d,t) U, checked directly from its defining conditions.
bool arrow_relation(const TypedTableau& T, const TypedTableau& U, int d, int t);

/// All U with T ->(d,t) U, constructed directly (sorted).
std::vector<TypedTableau> arrows_dt(const TypedTableau& T, int d, int t);

}  // namespace specht
