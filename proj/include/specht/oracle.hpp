#pragma once

// Brute-force ground truth: explicit permutation modules M^mu with the Hecke
// action, the Specht quotient S^lambda = M^lambda / N, and Hom spaces by direct
// linear algebra. Everything here runs after specialization to a field.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "specht/field.hpp"
#include "specht/linalg.hpp"
#include "specht/rewrite.hpp"
#include "specht/tableaux.hpp"

namespace specht {

class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SizeGuard {
  int max_n = 8;
  std::uint64_t max_dim = 1000000;
  /// Defaults, or the SPECHT_HOM_MAX_DIM override (which then bounds dimension only).
  static SizeGuard from_env();
  void check(int n, std::uint64_t dim, const std::string& what) const;
};

/// Row (0-based) of each letter 1..n in a row-standard tableau.
using RowWord = std::vector<std::uint8_t>;

/// Reduced word i_1..i_k with T_w = T_{i_1}...T_{i_k}, for w in one-line notation
/// (w[x-1] = image of x). Found by bubble sort; its length is checked against the
/// inversion count.
std::vector<int> reduced_word(const std::vector<int>& one_line);
int inversions(const std::vector<int>& one_line);
/// D_{m,eta}: permutations w of 1..n such that t^eta w is row-standard, where t^eta
/// is the superstandard eta-tableau on letters m+1..m+|eta|.
std::vector<std::vector<int>> coset_representatives(int n, int m, const Composition& eta);

/// M^mu with basis the row-standard mu-tableaux.
template <class F>
class PermModule {
 public:
  using Elem = typename F::Elem;
  using Vec = std::map<std::uint32_t, Elem>;

  PermModule(const F& f, Composition mu, const SizeGuard& guard = SizeGuard::from_env());

  const F& field() const { return *f_; }
  const Composition& mu() const { return mu_; }
  int n() const { return mu_.n(); }
  std::size_t dim() const { return basis_.size(); }
  const RowWord& word(std::size_t k) const { return basis_[k]; }
  /// Throws std::out_of_range for a word that is not a basis element.
  std::uint32_t index(const RowWord& w) const;
  /// Basis index of t^mu.
  std::uint32_t initial() const { return 0; }

  /// v T_i
  Vec act(const Vec& v, int i) const;
  /// v T_{i_1} ... T_{i_k}
  Vec act_word(Vec v, const std::vector<int>& word) const;
  /// v C(m; eta)
  Vec apply_h(const Vec& v, int m, const Composition& eta) const;
  Vec unit(std::uint32_t k) const { return Vec{{k, f_->one()}}; }

 private:
  static std::uint64_t pack(const RowWord& w);
  const F* f_;
  Composition mu_;
  std::vector<RowWord> basis_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  Elem q_, qm1_;
};

/// S^lambda = M^lambda / N, N the right submodule generated by the m_lambda h_{d,t}.
template <class F>
class SpechtQuotient {
 public:
  using Elem = typename F::Elem;
  using Vec = typename PermModule<F>::Vec;
  using Row = std::vector<Elem>;

  SpechtQuotient(const F& f, Partition lambda, const SizeGuard& guard = SizeGuard::from_env());

  const F& field() const { return *f_; }
  const Partition& lambda() const { return lambda_; }
  const PermModule<F>& ambient() const { return ambient_; }
  std::size_t dim() const { return free_.size(); }
  std::size_t subspace_dim() const { return ambient_.dim() - free_.size(); }
  /// Ambient basis indices whose images form the quotient basis.
  const std::vector<std::uint32_t>& free_columns() const { return free_; }

  /// Quotient coordinates of an ambient vector.
  Row project(const Vec& v) const;
  /// Action of T_i on the quotient (row vector times matrix).
  const DenseMatrix<F>& generator(int i) const { return gens_.at(static_cast<std::size_t>(i - 1)); }
  /// Matrix of C(m; eta) on the quotient.
  DenseMatrix<F> h_matrix(int m, const Composition& eta) const;

  /// Theta_S(m_nu) in quotient coordinates; S must have shape lambda.
  Row theta_image(const TypedTableau& S) const;
  /// Number of summands in Theta_S(m_nu).
  static std::uint64_t fiber_size(const TypedTableau& S);
  /// sum_S c_S Theta_S(m_nu) with each c_S specialized.
  Row evaluate(const HomCombination& c) const;

 private:
  const F* f_;
  Partition lambda_;
  PermModule<F> ambient_;
  std::vector<std::uint32_t> free_;
  std::vector<std::int64_t> free_pos_;                       // ambient index -> quotient index or -1
  std::unordered_map<std::uint32_t, Vec> reduced_;           // pivot column -> rest of its row (free columns)
  std::vector<DenseMatrix<F>> gens_;
};

struct OracleHom {
  int hom_dim = 0;
  int ehom_dim = 0;
  bool operator==(const OracleHom&) const = default;
};

/// Hom and EHom from S^mu to S^lambda = sq, by direct linear algebra.
template <class F>
OracleHom hom_oracle(const SpechtQuotient<F>& sq, const Partition& mu);

/// Quotient for (lambda, field), built once per process.
template <class F>
const SpechtQuotient<F>& cached_quotient(const F& f, const Partition& lambda);

OracleHom hom_oracle(const Partition& mu, const Partition& lambda, const FieldConfig& f);
std::size_t specht_dim(const Partition& lambda, const FieldConfig& f);

}  // namespace specht
