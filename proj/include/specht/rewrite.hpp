#pragma once

// Formal linear combinations of the maps Theta_S and the rules that rewrite them.

#include <map>
#include <optional>
#include <string>

#include "specht/laurent_poly.hpp"
#include "specht/tableaux.hpp"

namespace specht {

class HomCombination {
 public:
  HomCombination() = default;
  HomCombination(Partition shape, Composition type);
  /// 1 * Theta_S
  static HomCombination single(const TypedTableau& s, LaurentPoly coeff = LaurentPoly(1));

  const Partition& shape() const { return shape_; }
  const Composition& type() const { return type_; }
  const std::map<TypedTableau, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of Theta_S (zero if absent).
  LaurentPoly coeff(const TypedTableau& s) const;

  /// Add c * Theta_S; drops the entry if the result is zero.
  void add(const TypedTableau& s, const LaurentPoly& c);
  HomCombination& operator+=(const HomCombination& o);
  HomCombination scaled(const LaurentPoly& c) const;
  bool all_semistandard() const;

  bool operator==(const HomCombination& o) const = default;
  std::string to_string() const;

 private:
  void check_key(const TypedTableau& s) const;
  Partition shape_;
  Composition type_;
  std::map<TypedTableau, LaurentPoly> terms_;
};

/// Theta_T(m_mu h_{d,t}) as a combination of maps of type nu(d,t).
HomCombination expand_h(const TypedTableau& T, int d, int t);

/// Rewrite Theta_S by moving every entry d from row r+1 up to row r.
HomCombination lemma7_down(const TypedTableau& S, int r, int d);

/// Rewrite Theta_S by moving every entry d from row r down to row r+1; needs lambda_r = lambda_{r+1}.
HomCombination lemma7_up(const TypedTableau& S, int r, int d);

/// Apply a rule termwise.
HomCombination rewrite_each(const HomCombination& c, int r, int d, bool up);

/// Rewrite until every term is semistandard. Returns nullopt if the budget of
/// rewrite steps runs out first.
std::optional<HomCombination> semistandardize(const HomCombination& c, int budget = 10000);

}  // namespace specht
