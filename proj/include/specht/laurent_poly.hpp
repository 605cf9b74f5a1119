#pragma once

// Integer Laurent polynomials in one indeterminate q, the coefficient ring
// Z[q, q^-1] for every symbolic quantity in the library.

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace specht {

class LaurentPoly {
 public:
  using Term = std::pair<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants embed naturally
  explicit LaurentPoly(const mpz_class& c);

  /// c * q^k
  static LaurentPoly monomial(int k, const mpz_class& c = 1);
  /// Build from (exponent, coefficient) pairs; duplicates are summed, zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// Ordinary polynomial sum_i coeffs[i] q^i.
  static LaurentPoly from_coeffs(const std::vector<long>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Lowest/highest exponent with a nonzero coefficient. Undefined on zero.
  int low_degree() const { return terms_.front().first; }
  int high_degree() const { return terms_.back().first; }

  mpz_class coeff(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;

  /// Exact quotient num / den; throws std::domain_error if den does not divide num.
  static LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

  /// Evaluate at an integer (q^-1 must then be handled by the caller; requires no negative exponents).
  mpz_class evaluate_at(long q) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Human-readable form, e.g. "1 + q + 2q^2 - q^-1".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

/// q as a Laurent polynomial.
inline LaurentPoly q_var() { return LaurentPoly::monomial(1); }

}  // namespace specht
