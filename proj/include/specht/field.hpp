#pragma once

// Specialization targets: Q(omega_e) = Q[X]/Phi_e and GF(p^d) containing a
// primitive e-th root of unity (or GF(p) with q = 1 when e = p).

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "specht/laurent_poly.hpp"

namespace specht {

struct FieldConfig {
  int e = 2;
  int p = 0;

  /// Throws std::invalid_argument unless the pair names a supported field.
  void validate() const;
  std::string to_string() const;
  bool operator==(const FieldConfig&) const = default;
  auto operator<=>(const FieldConfig&) const = default;
};

bool is_prime(long n);

/// Rational coefficient vectors reduced modulo Phi_e.
class CyclotomicField {
 public:
  using Elem = std::vector<mpq_class>;

  explicit CyclotomicField(int e);

  int e() const { return e_; }
  int degree() const { return deg_; }
  FieldConfig config() const { return {e_, 0}; }

  Elem zero() const { return Elem(static_cast<std::size_t>(deg_)); }
  Elem one() const { return from_int(1); }
  Elem from_int(long c) const;
  /// q^k for any integer k.
  const Elem& q_pow(long k) const { return qpow_[static_cast<std::size_t>(k % e_ + (k % e_ < 0 ? e_ : 0))]; }
  Elem from_poly(const LaurentPoly& x) const;

  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  /// acc += a*b
  void add_mul(Elem& acc, const Elem& a, const Elem& b) const;
  /// acc -= a*b
  void sub_mul(Elem& acc, const Elem& a, const Elem& b) const;

  /// Integer polynomial representative; requires integral coefficients.
  LaurentPoly representative(const Elem& a) const;
  /// Positive common denominator of the coefficients.
  mpz_class denominator(const Elem& a) const;
  Elem scale(const Elem& a, const mpq_class& c) const;
  std::string to_string(const Elem& a) const;

 private:
  void mul_into(std::vector<mpq_class>& prod, const Elem& a, const Elem& b) const;
  void reduce_add(Elem& acc, std::vector<mpq_class>& prod, bool subtract) const;

  int e_;
  int deg_;
  std::vector<mpq_class> phi_;          // monic Phi_e, low degree first
  std::vector<Elem> high_;              // X^{deg+j} mod Phi_e for 0 <= j < deg-1
  std::vector<Elem> qpow_;              // X^k mod Phi_e for 0 <= k < e
};

/// GF(p^d), elements packed as base-p digit strings of a polynomial in eta.
class GaloisField {
 public:
  using Elem = std::uint32_t;
  static constexpr long kMaxOrder = 1L << 20;

  GaloisField(int e, int p);

  int e() const { return e_; }
  int p() const { return p_; }
  int degree() const { return d_; }
  long order() const { return size_; }
  FieldConfig config() const { return {e_, p_}; }
  /// Coefficients of the defining modulus, low degree first (monic, length d+1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long c) const;
  Elem q_pow(long k) const;
  Elem from_poly(const LaurentPoly& x) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  void add_mul(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }
  void sub_mul(Elem& acc, Elem a, Elem b) const { acc = sub(acc, mul(a, b)); }

  LaurentPoly representative(Elem a) const;
  std::string to_string(Elem a) const;

 private:
  std::vector<int> digits(Elem a) const;
  Elem pack(const std::vector<int>& digs) const;
  Elem slow_mul(Elem a, Elem b) const;

  int e_, p_, d_;
  long size_;
  std::vector<int> modulus_;
  Elem eta_;
  std::vector<Elem> exp_;                 // exp_[i] = g^i, i < size-1
  std::vector<std::uint32_t> log_;        // log_[a] for a != 0
};

using AnyField = std::variant<CyclotomicField, GaloisField>;

/// Shared, cached field instance for a configuration (validated).
std::shared_ptr<const AnyField> get_field(const FieldConfig& f);

/// Run a generic callable on the concrete field type for f.
template <class Fn>
decltype(auto) with_field(const FieldConfig& f, Fn&& fn) {
  auto fld = get_field(f);
  return std::visit([&](const auto& concrete) -> decltype(auto) { return fn(concrete); }, *fld);
}

/// Type-erased field element carrying its field.
class FieldElem {
 public:
  using Rep = std::variant<CyclotomicField::Elem, GaloisField::Elem>;

  FieldElem(std::shared_ptr<const AnyField> field, Rep rep);

  const FieldConfig config() const;
  const Rep& rep() const { return rep_; }
  bool is_zero() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  /// Throws std::domain_error on zero.
  FieldElem inverse() const;
  bool operator==(const FieldElem& o) const;

  std::string to_string() const;

 private:
  void check_same(const FieldElem& o) const;
  std::shared_ptr<const AnyField> field_;
  Rep rep_;
};

/// The ring map Z[q,q^-1] -> field sending q to omega (p = 0) or eta (p > 0).
FieldElem specialize(const LaurentPoly& x, const FieldConfig& f);

/// Whether [m choose k] vanishes at a primitive e-th root of unity in characteristic 0,
/// decided by comparing residues mod e. Requires m >= k >= 0 and f.p == 0.
bool vanishes_at(int m, int k, const FieldConfig& f);

}  // namespace specht
