#include "specht/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specht {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int k, const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(k, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.emplace_back(static_cast<int>(i), mpz_class(coeffs[i]));
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

mpz_class LaurentPoly::coeff(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, int v) { return t.first < v; });
  if (it != terms_.end() && it->first == k) return it->second;
  return 0;
}

namespace {

// Merge two sorted term lists with sign s on the second.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool negate) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate ? mpz_class(-b[j].second) : b[j].second);
      ++j;
    } else {
      mpz_class c = negate ? mpz_class(a[i].second - b[j].second) : mpz_class(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  int lo = a.low_degree() + b.low_degree();
  int hi = a.high_degree() + b.high_degree();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      mpz_addmul(dense[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  LaurentPoly r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (num.is_zero()) return {};
  // Long division on dense coefficient arrays, leading term first.
  int nlo = num.low_degree(), nhi = num.high_degree();
  int dlo = den.low_degree(), dhi = den.high_degree();
  if (nhi - nlo < dhi - dlo) throw std::domain_error("LaurentPoly: inexact division");
  std::vector<mpz_class> rem(static_cast<std::size_t>(nhi - nlo + 1));
  for (const auto& [e, c] : num.terms_) rem[e - nlo] = c;
  std::vector<mpz_class> dd(static_cast<std::size_t>(dhi - dlo + 1));
  for (const auto& [e, c] : den.terms_) dd[e - dlo] = c;
  const mpz_class& lead = dd.back();
  int qlen = (nhi - nlo) - (dhi - dlo) + 1;
  std::vector<mpz_class> quot(static_cast<std::size_t>(qlen));
  for (int k = qlen - 1; k >= 0; --k) {
    mpz_class& top = rem[k + dhi - dlo];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("LaurentPoly: inexact division");
    mpz_class qc = top / lead;
    for (std::size_t j = 0; j < dd.size(); ++j)
      if (dd[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), qc.get_mpz_t(), dd[j].get_mpz_t());
    quot[k] = std::move(qc);
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("LaurentPoly: inexact division");
  LaurentPoly r;
  for (int k = 0; k < qlen; ++k)
    if (quot[k] != 0) r.terms_.emplace_back(k + nlo - dlo, std::move(quot[k]));
  return r;
}

mpz_class LaurentPoly::evaluate_at(long q) const {
  mpz_class acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0) throw std::domain_error("LaurentPoly::evaluate_at: negative exponent");
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q < 0 ? -q : q), static_cast<unsigned long>(e));
    if (q < 0 && (e % 2) == 1) pw = -pw;
    acc += c * pw;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || e == 0) os << mag.get_str();
    if (e != 0) {
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace specht
