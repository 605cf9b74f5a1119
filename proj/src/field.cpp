#include "specht/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "specht/gauss.hpp"

namespace specht {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

int mult_order(int p, int e) {
  int d = 1;
  long x = p % e;
  while (x != 1 % e) {
    x = (x * p) % e;
    ++d;
    if (d > e) throw std::logic_error("mult_order: no order");
  }
  return d;
}

long ipow(long b, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

}  // namespace

void FieldConfig::validate() const {
  if (e < 2) throw std::invalid_argument("field: e must be >= 2 (got " + std::to_string(e) + ")");
  if (p < 0 || (p > 0 && !is_prime(p)))
    throw std::invalid_argument("field: p must be 0 or prime (got " + std::to_string(p) + ")");
  if (p > 0 && e != p) {
    if (e % p == 0)
      throw std::invalid_argument("field: in characteristic " + std::to_string(p) +
                                  " the quantum characteristic must be p or coprime to p");
    int d = mult_order(p, e);
    if (d > 30 || ipow(p, d) > GaloisField::kMaxOrder)
      throw std::invalid_argument("field: GF(" + std::to_string(p) + "^" + std::to_string(d) +
                                  ") is too large");
  }
}

std::string FieldConfig::to_string() const {
  return "(e=" + std::to_string(e) + ", p=" + std::to_string(p) + ")";
}

// ---------------------------------------------------------------- Q(omega_e)

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b nonzero and trimmed; returns quotient too.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return {quot, a};
}

QPoly pmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly psub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

CyclotomicField::CyclotomicField(int e) : e_(e) {
  FieldConfig{e, 0}.validate();
  const LaurentPoly& phi = cyclotomic_poly(e);
  deg_ = phi.high_degree();
  phi_.assign(static_cast<std::size_t>(deg_ + 1), 0);
  for (const auto& [k, c] : phi.terms()) phi_[k] = c;

  // X^j mod Phi for 0 <= j < max(e, 2 deg - 1).
  int upto = std::max(e_, 2 * deg_ - 1);
  std::vector<Elem> pw;
  Elem cur = zero();
  cur[0] = 1;
  for (int j = 0; j < upto; ++j) {
    pw.push_back(cur);
    // multiply by X: shift up, fold the overflow with the monic relation
    mpq_class top = cur[deg_ - 1];
    for (int i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < deg_; ++i) cur[i] -= top * phi_[i];
  }
  qpow_.assign(pw.begin(), pw.begin() + e_);
  for (int j = deg_; j <= 2 * deg_ - 2; ++j) high_.push_back(pw[j]);
}

CyclotomicField::Elem CyclotomicField::from_int(long c) const {
  Elem r = zero();
  r[0] = c;
  return r;
}

CyclotomicField::Elem CyclotomicField::from_poly(const LaurentPoly& x) const {
  Elem r = zero();
  for (const auto& [k, c] : x.terms()) {
    const Elem& b = q_pow(k);
    for (int i = 0; i < deg_; ++i)
      if (b[i] != 0) r[i] += mpq_class(c) * b[i];
  }
  return r;
}

bool CyclotomicField::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int i = 0; i < deg_; ++i) r[i] += b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (int i = 0; i < deg_; ++i) r[i] -= b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& c : r) c = -c;
  return r;
}

void CyclotomicField::mul_into(std::vector<mpq_class>& prod, const Elem& a, const Elem& b) const {
  prod.assign(static_cast<std::size_t>(2 * deg_ - 1), 0);
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < deg_; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
}

void CyclotomicField::reduce_add(Elem& acc, std::vector<mpq_class>& prod, bool subtract) const {
  for (int i = 0; i < deg_; ++i) {
    if (prod[i] == 0) continue;
    if (subtract) acc[i] -= prod[i]; else acc[i] += prod[i];
  }
  for (int j = deg_; j < 2 * deg_ - 1; ++j) {
    if (prod[j] == 0) continue;
    const Elem& h = high_[j - deg_];
    for (int i = 0; i < deg_; ++i) {
      if (h[i] == 0) continue;
      if (subtract) acc[i] -= prod[j] * h[i]; else acc[i] += prod[j] * h[i];
    }
  }
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  if (deg_ == 1) return {a[0] * b[0]};
  std::vector<mpq_class> prod;
  mul_into(prod, a, b);
  Elem r = zero();
  reduce_add(r, prod, false);
  return r;
}

void CyclotomicField::add_mul(Elem& acc, const Elem& a, const Elem& b) const {
  if (deg_ == 1) {
    acc[0] += a[0] * b[0];
    return;
  }
  std::vector<mpq_class> prod;
  mul_into(prod, a, b);
  reduce_add(acc, prod, false);
}

void CyclotomicField::sub_mul(Elem& acc, const Elem& a, const Elem& b) const {
  if (deg_ == 1) {
    acc[0] -= a[0] * b[0];
    return;
  }
  std::vector<mpq_class> prod;
  mul_into(prod, a, b);
  reduce_add(acc, prod, true);
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("Q(omega): inverse of zero");
  if (deg_ == 1) return {1 / a[0]};
  // Extended Euclid: s*a + t*phi = g, g a nonzero constant.
  QPoly r0 = phi_, r1 = a;
  trim(r1);
  QPoly s0, s1 = {1};
  while (r1.size() > 1) {
    auto [qt, rem] = divmod(r0, r1);
    QPoly s2 = psub(s0, pmul(qt, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("Q(omega): non-invertible element");
  Elem r = zero();
  auto [unused, red] = divmod(s1, phi_);
  (void)unused;
  for (std::size_t i = 0; i < red.size(); ++i) r[i] = red[i] / r1[0];
  return r;
}

mpz_class CyclotomicField::denominator(const Elem& a) const {
  mpz_class l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

CyclotomicField::Elem CyclotomicField::scale(const Elem& a, const mpq_class& c) const {
  Elem r = a;
  for (auto& x : r) x *= c;
  return r;
}

LaurentPoly CyclotomicField::representative(const Elem& a) const {
  std::vector<LaurentPoly::Term> t;
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    if (a[i].get_den() != 1) throw std::domain_error("Q(omega): representative needs integral coefficients");
    t.emplace_back(i, a[i].get_num());
  }
  return LaurentPoly::from_terms(std::move(t));
}

std::string CyclotomicField::to_string(const Elem& a) const {
  if (is_zero(a)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << a[i].get_str() << ")";
    if (i > 0) os << "w^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- GF(p^d)

namespace {

using ZpPoly = std::vector<int>;

// Remainder of a modulo monic b over Z/p.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, int p) {
  while (a.size() >= b.size()) {
    int c = a.back();
    std::size_t shift = a.size() - b.size();
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

GaloisField::GaloisField(int e, int p) : e_(e), p_(p) {
  FieldConfig{e, p}.validate();
  if (p == 0) throw std::invalid_argument("GaloisField: p must be prime");
  d_ = (e == p) ? 1 : mult_order(p, e);
  size_ = ipow(p, d_);

  ZpPoly phi;
  for (int k = 0; k <= cyclotomic_poly(e).high_degree(); ++k)
    phi.push_back(residue(cyclotomic_poly(e).coeff(k).get_si(), p));

  // Any monic degree-d divisor of Phi_e mod p is irreducible (all factors share degree d;
  // for e = p the only factor is X - 1).
  long ncand = ipow(p, d_);
  bool found = false;
  for (long c = 0; c < ncand && !found; ++c) {
    ZpPoly f(static_cast<std::size_t>(d_ + 1));
    long x = c;
    for (int j = 0; j < d_; ++j) {
      f[j] = static_cast<int>(x % p);
      x /= p;
    }
    f[d_] = 1;
    if (zp_mod(phi, f, p).empty()) {
      modulus_ = f;
      found = true;
    }
  }
  if (!found) throw std::logic_error("GaloisField: no factor of Phi_e found");

  // eta = X mod f (for d = 1 this is the root of f).
  eta_ = (d_ == 1) ? static_cast<Elem>((p - modulus_[0]) % p) : static_cast<Elem>(p);

  // Find a primitive element and build log/exp tables.
  if (size_ == 2) {
    exp_ = {1};
    log_.assign(2, 0);
  } else {
    for (Elem g = 2; g < size_; ++g) {
      std::vector<Elem> ex;
      ex.reserve(static_cast<std::size_t>(size_ - 1));
      Elem cur = 1;
      do {
        ex.push_back(cur);
        cur = slow_mul(cur, g);
      } while (cur != 1 && static_cast<long>(ex.size()) < size_);
      if (static_cast<long>(ex.size()) == size_ - 1) {
        exp_ = std::move(ex);
        break;
      }
    }
    if (exp_.empty()) throw std::logic_error("GaloisField: no primitive element");
    log_.assign(static_cast<std::size_t>(size_), 0);
    for (std::size_t i = 0; i < exp_.size(); ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);
  }
}

std::vector<int> GaloisField::digits(Elem a) const {
  std::vector<int> r(static_cast<std::size_t>(d_));
  for (int j = 0; j < d_; ++j) {
    r[j] = static_cast<int>(a % p_);
    a /= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::pack(const std::vector<int>& digs) const {
  Elem r = 0;
  for (int j = d_ - 1; j >= 0; --j) r = r * p_ + static_cast<Elem>(digs[j]);
  return r;
}

GaloisField::Elem GaloisField::slow_mul(Elem a, Elem b) const {
  auto da = digits(a), db = digits(b);
  ZpPoly prod(static_cast<std::size_t>(2 * d_ - 1), 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  ZpPoly r = zp_mod(prod, modulus_, p_);
  r.resize(static_cast<std::size_t>(d_), 0);
  return pack(r);
}

GaloisField::Elem GaloisField::from_int(long c) const { return static_cast<Elem>(residue(c, p_)); }

GaloisField::Elem GaloisField::q_pow(long k) const {
  long n = size_ - 1;
  long idx = (static_cast<long>(log_[eta_]) * (k % n)) % n;
  if (idx < 0) idx += n;
  return exp_[static_cast<std::size_t>(idx)];
}

GaloisField::Elem GaloisField::from_poly(const LaurentPoly& x) const {
  Elem r = 0;
  mpz_class pp = p_;
  for (const auto& [k, c] : x.terms()) {
    mpz_class m;
    mpz_mod(m.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    add_mul(r, from_int(m.get_si()), q_pow(k));
  }
  return r;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (d_ == 1) return static_cast<Elem>((a + b) % static_cast<Elem>(p_));
  Elem r = 0, scale = 1;
  for (int j = 0; j < d_; ++j) {
    Elem s = (a % p_ + b % p_) % p_;
    r += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (d_ == 1) return static_cast<Elem>((a + p_ - b) % static_cast<Elem>(p_));
  Elem r = 0, scale = 1;
  for (int j = 0; j < d_; ++j) {
    Elem s = (a % p_ + p_ - b % p_) % p_;
    r += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  long n = size_ - 1;
  long idx = static_cast<long>(log_[a]) + static_cast<long>(log_[b]);
  if (idx >= n) idx -= n;
  return exp_[static_cast<std::size_t>(idx)];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("GF: inverse of zero");
  long n = size_ - 1;
  return exp_[static_cast<std::size_t>((n - log_[a]) % n)];
}

LaurentPoly GaloisField::representative(Elem a) const {
  auto ds = digits(a);
  std::vector<LaurentPoly::Term> t;
  for (int j = 0; j < d_; ++j)
    if (ds[j] != 0) t.emplace_back(j, ds[j]);
  return LaurentPoly::from_terms(std::move(t));
}

std::string GaloisField::to_string(Elem a) const {
  if (d_ == 1) return std::to_string(a);
  auto ds = digits(a);
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < d_; ++j) {
    if (ds[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << ds[j];
    if (j > 0) os << "h^" << j;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------- dispatch

std::shared_ptr<const AnyField> get_field(const FieldConfig& f) {
  f.validate();
  static std::mutex mu;
  static std::map<FieldConfig, std::shared_ptr<const AnyField>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(f);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const AnyField> fld;
  if (f.p == 0)
    fld = std::make_shared<const AnyField>(std::in_place_type<CyclotomicField>, f.e);
  else
    fld = std::make_shared<const AnyField>(std::in_place_type<GaloisField>, f.e, f.p);
  cache.emplace(f, fld);
  return fld;
}

FieldElem::FieldElem(std::shared_ptr<const AnyField> field, Rep rep)
    : field_(std::move(field)), rep_(std::move(rep)) {}

const FieldConfig FieldElem::config() const {
  return std::visit([](const auto& f) { return f.config(); }, *field_);
}

void FieldElem::check_same(const FieldElem& o) const {
  if (field_ != o.field_ && !(config() == o.config()))
    throw std::invalid_argument("FieldElem: operands from different fields");
}

namespace {

template <class F>
const typename F::Elem& as(const FieldElem::Rep& r) {
  return std::get<typename F::Elem>(r);
}

}  // namespace

bool FieldElem::is_zero() const {
  return std::visit([&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    return f.is_zero(as<F>(rep_));
  }, *field_);
}

#define SPECHT_FIELDELEM_BINOP(op, method)                                        \
  FieldElem FieldElem::operator op(const FieldElem& o) const {                    \
    check_same(o);                                                                \
    return std::visit([&](const auto& f) {                                        \
      using F = std::decay_t<decltype(f)>;                                        \
      return FieldElem(field_, Rep(f.method(as<F>(rep_), as<F>(o.rep_))));        \
    }, *field_);                                                                  \
  }

SPECHT_FIELDELEM_BINOP(+, add)
SPECHT_FIELDELEM_BINOP(-, sub)
SPECHT_FIELDELEM_BINOP(*, mul)
#undef SPECHT_FIELDELEM_BINOP

FieldElem FieldElem::operator-() const {
  return std::visit([&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    return FieldElem(field_, Rep(f.neg(as<F>(rep_))));
  }, *field_);
}

FieldElem FieldElem::inverse() const {
  return std::visit([&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    return FieldElem(field_, Rep(f.inv(as<F>(rep_))));
  }, *field_);
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same(o);
  return rep_ == o.rep_;
}

std::string FieldElem::to_string() const {
  return std::visit([&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    return f.to_string(as<F>(rep_));
  }, *field_);
}

FieldElem specialize(const LaurentPoly& x, const FieldConfig& f) {
  auto fld = get_field(f);
  return std::visit([&](const auto& concrete) {
    return FieldElem(fld, FieldElem::Rep(concrete.from_poly(x)));
  }, *fld);
}

bool vanishes_at(int m, int k, const FieldConfig& f) {
  if (f.p != 0) throw std::invalid_argument("vanishes_at: characteristic zero only");
  f.validate();
  if (!(m >= k && k >= 0)) throw std::invalid_argument("vanishes_at: need m >= k >= 0");
  return residue(m, f.e) < residue(k, f.e);
}

}  // namespace specht
