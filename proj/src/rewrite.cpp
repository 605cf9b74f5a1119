#include "specht/rewrite.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "specht/gauss.hpp"

namespace specht {

HomCombination::HomCombination(Partition shape, Composition type)
    : shape_(std::move(shape)), type_(std::move(type)) {}

HomCombination HomCombination::single(const TypedTableau& s, LaurentPoly coeff) {
  HomCombination c(s.shape(), s.type());
  c.add(s, coeff);
  return c;
}

void HomCombination::check_key(const TypedTableau& s) const {
  if (!(s.shape() == shape_) || !(s.type() == type_))
    throw std::invalid_argument("HomCombination: tableau " + s.to_string() + " has the wrong shape or type");
}

LaurentPoly HomCombination::coeff(const TypedTableau& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HomCombination::add(const TypedTableau& s, const LaurentPoly& c) {
  if (c.is_zero()) return;
  check_key(s);
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HomCombination& HomCombination::operator+=(const HomCombination& o) {
  if (shape_.n() == 0 && terms_.empty()) {
    shape_ = o.shape_;
    type_ = o.type_;
  }
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

HomCombination HomCombination::scaled(const LaurentPoly& c) const {
  HomCombination r(shape_, type_);
  if (c.is_zero()) return r;
  for (const auto& [s, x] : terms_) r.terms_.emplace(s, x * c);
  return r;
}

bool HomCombination::all_semistandard() const {
  for (const auto& [s, c] : terms_)
    if (!s.is_semistandard()) return false;
  return true;
}

std::string HomCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*[" << s.to_string() << "]";
  }
  return os.str();
}

namespace {

long binom2(long m) { return m * (m - 1) / 2; }

// Vectors g indexed by value 1..b (g_d = 0) with g_i <= caps_i and sum g = total.
void for_each_g(const std::vector<int>& caps, int d, int total, std::vector<int>& g, int i,
                const std::function<void(const std::vector<int>&)>& fn) {
  const int b = static_cast<int>(caps.size()) - 1;
  if (i > b) {
    if (total == 0) fn(g);
    return;
  }
  if (i == d) {
    for_each_g(caps, d, total, g, i + 1, fn);
    return;
  }
  int rest = 0;
  for (int k = i + 1; k <= b; ++k)
    if (k != d) rest += caps[k];
  for (int v = std::max(0, total - rest); v <= std::min(caps[i], total); ++v) {
    g[i] = v;
    for_each_g(caps, d, total - v, g, i + 1, fn);
  }
  g[i] = 0;
}

void check_rule_range(const TypedTableau& S, int r, int d) {
  if (r < 1 || r > S.rows() - 1) throw std::out_of_range("rewrite: row index r out of range");
  if (d < 1 || d > S.values()) throw std::out_of_range("rewrite: value d out of range");
}

}  // namespace

HomCombination expand_h(const TypedTableau& T, int d, int t) {
  const int a = T.rows(), b = T.values();
  if (d < 1 || d >= b) throw std::out_of_range("expand_h: d out of range");
  if (t < 1 || t > T.type()(d + 1)) throw std::out_of_range("expand_h: t out of range");
  const Composition nu = nu_dt(T.type(), d, t);
  HomCombination out(T.shape(), nu);
  std::vector<int> caps(static_cast<std::size_t>(a + 1), 0), g(static_cast<std::size_t>(a + 1), 0);
  for (int j = 1; j <= a; ++j) caps[j] = T.c(j, d + 1);
  // Reuse the g-enumerator with no excluded index (d = 0) over rows.
  for_each_g(caps, 0, t, g, 1, [&](const std::vector<int>& x) {
    TypedTableau S(T.shape(), nu);
    for (int j = 1; j <= a; ++j)
      for (int i = 1; i <= b; ++i) S.set(j, i, T.c(j, i));
    LaurentPoly coeff(1);
    long qexp = 0;
    for (int j = 1; j <= a; ++j) {
      S.add(j, d, x[j]);
      S.add(j, d + 1, -x[j]);
      qexp += static_cast<long>(T.below(d, j)) * x[j];
      coeff *= gauss_binomial(S.c(j, d), T.c(j, d));
    }
    out.add(S, coeff.shifted(static_cast<int>(qexp)));
  });
  return out;
}

HomCombination lemma7_down(const TypedTableau& S, int r, int d) {
  check_rule_range(S, r, d);
  const int b = S.values();
  const int s = S.c(r + 1, d);
  HomCombination out(S.shape(), S.type());
  if (s == 0) {
    out.add(S, LaurentPoly(1));
    return out;
  }
  const long pre = -binom2(s + 1) - static_cast<long>(s) * S.lt(r + 1, d);
  const LaurentPoly sign = (s % 2) ? LaurentPoly(-1) : LaurentPoly(1);
  std::vector<int> caps(static_cast<std::size_t>(b + 1), 0), g(static_cast<std::size_t>(b + 1), 0);
  for (int i = 1; i <= b; ++i) caps[i] = S.c(r, i);
  for_each_g(caps, d, s, g, 1, [&](const std::vector<int>& gv) {
    TypedTableau U = S;
    U.add(r, d, s);
    U.set(r + 1, d, 0);
    long qexp = pre;
    LaurentPoly coeff = sign;
    for (int i = 1; i <= b; ++i) {
      if (i < d) qexp += gv[i];
      if (gv[i] == 0) continue;
      U.add(r, i, -gv[i]);
      U.add(r + 1, i, gv[i]);
      qexp += static_cast<long>(gv[i]) * S.lt(r + 1, i);
      coeff *= gauss_binomial(S.c(r + 1, i) + gv[i], gv[i]);
    }
    out.add(U, coeff.shifted(static_cast<int>(qexp)));
  });
  return out;
}

HomCombination lemma7_up(const TypedTableau& S, int r, int d) {
  check_rule_range(S, r, d);
  if (S.shape()(r) != S.shape()(r + 1))
    throw std::invalid_argument("lemma7_up: rows r and r+1 must have equal length");
  const int b = S.values();
  const int s = S.c(r, d);
  HomCombination out(S.shape(), S.type());
  if (s == 0) {
    out.add(S, LaurentPoly(1));
    return out;
  }
  const long pre = -binom2(s) - static_cast<long>(s) * S.gt(r, d);
  const LaurentPoly sign = (s % 2) ? LaurentPoly(-1) : LaurentPoly(1);
  std::vector<int> caps(static_cast<std::size_t>(b + 1), 0), g(static_cast<std::size_t>(b + 1), 0);
  for (int i = 1; i <= b; ++i) caps[i] = S.c(r + 1, i);
  for_each_g(caps, d, s, g, 1, [&](const std::vector<int>& gv) {
    TypedTableau U = S;
    U.add(r + 1, d, s);
    U.set(r, d, 0);
    long qexp = pre;
    LaurentPoly coeff = sign;
    for (int i = 1; i <= b; ++i) {
      if (i < d) qexp -= gv[i];
      if (gv[i] == 0) continue;
      U.add(r + 1, i, -gv[i]);
      U.add(r, i, gv[i]);
      qexp += static_cast<long>(gv[i]) * S.gt(r, i);
      coeff *= gauss_binomial(S.c(r, i) + gv[i], gv[i]);
    }
    out.add(U, coeff.shifted(static_cast<int>(qexp)));
  });
  return out;
}

HomCombination rewrite_each(const HomCombination& c, int r, int d, bool up) {
  HomCombination out(c.shape(), c.type());
  for (const auto& [s, x] : c.terms()) out += (up ? lemma7_up(s, r, d) : lemma7_down(s, r, d)).scaled(x);
  return out;
}

namespace {

// Topmost row j >= 2 (then smallest value i) where column strictness fails.
std::optional<std::pair<int, int>> first_violation(const TypedTableau& s) {
  for (int j = 2; j <= s.rows(); ++j) {
    int upper = 0, lower = 0;
    for (int i = 1; i <= s.values(); ++i) {
      lower += s.c(j, i);
      if (lower > upper) return std::make_pair(j, i);
      upper += s.c(j - 1, i);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<HomCombination> semistandardize(const HomCombination& c, int budget) {
  HomCombination cur = c;
  int steps = 0;
  for (;;) {
    const TypedTableau* bad = nullptr;
    std::pair<int, int> where;
    for (const auto& [s, x] : cur.terms()) {
      if (auto v = first_violation(s)) {
        bad = &s;
        where = *v;
        break;
      }
    }
    if (!bad) return cur;
    if (steps++ >= budget) return std::nullopt;
    TypedTableau s = *bad;
    LaurentPoly x = cur.coeff(s);
    cur.add(s, -x);
    cur += lemma7_down(s, where.first - 1, where.second).scaled(x);
  }
}

}  // namespace specht
