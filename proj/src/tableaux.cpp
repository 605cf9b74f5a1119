#include "specht/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specht {

// ---------------------------------------------------------------- compositions

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition: negative part");
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(std::string_view s) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("cannot parse composition '" + std::string(s) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse composition '" + std::string(s) + "'");
    }
    if (used != cur.size() || v < 0)
      throw std::invalid_argument("cannot parse composition '" + std::string(s) + "'");
    parts.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') flush();
    else if (ch != ' ') cur.push_back(ch);
  }
  flush();
  return Composition(std::move(parts));
}

int Composition::partial(int k) const {
  int s = 0;
  for (int i = 0; i < k && i < length(); ++i) s += parts_[static_cast<std::size_t>(i)];
  return s;
}

bool Composition::is_partition() const {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] < parts_[i + 1]) return false;
  return true;
}

std::string Composition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view s) { return Partition(Composition::parse(s).parts()); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int col = 1; length() > 0 && col <= parts_[0]; ++col) {
    int h = 0;
    for (int p : parts_)
      if (p >= col) ++h;
    c.push_back(h);
  }
  return Partition(c);
}

bool Partition::is_restricted(int e) const {
  for (int i = 1; i <= length(); ++i)
    if ((*this)(i) - (*this)(i + 1) >= e) return false;
  return true;
}

bool dominates(const Composition& a, const Composition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominates: compositions of different n");
  int len = std::max(a.length(), b.length());
  for (int j = 1; j <= len; ++j)
    if (a.partial(j) < b.partial(j)) return false;
  return true;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

void gen_compositions(int n, std::vector<int>& cur, std::vector<Composition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = 1; p <= n; ++p) {
    cur.push_back(p);
    gen_compositions(n - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Composition> compositions(int n) {
  if (n < 0) throw std::invalid_argument("compositions: negative n");
  std::vector<Composition> out;
  std::vector<int> cur;
  gen_compositions(n, cur, out);
  return out;
}

// ---------------------------------------------------------------- standard tableaux

std::string FilledTableau::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(rows[r][c]);
    }
  }
  return s;
}

namespace {

void gen_standard(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
                  std::vector<FilledTableau>& out) {
  if (next > shape.n()) {
    out.push_back({shape, rows});
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    auto len = static_cast<int>(rows[r].size());
    if (len >= shape(r + 1)) continue;
    if (r > 0 && len >= static_cast<int>(rows[r - 1].size())) continue;
    rows[r].push_back(next);
    gen_standard(shape, next + 1, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<FilledTableau> standard_tableaux(const Partition& shape) {
  std::vector<FilledTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  gen_standard(shape, 1, rows, out);
  return out;
}

std::uint64_t hook_length_count(const Partition& shape) {
  Partition conj = shape.conjugate();
  // n! / prod hooks, accumulated as a rational in 128-bit to stay exact at desk scale.
  unsigned __int128 num = 1, den = 1;
  for (int i = 2; i <= shape.n(); ++i) num *= static_cast<unsigned>(i);
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape(r); ++c) den *= static_cast<unsigned>(shape(r) - c + conj(c) - r + 1);
  return static_cast<std::uint64_t>(num / den);
}

// ---------------------------------------------------------------- typed tableaux

TypedTableau::TypedTableau(Partition shape, Composition type)
    : shape_(std::move(shape)), type_(std::move(type)), a_(shape_.length()), b_(type_.length()),
      counts_(static_cast<std::size_t>(a_ * b_), 0) {
  if (shape_.n() != type_.n()) throw std::invalid_argument("tableau: shape and type have different sizes");
}

TypedTableau TypedTableau::from_rows(const std::vector<std::vector<int>>& rows, const Composition& type) {
  std::vector<int> lens;
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  TypedTableau t(Partition(lens), type);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (int v : rows[j]) {
      if (v < 1 || v > type.length()) throw std::invalid_argument("tableau: entry out of range");
      t.add(static_cast<int>(j) + 1, v, 1);
    }
  if (!t.is_valid()) throw std::invalid_argument("tableau: entries do not match type " + type.to_string());
  return t;
}

TypedTableau TypedTableau::parse(std::string_view s, const Composition& type) {
  std::vector<std::vector<int>> rows(1);
  for (char ch : s) {
    if (ch == '/') rows.emplace_back();
    else if (ch >= '1' && ch <= '9') rows.back().push_back(ch - '0');
    else throw std::invalid_argument("tableau: cannot parse '" + std::string(s) + "'");
  }
  return from_rows(rows, type);
}

int TypedTableau::stat(const std::set<int>& values, const std::set<int>& rows) const {
  int s = 0;
  for (int j : rows)
    for (int i : values) s += c(j, i);
  return s;
}

int TypedTableau::lt(int j, int i) const {
  int s = 0;
  for (int x = 1; x < i && x <= b_; ++x) s += c(j, x);
  return s;
}

int TypedTableau::gt(int j, int i) const {
  int s = 0;
  for (int x = std::max(i + 1, 1); x <= b_; ++x) s += c(j, x);
  return s;
}

int TypedTableau::below(int i, int j) const {
  int s = 0;
  for (int r = std::max(j + 1, 1); r <= a_; ++r) s += c(r, i);
  return s;
}

bool TypedTableau::is_valid() const {
  for (int j = 1; j <= a_; ++j) {
    int s = 0;
    for (int i = 1; i <= b_; ++i) {
      if (c(j, i) < 0) return false;
      s += c(j, i);
    }
    if (s != shape_(j)) return false;
  }
  for (int i = 1; i <= b_; ++i) {
    int s = 0;
    for (int j = 1; j <= a_; ++j) s += c(j, i);
    if (s != type_(i)) return false;
  }
  return true;
}

bool TypedTableau::is_semistandard() const {
  for (int j = 2; j <= a_; ++j) {
    int upper = 0, lower = 0;  // entries <= i-1 in row j-1, entries <= i in row j
    for (int i = 1; i <= b_; ++i) {
      lower += c(j, i);
      if (lower > upper) return false;
      upper += c(j - 1, i);
    }
  }
  return true;
}

std::vector<std::vector<int>> TypedTableau::row_entries() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(a_));
  for (int j = 1; j <= a_; ++j)
    for (int i = 1; i <= b_; ++i)
      for (int k = 0; k < c(j, i); ++k) rows[static_cast<std::size_t>(j - 1)].push_back(i);
  return rows;
}

std::string TypedTableau::to_string() const {
  bool small = b_ <= 9;
  std::string s;
  auto rows = row_entries();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j) s += '/';
    for (std::size_t k = 0; k < rows[j].size(); ++k) {
      if (!small && k) s += ',';
      s += std::to_string(rows[j][k]);
    }
  }
  return s;
}

std::size_t TypedTableauHash::operator()(const TypedTableau& t) const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : t.counts()) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ULL;
  for (int v : t.shape().parts()) h = (h ^ static_cast<std::size_t>(v + 31)) * 1099511628211ULL;
  for (int v : t.type().parts()) h = (h ^ static_cast<std::size_t>(v + 97)) * 1099511628211ULL;
  return h;
}

// ---------------------------------------------------------------- enumeration

namespace {

struct Enumerator {
  const Partition& shape;
  const Composition& type;
  bool semistandard;
  TypedTableau cur;
  std::vector<int> colrem;
  std::vector<TypedTableau> out;

  Enumerator(const Partition& s, const Composition& t, bool ss)
      : shape(s), type(t), semistandard(ss), cur(s, t), colrem(t.parts()) {}

  // Fill row j, value i; rowrem entries still to place in row j.
  // upper = entries <= i-1 in row j-1, lower = entries <= i-1 in row j.
  void rec(int j, int i, int rowrem, int upper, int lower) {
    const int a = shape.length(), b = type.length();
    if (j > a) {
      out.push_back(cur);
      return;
    }
    if (i > b) {
      if (rowrem == 0) rec(j + 1, 1, shape(j + 1), 0, 0);
      return;
    }
    int& cr = colrem[static_cast<std::size_t>(i - 1)];
    int lo = 0, hi = std::min(rowrem, cr);
    if (i == b) lo = rowrem;           // row must close
    if (j == a) lo = hi = cr;          // last row takes what is left
    if (lo > hi) return;
    if (semistandard && j > 1) hi = std::min(hi, upper - lower);
    for (int v = hi; v >= lo; --v) {
      cur.set(j, i, v);
      cr -= v;
      rec(j, i + 1, rowrem - v, upper + cur.c(j - 1, i), lower + v);
      cr += v;
    }
    cur.set(j, i, 0);
  }
};

std::vector<TypedTableau> enumerate(const Partition& shape, const Composition& type, bool ss) {
  if (shape.n() != type.n()) throw std::invalid_argument("enumerate: shape and type sizes differ");
  Enumerator e(shape, type, ss);
  if (shape.length() == 0) return {TypedTableau(shape, type)};
  e.rec(1, 1, shape(1), 0, 0);
  return std::move(e.out);
}

}  // namespace

std::vector<TypedTableau> row_standard_tableaux(const Partition& shape, const Composition& type) {
  return enumerate(shape, type, false);
}

std::vector<TypedTableau> semistandard_tableaux(const Partition& shape, const Composition& type) {
  return enumerate(shape, type, true);
}

Composition nu_dt(const Composition& mu, int d, int t) {
  if (d < 1 || d >= mu.length()) throw std::out_of_range("nu_dt: d out of range");
  if (t < 1 || t > mu(d + 1)) throw std::out_of_range("nu_dt: t out of range");
  std::vector<int> p = mu.parts();
  p[static_cast<std::size_t>(d - 1)] += t;
  p[static_cast<std::size_t>(d)] -= t;
  return Composition(p);
}

bool algorithm_applicable(const Partition& lambda, const Partition& mu) {
  for (int j = 1; j < lambda.length(); ++j)
    if (mu.partial(j) < lambda.partial(j - 1) + lambda(j + 1)) return false;
  return true;
}

// ---------------------------------------------------------------- arrows

bool arrow_relation(const TypedTableau& T, const TypedTableau& U, int d, int t) {
  const int a = T.rows(), b = T.values();
  if (d < 1 || d >= b || t < 1 || t > T.type()(d + 1)) return false;
  if (!(U.shape() == T.shape()) || !(U.type() == nu_dt(T.type(), d, t)) || !U.is_valid()) return false;
  for (int j = 1; j <= a; ++j)
    for (int i = 1; i <= b; ++i) {
      int u = U.c(j, i), v = T.c(j, i);
      if (d >= a) {
        if (i != d && i != d + 1 && u != v) return false;
        if (i == d && u < v) return false;
        continue;
      }
      bool ok;
      if (j == d) ok = (i == d) ? u >= v : u <= v;
      else if (j == d + 1) ok = (i == d) ? u == 0 : (i == d + 1) ? u <= v : u >= v;
      else ok = (i == d) ? u >= v : (i == d + 1) ? u <= v : u == v;
      if (!ok) return false;
    }
  return true;
}

namespace {

// All vectors x with 0 <= x_k <= caps_k and sum x = total, lexicographic.
void bounded_vectors(const std::vector<int>& caps, int total, std::vector<int>& cur, std::size_t k,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (k == caps.size()) {
    if (total == 0) fn(cur);
    return;
  }
  int rest = 0;
  for (std::size_t m = k + 1; m < caps.size(); ++m) rest += caps[m];
  for (int v = std::max(0, total - rest); v <= std::min(caps[k], total); ++v) {
    cur[k] = v;
    bounded_vectors(caps, total - v, cur, k + 1, fn);
  }
  cur[k] = 0;
}

void for_each_bounded(const std::vector<int>& caps, int total,
                      const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(caps.size(), 0);
  bounded_vectors(caps, total, cur, 0, fn);
}

}  // namespace

std::vector<TypedTableau> arrows_dt(const TypedTableau& T, int d, int t) {
  const int a = T.rows(), b = T.values();
  if (d < 1 || d >= b || t < 1 || t > T.type()(d + 1)) throw std::out_of_range("arrows_dt: (d,t) out of range");
  if (!T.is_semistandard()) throw std::invalid_argument("arrows_dt: T must be semistandard");
  if (!T.type().is_partition() || !algorithm_applicable(T.shape(), Partition(T.type().parts())))
    throw std::invalid_argument("arrows_dt: pair outside the algorithm's applicability");
  const Composition nu = nu_dt(T.type(), d, t);
  std::vector<TypedTableau> out;

  auto base = [&] {
    TypedTableau U(T.shape(), nu);
    for (int j = 1; j <= a; ++j)
      for (int i = 1; i <= b; ++i) U.set(j, i, T.c(j, i));
    return U;
  };

  if (d >= a) {
    std::vector<int> caps;
    for (int j = 1; j <= a; ++j) caps.push_back(T.c(j, d + 1));
    for_each_bounded(caps, t, [&](const std::vector<int>& x) {
      TypedTableau U = base();
      for (int j = 1; j <= a; ++j) {
        U.add(j, d, x[static_cast<std::size_t>(j - 1)]);
        U.add(j, d + 1, -x[static_cast<std::size_t>(j - 1)]);
      }
      out.push_back(std::move(U));
    });
  } else {
    // Rows other than d, d+1 convert x_j entries d+1 -> d; row d converts u; row d+1 loses y
    // entries d+1 and its d's go up, while row d hands down z_i entries of each other value.
    std::vector<int> rows_other;
    for (int j = 1; j <= a; ++j)
      if (j != d && j != d + 1) rows_other.push_back(j);
    std::vector<int> caps;
    for (int j : rows_other) caps.push_back(T.c(j, d + 1));
    caps.push_back(T.c(d, d + 1));
    caps.push_back(T.c(d + 1, d + 1));
    std::vector<int> vals_other;
    for (int i = 1; i <= b; ++i)
      if (i != d && i != d + 1) vals_other.push_back(i);
    std::vector<int> zcaps;
    for (int i : vals_other) zcaps.push_back(T.c(d, i));

    for_each_bounded(caps, t, [&](const std::vector<int>& xs) {
      int u = xs[rows_other.size()], y = xs[rows_other.size() + 1];
      for_each_bounded(zcaps, y, [&](const std::vector<int>& z) {
        TypedTableau U = base();
        for (std::size_t k = 0; k < rows_other.size(); ++k) {
          U.add(rows_other[k], d, xs[k]);
          U.add(rows_other[k], d + 1, -xs[k]);
        }
        int zsum = 0;
        for (std::size_t k = 0; k < vals_other.size(); ++k) {
          U.add(d, vals_other[k], -z[k]);
          U.add(d + 1, vals_other[k], z[k]);
          zsum += z[k];
        }
        U.add(d, d + 1, -u);
        U.add(d, d, u + zsum + T.c(d + 1, d));
        U.set(d + 1, d, 0);
        U.add(d + 1, d + 1, -y);
        out.push_back(std::move(U));
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace specht
