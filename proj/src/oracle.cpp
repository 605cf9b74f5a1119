#include "specht/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numeric>

namespace specht {

SizeGuard SizeGuard::from_env() {
  SizeGuard g;
  if (const char* s = std::getenv("SPECHT_HOM_MAX_DIM"); s && *s) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0') throw std::invalid_argument("SPECHT_HOM_MAX_DIM must be a positive integer");
    g.max_dim = v;
    g.max_n = INT_MAX;
  }
  return g;
}

void SizeGuard::check(int n, std::uint64_t dim, const std::string& what) const {
  if (n > max_n || dim > max_dim)
    throw SizeGuardExceeded(what + ": n=" + std::to_string(n) + ", dim=" + std::to_string(dim) +
                            " exceeds the size guard (n <= " + std::to_string(max_n) +
                            ", dim <= " + std::to_string(max_dim) + ")");
}

int inversions(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::vector<int> reduced_word(const std::vector<int>& one_line) {
  std::vector<int> w = one_line, word;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        word.push_back(static_cast<int>(i) + 1);
        std::swap(w[i], w[i + 1]);
        again = true;
        break;
      }
  }
  if (static_cast<int>(word.size()) != inversions(one_line))
    throw std::logic_error("reduced_word: length differs from the inversion count");
  return word;
}

namespace {

// All sequences with counts[r] copies of r, in lexicographic order.
std::vector<std::vector<std::uint8_t>> arrangements(const std::vector<int>& counts) {
  std::vector<std::uint8_t> w;
  for (std::size_t r = 0; r < counts.size(); ++r) w.insert(w.end(), static_cast<std::size_t>(counts[r]), static_cast<std::uint8_t>(r));
  std::vector<std::vector<std::uint8_t>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::uint64_t multinomial(const std::vector<int>& parts) {
  unsigned __int128 r = 1;
  int total = 0;
  for (int k : parts) {
    for (int i = 1; i <= k; ++i) {
      r = r * static_cast<unsigned>(total + i) / static_cast<unsigned>(i);
      if (r > UINT64_MAX) return UINT64_MAX;
    }
    total += k;
  }
  return static_cast<std::uint64_t>(r);
}

// Ballot condition: the row-standard tableau is standard.
bool is_standard(const RowWord& w, int rows) {
  std::vector<int> cnt(static_cast<std::size_t>(rows), 0);
  for (auto r : w) {
    if (r > 0 && cnt[r] + 1 > cnt[r - 1u]) return false;
    ++cnt[r];
  }
  return true;
}

template <class F>
void accum(const F& f, std::map<std::uint32_t, typename F::Elem>& v, std::uint32_t k, const typename F::Elem& a) {
  auto [it, inserted] = v.try_emplace(k, a);
  if (!inserted) it->second = f.add(it->second, a);
}

template <class F>
void drop_zeros(const F& f, std::map<std::uint32_t, typename F::Elem>& v) {
  std::erase_if(v, [&](const auto& kv) { return f.is_zero(kv.second); });
}

}  // namespace

std::vector<std::vector<int>> coset_representatives(int n, int m, const Composition& eta) {
  if (m < 0 || m + eta.n() > n) throw std::out_of_range("coset_representatives: letters outside 1..n");
  std::vector<std::vector<int>> reps;
  for (const auto& labels : arrangements(eta.parts())) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    // Letters of t with label r, in increasing order, fill row r of t^eta in order.
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(eta.length()));
    for (std::size_t x = 0; x < labels.size(); ++x) rows[labels[x]].push_back(m + 1 + static_cast<int>(x));
    int src = m + 1;
    for (const auto& row : rows)
      for (int y : row) w[static_cast<std::size_t>(src++ - 1)] = y;
    reps.push_back(std::move(w));
  }
  return reps;
}

// ---------------------------------------------------------------- PermModule

template <class F>
PermModule<F>::PermModule(const F& f, Composition mu, const SizeGuard& guard) : f_(&f), mu_(std::move(mu)) {
  const std::uint64_t d = multinomial(mu_.parts());
  guard.check(mu_.n(), d, "permutation module M^(" + mu_.to_string() + ")");
  if (mu_.n() > 16 || mu_.length() > 16)
    throw SizeGuardExceeded("permutation module: more than 16 letters or rows is not supported");
  if (mu_.n() == 0) {
    basis_.push_back({});
  } else {
    basis_ = arrangements(mu_.parts());
  }
  lookup_.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) lookup_.emplace(pack(basis_[k]), static_cast<std::uint32_t>(k));
  q_ = f.q_pow(1);
  qm1_ = f.sub(q_, f.one());
}

template <class F>
std::uint64_t PermModule<F>::pack(const RowWord& w) {
  std::uint64_t x = 0;
  for (auto r : w) x = (x << 4) | r;
  return x;
}

template <class F>
std::uint32_t PermModule<F>::index(const RowWord& w) const {
  if (static_cast<int>(w.size()) != n()) throw std::out_of_range("PermModule::index: wrong length");
  auto it = lookup_.find(pack(w));
  if (it == lookup_.end() || basis_[it->second] != w) throw std::out_of_range("PermModule::index: not a basis word");
  return it->second;
}

template <class F>
typename PermModule<F>::Vec PermModule<F>::act(const Vec& v, int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("PermModule::act: generator index");
  const F& f = *f_;
  Vec out;
  RowWord w;
  for (const auto& [k, a] : v) {
    const RowWord& src = basis_[k];
    const auto ri = src[static_cast<std::size_t>(i - 1)], rj = src[static_cast<std::size_t>(i)];
    if (ri == rj) {
      accum(f, out, k, f.mul(q_, a));
      continue;
    }
    w = src;
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    const std::uint32_t ks = lookup_.at(pack(w));
    if (ri < rj) {
      accum(f, out, ks, a);
    } else {
      accum(f, out, ks, f.mul(q_, a));
      accum(f, out, k, f.mul(qm1_, a));
    }
  }
  drop_zeros(f, out);
  return out;
}

template <class F>
typename PermModule<F>::Vec PermModule<F>::act_word(Vec v, const std::vector<int>& word) const {
  for (int i : word) v = act(v, i);
  return v;
}

template <class F>
typename PermModule<F>::Vec PermModule<F>::apply_h(const Vec& v, int m, const Composition& eta) const {
  Vec out;
  for (const auto& w : coset_representatives(n(), m, eta))
    for (const auto& [k, a] : act_word(v, reduced_word(w))) accum(*f_, out, k, a);
  drop_zeros(*f_, out);
  return out;
}

// ---------------------------------------------------------------- SpechtQuotient

namespace {

// Fully reduced sparse echelon basis of a subspace; pivots avoid standard
// tableaux whenever possible.
template <class F>
class SparseEchelon {
 public:
  using Elem = typename F::Elem;
  using Vec = std::map<std::uint32_t, Elem>;

  SparseEchelon(const F& f, std::size_t dim, std::vector<char> preferred)
      : f_(f), pivot_row_(dim, -1), col_rows_(dim), preferred_(std::move(preferred)) {}

  void reduce(Vec& v) const {
    std::vector<std::uint32_t> hits;
    for (const auto& [c, a] : v)
      if (pivot_row_[c] >= 0) hits.push_back(c);
    for (auto c : hits) {
      auto it = v.find(c);
      if (it == v.end()) continue;
      const Elem a = it->second;
      for (const auto& [cc, b] : rows_[static_cast<std::size_t>(pivot_row_[c])]) {
        auto [jt, inserted] = v.try_emplace(cc, f_.neg(f_.mul(a, b)));
        if (!inserted) f_.sub_mul(jt->second, a, b);
      }
    }
    drop_zeros(f_, v);
  }

  /// Insert an already reduced nonzero vector; returns the normalized row.
  const Vec& insert(Vec v) {
    std::uint32_t p = v.rbegin()->first;
    for (auto it = v.rbegin(); it != v.rend(); ++it)
      if (preferred_[it->first]) {
        p = it->first;
        break;
      }
    const Elem inv = f_.inv(v.at(p));
    for (auto& [c, a] : v) a = f_.mul(a, inv);
    const auto id = static_cast<std::int64_t>(rows_.size());
    for (auto r : col_rows_[p]) {
      Vec& row = rows_[r];
      auto it = row.find(p);
      if (it == row.end()) continue;
      const Elem a = it->second;
      for (const auto& [c, b] : v) {
        auto [jt, inserted] = row.try_emplace(c, f_.neg(f_.mul(a, b)));
        if (inserted) col_rows_[c].push_back(r);
        else f_.sub_mul(jt->second, a, b);
      }
      drop_zeros(f_, row);
    }
    col_rows_[p].clear();
    for (const auto& [c, a] : v) col_rows_[c].push_back(static_cast<std::uint32_t>(id));
    pivot_row_[p] = id;
    rows_.push_back(std::move(v));
    return rows_.back();
  }

  std::size_t rank() const { return rows_.size(); }
  std::int64_t pivot_row(std::uint32_t c) const { return pivot_row_[c]; }
  const Vec& row(std::size_t r) const { return rows_[r]; }

 private:
  const F& f_;
  std::vector<Vec> rows_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<char> preferred_;
};

template <class F>
DenseMatrix<F> multiply(const F& f, const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  DenseMatrix<F> c(f, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (f.is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (!f.is_zero(b.at(k, j))) f.add_mul(c.at(i, j), a.at(i, k), b.at(k, j));
    }
  return c;
}

}  // namespace

template <class F>
SpechtQuotient<F>::SpechtQuotient(const F& f, Partition lambda, const SizeGuard& guard)
    : f_(&f), lambda_(std::move(lambda)), ambient_(f, lambda_, guard) {
  const PermModule<F>& M = ambient_;
  const std::size_t D = M.dim();
  const int n = M.n();
  std::vector<char> nonstandard(D);
  for (std::size_t k = 0; k < D; ++k) nonstandard[k] = !is_standard(M.word(k), lambda_.length());

  SparseEchelon<F> ech(f, D, nonstandard);
  std::deque<Vec> work;
  auto push = [&](Vec v) {
    ech.reduce(v);
    if (!v.empty()) work.push_back(ech.insert(std::move(v)));
  };
  for (int d = 1; d < lambda_.length(); ++d)
    for (int t = 1; t <= lambda_(d + 1); ++t)
      push(M.apply_h(M.unit(M.initial()), lambda_.partial(d - 1), Composition({lambda_(d), t})));
  while (!work.empty()) {
    Vec u = std::move(work.front());
    work.pop_front();
    for (int i = 1; i < n; ++i) push(M.act(u, i));
  }

  free_pos_.assign(D, -1);
  for (std::uint32_t k = 0; k < D; ++k)
    if (ech.pivot_row(k) < 0) {
      free_pos_[k] = static_cast<std::int64_t>(free_.size());
      free_.push_back(k);
    }
  for (std::uint32_t k = 0; k < D; ++k)
    if (auto r = ech.pivot_row(k); r >= 0) {
      Vec rest = ech.row(static_cast<std::size_t>(r));
      rest.erase(k);
      reduced_.emplace(k, std::move(rest));
    }
  if (free_.size() != hook_length_count(lambda_))
    throw std::logic_error("SpechtQuotient: quotient for (" + lambda_.to_string() + ") over " +
                           f.config().to_string() + " has dimension " + std::to_string(free_.size()) +
                           ", expected " + std::to_string(hook_length_count(lambda_)));

  gens_.resize(n > 0 ? static_cast<std::size_t>(n - 1) : 0);
  for (int i = 1; i < n; ++i) {
    DenseMatrix<F> g(f, dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      Row r = project(M.act(M.unit(free_[a]), i));
      for (std::size_t b = 0; b < dim(); ++b) g.at(a, b) = std::move(r[b]);
    }
    gens_[static_cast<std::size_t>(i - 1)] = std::move(g);
  }
}

template <class F>
typename SpechtQuotient<F>::Row SpechtQuotient<F>::project(const Vec& v) const {
  const F& f = *f_;
  Row out(dim(), f.zero());
  for (const auto& [k, a] : v) {
    if (free_pos_.at(k) >= 0) {
      f.add_mul(out[static_cast<std::size_t>(free_pos_[k])], a, f.one());
      continue;
    }
    for (const auto& [c, b] : reduced_.at(k)) f.sub_mul(out[static_cast<std::size_t>(free_pos_[c])], a, b);
  }
  return out;
}

template <class F>
DenseMatrix<F> SpechtQuotient<F>::h_matrix(int m, const Composition& eta) const {
  DenseMatrix<F> h(*f_, dim(), dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    Row r = project(ambient_.apply_h(ambient_.unit(free_[a]), m, eta));
    for (std::size_t b = 0; b < dim(); ++b) h.at(a, b) = std::move(r[b]);
  }
  return h;
}

template <class F>
std::uint64_t SpechtQuotient<F>::fiber_size(const TypedTableau& S) {
  std::uint64_t total = 1;
  for (int i = 1; i <= S.values(); ++i) {
    std::vector<int> c;
    for (int j = 1; j <= S.rows(); ++j) c.push_back(S.c(j, i));
    total *= multinomial(c);
  }
  return total;
}

template <class F>
typename SpechtQuotient<F>::Row SpechtQuotient<F>::theta_image(const TypedTableau& S) const {
  if (!(S.shape() == lambda_)) throw std::invalid_argument("theta_image: shape of S differs from lambda");
  if (!S.is_valid()) throw std::invalid_argument("theta_image: S is not a valid tableau of its shape and type");
  const int a = S.rows(), b = S.values();
  // Row labels for each block of letters.
  std::vector<std::vector<std::vector<std::uint8_t>>> blocks;
  for (int i = 1; i <= b; ++i) {
    std::vector<int> c;
    for (int j = 1; j <= a; ++j) c.push_back(S.c(j, i));
    blocks.push_back(arrangements(c));
  }
  Vec sum;
  const F& f = *f_;
  RowWord w;
  std::vector<std::size_t> pos(blocks.size(), 0);
  for (;;) {
    w.clear();
    for (std::size_t i = 0; i < blocks.size(); ++i) w.insert(w.end(), blocks[i][pos[i]].begin(), blocks[i][pos[i]].end());
    accum(f, sum, ambient_.index(w), f.one());
    std::size_t i = 0;
    while (i < blocks.size() && ++pos[i] == blocks[i].size()) pos[i++] = 0;
    if (i == blocks.size()) break;
  }
  return project(sum);
}

template <class F>
typename SpechtQuotient<F>::Row SpechtQuotient<F>::evaluate(const HomCombination& c) const {
  const F& f = *f_;
  Row out(dim(), f.zero());
  for (const auto& [S, x] : c.terms()) {
    const Elem cx = f.from_poly(x);
    Row r = theta_image(S);
    for (std::size_t k = 0; k < dim(); ++k)
      if (!f.is_zero(r[k])) f.add_mul(out[k], cx, r[k]);
  }
  return out;
}

template <class F>
OracleHom hom_oracle(const SpechtQuotient<F>& sq, const Partition& mu) {
  const F& f = sq.field();
  const Partition& lambda = sq.lambda();
  if (mu.n() != lambda.n()) throw std::invalid_argument("hom_oracle: partitions of different n");
  const std::size_t k = sq.dim();
  std::vector<DenseMatrix<F>> blocks;
  int letter = 0;
  for (int j = 1; j <= mu.length(); ++j) {
    for (int i = letter + 1; i < letter + mu(j); ++i) {
      DenseMatrix<F> g = sq.generator(i);
      for (std::size_t x = 0; x < k; ++x) g.at(x, x) = f.sub(g.at(x, x), f.q_pow(1));
      blocks.push_back(std::move(g));
    }
    letter += mu(j);
  }
  for (int d = 1; d < mu.length(); ++d)
    for (int t = 1; t <= mu(d + 1); ++t) blocks.push_back(sq.h_matrix(mu.partial(d - 1), Composition({mu(d), t})));

  DenseMatrix<F> B(f, k, k * blocks.size());
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) B.at(x, bi * k + y) = blocks[bi].at(x, y);

  OracleHom res;
  res.hom_dim = static_cast<int>(k - rank(f, B));

  const auto ss = semistandard_tableaux(lambda, mu);
  if (ss.empty()) return res;
  DenseMatrix<F> theta(f, ss.size(), k);
  for (std::size_t s = 0; s < ss.size(); ++s) {
    auto r = sq.theta_image(ss[s]);
    for (std::size_t y = 0; y < k; ++y) theta.at(s, y) = std::move(r[y]);
  }
  const std::size_t rt = rank(f, theta);
  res.ehom_dim = static_cast<int>(rt - rank(f, multiply(f, theta, B)));
  return res;
}

template <class F>
const SpechtQuotient<F>& cached_quotient(const F& f, const Partition& lambda) {
  // Each entry owns its field so the quotient never points at a caller's temporary.
  struct Entry {
    std::unique_ptr<F> field;
    std::unique_ptr<SpechtQuotient<F>> quotient;
  };
  static std::mutex mtx;
  static std::map<std::pair<FieldConfig, Partition>, Entry> cache;
  const auto key = std::make_pair(f.config(), lambda);
  {
    std::lock_guard lock(mtx);
    if (auto it = cache.find(key); it != cache.end()) return *it->second.quotient;
  }
  auto owned = std::make_unique<F>(f);
  auto sq = std::make_unique<SpechtQuotient<F>>(*owned, lambda);
  std::lock_guard lock(mtx);
  auto [it, inserted] = cache.try_emplace(key, Entry{std::move(owned), std::move(sq)});
  return *it->second.quotient;
}

OracleHom hom_oracle(const Partition& mu, const Partition& lambda, const FieldConfig& f) {
  f.validate();
  return with_field(f, [&](const auto& fld) { return hom_oracle(cached_quotient(fld, lambda), mu); });
}

std::size_t specht_dim(const Partition& lambda, const FieldConfig& f) {
  f.validate();
  return with_field(f, [&](const auto& fld) { return cached_quotient(fld, lambda).dim(); });
}

template class PermModule<CyclotomicField>;
template class PermModule<GaloisField>;
template class SpechtQuotient<CyclotomicField>;
template class SpechtQuotient<GaloisField>;
template OracleHom hom_oracle(const SpechtQuotient<CyclotomicField>&, const Partition&);
template OracleHom hom_oracle(const SpechtQuotient<GaloisField>&, const Partition&);
template const SpechtQuotient<CyclotomicField>& cached_quotient(const CyclotomicField&, const Partition&);
template const SpechtQuotient<GaloisField>& cached_quotient(const GaloisField&, const Partition&);

}  // namespace specht
