#include "specht/gauss.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace specht {

LaurentPoly quantum_int(int m) {
  if (m < 0) throw std::invalid_argument("quantum_int: negative argument");
  std::vector<LaurentPoly::Term> t;
  t.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) t.emplace_back(i, 1);
  return LaurentPoly::from_terms(std::move(t));
}

namespace {

template <class Key>
class Memo {
 public:
  template <class F>
  const LaurentPoly& get(const Key& k, F&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = cache_.find(k);
      if (it != cache_.end()) return it->second;
    }
    LaurentPoly v = compute();
    std::unique_lock lock(mu_);
    return cache_.try_emplace(k, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, LaurentPoly> cache_;
};

// 1 - q^j
LaurentPoly one_minus_q(int j) { return LaurentPoly(1) - LaurentPoly::monomial(j); }

}  // namespace

const LaurentPoly& gauss_binomial(int m, int k) {
  static const LaurentPoly zero;
  static const LaurentPoly one(1);
  if (!(m >= k && k >= 0)) return zero;
  if (k == 0 || k == m) return one;
  if (2 * k > m) return gauss_binomial(m, m - k);
  static Memo<std::pair<int, int>> memo;
  return memo.get({m, k}, [m, k] {
    // G_i = G_{i-1} (1 - q^{m-k+i}) / (1 - q^i); each G_i equals [m-k+i choose i].
    LaurentPoly g(1);
    for (int i = 1; i <= k; ++i)
      g = LaurentPoly::divide_exact(g * one_minus_q(m - k + i), one_minus_q(i));
    return g;
  });
}

const LaurentPoly& cyclotomic_poly(int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic_poly: e must be >= 1");
  static Memo<int> memo;
  return memo.get(e, [e] {
    LaurentPoly p = LaurentPoly::monomial(e) - LaurentPoly(1);
    for (int d = 1; d < e; ++d)
      if (e % d == 0) p = LaurentPoly::divide_exact(p, cyclotomic_poly(d));
    return p;
  });
}

int residue(long m, int e) {
  if (e <= 0) throw std::invalid_argument("residue: modulus must be positive");
  long r = m % e;
  return static_cast<int>(r < 0 ? r + e : r);
}

}  // namespace specht
