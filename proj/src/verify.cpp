#include "specht/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "specht/classifier.hpp"
#include "specht/gauss.hpp"
#include "specht/homspace.hpp"
#include "specht/oracle.hpp"
#include "specht/rewrite.hpp"

namespace specht {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { res_.name = std::move(name); }

  void check(bool ok, const std::function<CheckFailure()>& describe) {
    ++res_.checks;
    if (ok) return;
    ++res_.failures;
    if (!res_.first_failure) res_.first_failure = describe();
  }

  SuiteResult finish() {
    res_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(res_);
  }

 private:
  SuiteResult res_;
  std::chrono::steady_clock::time_point start_;
};

CheckFailure failure(std::string instance, std::map<std::string, long> results = {}, std::string detail = {}) {
  return {std::move(instance), std::move(results), std::move(detail)};
}

std::string pair_label(const Partition& lambda, const Partition& mu, const FieldConfig& f) {
  return "lambda=(" + lambda.to_string() + ") mu=(" + mu.to_string() + ") " + f.to_string();
}

long binom2(long m) { return m * (m - 1) / 2; }

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : partitions(k)) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<FieldConfig> supported_fields(const std::vector<int>& e_list, const std::vector<int>& p_list) {
  std::vector<FieldConfig> out;
  for (int p : p_list)
    for (int e : e_list) {
      FieldConfig f{e, p};
      try {
        f.validate();
      } catch (const std::invalid_argument&) {
        continue;
      }
      out.push_back(f);
    }
  return out;
}

SuiteResult verify_identities(const VerifyOptions&) {
  Recorder rec("identities");
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= 12; ++m) {
      const auto& lhs = gauss_binomial(n + 1, m);
      rec.check(lhs == gauss_binomial(n, m - 1) + LaurentPoly::monomial(m) * gauss_binomial(n, m), [&] {
        return failure("pascal-1 n=" + std::to_string(n) + " m=" + std::to_string(m));
      });
      rec.check(lhs == gauss_binomial(n, m) + LaurentPoly::monomial(n - m + 1) * gauss_binomial(n, m - 1), [&] {
        return failure("pascal-2 n=" + std::to_string(n) + " m=" + std::to_string(m));
      });
    }
  for (int n = 0; n <= 10; ++n)
    for (int m = n; m <= 10; ++m)
      for (int k = n; k <= 10; ++k) {
        LaurentPoly sum;
        for (int g = 0; g <= n; ++g) {
          LaurentPoly term = gauss_binomial(n, g) * gauss_binomial(m - g, k);
          if (g % 2) term = -term;
          sum += term.shifted(static_cast<int>(binom2(g)));
        }
        rec.check(sum == gauss_binomial(m - n, k - n).shifted(n * (m - k)), [&] {
          return failure("alternating-sum n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k));
        });
      }
  for (int m = 0; m <= 10; ++m)
    for (int j = 0; j <= m; ++j)
      for (int n = 0; n <= 10; ++n) {
        LaurentPoly sum;
        for (int g = 0; g <= std::min(n, j); ++g)
          sum += (gauss_binomial(n, g) * gauss_binomial(m, j - g)).shifted(g * (m - j + g));
        rec.check(sum == gauss_binomial(m + n, j), [&] {
          return failure("vandermonde m=" + std::to_string(m) + " j=" + std::to_string(j) + " n=" + std::to_string(n));
        });
      }
  for (int e = 2; e <= 7; ++e)
    for (int m = 0; m <= 20; ++m)
      for (int k = 0; k <= m; ++k) {
        const FieldConfig f{e, 0};
        const bool fast = vanishes_at(m, k, f);
        const bool slow = specialize(gauss_binomial(m, k), f).is_zero();
        rec.check(fast == slow, [&] {
          return failure("vanishing m=" + std::to_string(m) + " k=" + std::to_string(k) + " e=" + std::to_string(e),
                         {{"residue_rule", fast}, {"specialized", slow}});
        });
      }
  for (int e = 2; e <= 12; ++e) {
    const FieldConfig f{e, 0};
    LaurentPoly s = LaurentPoly::monomial(static_cast<int>(binom2(e)), (e % 2) ? -1 : 1);
    rec.check(specialize(s, f) == specialize(LaurentPoly(-1), f),
              [&] { return failure("sign e=" + std::to_string(e)); });
    rec.check(specialize(quantum_int(e), f).is_zero() && !specialize(quantum_int(e - 1), f).is_zero(),
              [&] { return failure("quantum characteristic e=" + std::to_string(e)); });
  }
  return rec.finish();
}

SuiteResult verify_specht_dim(const VerifyOptions& opts) {
  Recorder rec("specht-dim");
  for (const auto& f : supported_fields(opts.e_list, opts.p_list))
    for (const auto& lambda : partitions_up_to(opts.n)) {
      long got = -1;
      std::string detail;
      try {
        got = static_cast<long>(specht_dim(lambda, f));
      } catch (const std::logic_error& ex) {
        detail = ex.what();
      }
      const long want = static_cast<long>(hook_length_count(lambda));
      rec.check(got == want, [&] {
        return failure("lambda=(" + lambda.to_string() + ") " + f.to_string(), {{"oracle", got}, {"standard_tableaux", want}},
                       detail);
      });
    }
  return rec.finish();
}

namespace {

template <class F>
void lemma7_for_field(const F& fld, int n, Recorder& rec) {
  using Row = typename SpechtQuotient<F>::Row;
  for (const auto& lambda : partitions_up_to(n)) {
    const auto& sq = cached_quotient(fld, lambda);
    for (const auto& nu : compositions(lambda.n())) {
      std::unordered_map<TypedTableau, Row, TypedTableauHash> cache;
      auto theta = [&](const TypedTableau& s) -> const Row& {
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, sq.theta_image(s)).first;
        return it->second;
      };
      auto eval = [&](const HomCombination& c) {
        Row out(sq.dim(), fld.zero());
        for (const auto& [s, x] : c.terms()) {
          const auto cx = fld.from_poly(x);
          const Row& r = theta(s);
          for (std::size_t k = 0; k < out.size(); ++k)
            if (!fld.is_zero(r[k])) fld.add_mul(out[k], cx, r[k]);
        }
        return out;
      };
      for (const auto& S : row_standard_tableaux(lambda, nu)) {
        const Row& lhs = theta(S);
        for (int r = 1; r < lambda.length(); ++r)
          for (int d = 1; d <= nu.length(); ++d) {
            for (bool up : {false, true}) {
              if (up && lambda(r) != lambda(r + 1)) continue;
              const HomCombination c = up ? lemma7_up(S, r, d) : lemma7_down(S, r, d);
              const Row rhs = eval(c);
              bool same = true;
              for (std::size_t k = 0; k < rhs.size() && same; ++k) same = fld.eq(lhs[k], rhs[k]);
              rec.check(same, [&] {
                return failure(std::string(up ? "up" : "down") + " S=" + S.to_string() + " type=(" + nu.to_string() +
                                   ") r=" + std::to_string(r) + " d=" + std::to_string(d) + " " + fld.config().to_string(),
                               {}, "rewritten: " + c.to_string());
              });
            }
          }
      }
    }
  }
}

}  // namespace

SuiteResult verify_lemma7(const VerifyOptions& opts) {
  Recorder rec("lemma7");
  for (const auto& f : supported_fields(opts.e_list, opts.p_list))
    with_field(f, [&](const auto& fld) { lemma7_for_field(fld, opts.n, rec); });
  return rec.finish();
}

SuiteResult verify_agreement(const VerifyOptions& opts) {
  Recorder rec("agreement");
  for (const auto& f : supported_fields(opts.e_list, opts.p_list))
    for (int n = 1; n <= opts.n; ++n) {
      const auto parts = partitions(n);
      for (const auto& lambda : parts)
        for (const auto& mu : parts) {
          if (!algorithm_applicable(lambda, mu)) continue;
          const long alg = hom_dim(lambda, mu, f).dim;
          const OracleHom o = hom_oracle(mu, lambda, f);
          std::map<std::string, long> res{{"algorithm", alg}, {"oracle_ehom", o.ehom_dim}, {"oracle_hom", o.hom_dim}};
          bool ok = alg == o.ehom_dim;
          if (f.e != 2 || lambda.is_restricted(2)) ok = ok && alg == o.hom_dim;
          if (f.p == 0 && classifier_applies(lambda, mu)) {
            const long c = classify(lambda, mu, f.e);
            res["classifier"] = c;
            ok = ok && c == alg;
          }
          rec.check(ok, [&] { return failure(pair_label(lambda, mu, f), res); });
        }
    }
  return rec.finish();
}

SuiteResult verify_classifier(const VerifyOptions& opts) {
  Recorder rec("classifier");
  for (int n = 1; n <= opts.classifier_n; ++n) {
    const auto parts = partitions(n);
    for (const auto& lambda : parts) {
      if (lambda.length() > 2) continue;
      for (const auto& mu : parts) {
        if (mu(1) < lambda(2) || mu(1) > lambda(1)) continue;
        for (int e = 2; e <= 7; ++e) {
          const FieldConfig f{e, 0};
          const Classification c = classify_detailed(lambda, mu, e);
          const long alg = hom_dim(lambda, mu, f).dim;
          rec.check(c.dim == alg && alg <= 1, [&] {
            return failure(pair_label(lambda, mu, f), {{"classifier", c.dim}, {"algorithm", alg}},
                           "branch " + to_string(c.branch));
          });
        }
      }
    }
  }
  return rec.finish();
}

SuiteResult verify_charp(const VerifyOptions& opts) {
  Recorder rec("charp");
  std::vector<int> pos;
  for (int p : opts.p_list)
    if (p > 0) pos.push_back(p);
  if (pos.empty()) pos = {2, 3, 5};
  for (int n = 1; n <= opts.n; ++n) {
    const auto parts = partitions(n);
    for (const auto& lambda : parts)
      for (const auto& mu : parts) {
        if (lambda == mu || !algorithm_applicable(lambda, mu) || !dominates(lambda, mu)) continue;
        const HomMatrix m = build_matrix(lambda, mu);
        for (int e : opts.e_list) {
          const long zero = corank(m, {e, 0}).dim;
          for (const auto& f : supported_fields({e}, pos)) {
            const long charp = corank(m, f).dim;
            rec.check(charp >= zero, [&] {
              return failure(pair_label(lambda, mu, f), {{"char_p", charp}, {"char_0", zero}});
            });
          }
        }
      }
  }
  return rec.finish();
}

SuiteResult verify_counterexample(const VerifyOptions&) {
  Recorder rec("counterexample");
  const Partition lambda({2, 2, 1});
  const Composition nu({1, 1, 1, 1, 1});
  const FieldConfig f{3, 0};
  with_field(f, [&](const auto& fld) {
    const auto& sq = cached_quotient(fld, lambda);
    using Fld = std::decay_t<decltype(fld)>;
    auto matrix = [&](const std::vector<std::string>& ts) {
      DenseMatrix<Fld> m(fld, ts.size(), sq.dim());
      for (std::size_t i = 0; i < ts.size(); ++i) {
        auto r = sq.theta_image(TypedTableau::parse(ts[i], nu));
        for (std::size_t k = 0; k < sq.dim(); ++k) m.at(i, k) = r[k];
      }
      return m;
    };
    const long pair = static_cast<long>(rank(fld, matrix({"14/35/2", "24/35/1"})));
    const long all = static_cast<long>(rank(fld, matrix({"12/35/4", "14/35/2", "24/35/1"})));
    rec.check(all == pair + 1, [&] {
      return failure("lambda=(2,2,1) type=(1,1,1,1,1) " + f.to_string(), {{"rank_pair", pair}, {"rank_with_target", all}});
    });
  });
  return rec.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "specht-dim", "lemma7",        "agreement",
                                              "classifier", "charp",      "counterexample"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "identities") return verify_identities(opts);
  if (name == "specht-dim") return verify_specht_dim(opts);
  if (name == "lemma7") return verify_lemma7(opts);
  if (name == "agreement") return verify_agreement(opts);
  if (name == "classifier") return verify_classifier(opts);
  if (name == "charp") return verify_charp(opts);
  if (name == "counterexample") return verify_counterexample(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace specht
