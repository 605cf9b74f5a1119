#include "specht/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "specht/classifier.hpp"
#include "specht/field.hpp"
#include "specht/homspace.hpp"
#include "specht/oracle.hpp"
#include "specht/verify.hpp"

namespace specht {

Json laurent_to_json(const LaurentPoly& x) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms()) {
    if (c.fits_slong_p())
      out.push_back({k, c.get_si()});
    else
      out.push_back({k, c.get_str()});
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("laurent term must be [exponent, coefficient]");
    const auto& c = t[1];
    terms.emplace_back(t[0].get<int>(), c.is_string() ? mpz_class(c.get<std::string>()) : mpz_class(c.get<long>()));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const RunReport& r) {
  Json j;
  j["schema"] = 1;
  j["lambda"] = r.lambda.parts();
  j["mu"] = r.mu.parts();
  j["e"] = r.e;
  j["p"] = r.p;
  j["method"] = r.method;
  j["dim"] = r.dim;
  if (r.hom) j["hom"] = *r.hom;
  if (r.matrix_shape) j["matrix_shape"] = {r.matrix_shape->first, r.matrix_shape->second};
  if (r.columns) j["columns"] = *r.columns;
  if (r.kernel) {
    Json k = Json::array();
    for (const auto& v : *r.kernel) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(laurent_to_json(x));
      k.push_back(std::move(row));
    }
    j["kernel"] = std::move(k);
  }
  j["ms"] = r.ms;
  return j;
}

RunReport run_report_from_json(const Json& j) {
  if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported schema version");
  RunReport r;
  r.lambda = Partition(j.at("lambda").get<std::vector<int>>());
  r.mu = Partition(j.at("mu").get<std::vector<int>>());
  r.e = j.at("e").get<int>();
  r.p = j.at("p").get<int>();
  r.method = j.at("method").get<std::string>();
  r.dim = j.at("dim").get<int>();
  if (j.contains("hom")) r.hom = j["hom"].get<int>();
  if (j.contains("matrix_shape")) {
    const auto& s = j["matrix_shape"];
    r.matrix_shape = {s.at(0).get<std::size_t>(), s.at(1).get<std::size_t>()};
  }
  if (j.contains("columns")) r.columns = j["columns"].get<std::vector<std::string>>();
  if (j.contains("kernel")) {
    std::vector<std::vector<LaurentPoly>> k;
    for (const auto& row : j["kernel"]) {
      std::vector<LaurentPoly> v;
      for (const auto& x : row) v.push_back(laurent_from_json(x));
      k.push_back(std::move(v));
    }
    r.kernel = std::move(k);
  }
  r.ms = j.at("ms").get<long>();
  return r;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["consistent"] = r.consistent();
  if (r.first_instance) {
    Json f;
    f["instance"] = *r.first_instance;
    Json res = Json::object();
    for (const auto& [k, v] : r.first_results) res[k] = v;
    f["results"] = std::move(res);
    f["detail"] = r.first_detail;
    j["first_failure"] = std::move(f);
  }
  j["ms"] = r.ms;
  return j;
}

VerifyReport verify_report_from_json(const Json& j) {
  if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported schema version");
  VerifyReport r;
  r.suite = j.at("suite").get<std::string>();
  r.checks = j.at("checks").get<long>();
  r.failures = j.at("failures").get<long>();
  if (j.contains("first_failure")) {
    const auto& f = j["first_failure"];
    r.first_instance = f.at("instance").get<std::string>();
    for (const auto& [k, v] : f.at("results").items()) r.first_results[k] = v.get<long>();
    r.first_detail = f.at("detail").get<std::string>();
  }
  r.ms = j.at("ms").get<long>();
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(x);
  }
  return out;
}

std::string bracketed(const Partition& p) { return "(" + p.to_string() + ")"; }

RunReport compute(const Partition& lambda, const Partition& mu, const FieldConfig& f, const std::string& method,
                  bool want_kernel) {
  const auto start = Clock::now();
  RunReport r;
  r.lambda = lambda;
  r.mu = mu;
  r.e = f.e;
  r.p = f.p;
  r.method = method;
  if (lambda.n() != mu.n()) throw std::invalid_argument("lambda and mu must be partitions of the same n");
  if (want_kernel && method != "algorithm") throw std::invalid_argument("--kernel requires --method algorithm");
  if (method == "algorithm") {
    HomResult h = hom_dim(lambda, mu, f, want_kernel);
    r.dim = h.dim;
    r.matrix_shape = std::pair{h.rows, h.cols};
    if (want_kernel) {
      std::vector<std::string> cols;
      for (const auto& t : h.columns) cols.push_back(t.to_string());
      r.columns = std::move(cols);
      r.kernel = h.kernel.value_or(std::vector<std::vector<LaurentPoly>>{});
    }
  } else if (method == "classifier") {
    if (f.p != 0) throw NotApplicable("the classifier covers characteristic 0 only");
    if (!classifier_applies(lambda, mu))
      throw NotApplicable("the classifier needs l(lambda) <= 2 and mu_1 >= lambda_2");
    r.dim = classify(lambda, mu, f.e);
  } else if (method == "oracle") {
    const OracleHom o = hom_oracle(mu, lambda, f);
    r.dim = o.ehom_dim;
    r.hom = o.hom_dim;
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  r.ms = elapsed_ms(start);
  return r;
}

void print_text(const RunReport& r, std::ostream& out) {
  out << r.dim << '\n';
  if (r.hom) out << "hom " << *r.hom << '\n';
  if (!r.kernel) return;
  out << "columns";
  for (const auto& c : *r.columns) out << ' ' << c;
  out << '\n';
  for (std::size_t i = 0; i < r.kernel->size(); ++i) {
    out << "kernel " << i + 1 << ':';
    const auto& v = (*r.kernel)[i];
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " | " : " ") << v[k].to_string();
    out << '\n';
  }
}

int cmd_dim(const std::string& lambda_s, const std::string& mu_s, const FieldConfig& f, const std::string& method,
            bool kernel, bool json, std::ostream& out) {
  const Partition lambda = Partition::parse(lambda_s);
  const Partition mu = Partition::parse(mu_s);
  f.validate();
  const RunReport r = compute(lambda, mu, f, method, kernel);
  if (json)
    out << to_json(r).dump() << '\n';
  else
    print_text(r, out);
  return exit_code::ok;
}

int cmd_scan(int n, const FieldConfig& f, bool two_row, bool json, bool csv, std::ostream& out) {
  if (n < 1) throw std::invalid_argument("--n must be positive");
  f.validate();
  const auto parts = partitions(n);
  std::vector<std::pair<Partition, Partition>> work;
  for (const auto& lambda : parts) {
    if (two_row && lambda.length() > 2) continue;
    for (const auto& mu : parts)
      if (!dominates(lambda, mu) || algorithm_applicable(lambda, mu)) work.emplace_back(lambda, mu);
  }
  std::vector<RunReport> records(work.size());
  // Exceptions cannot leave an OpenMP region, so failures are collected and rethrown.
  std::vector<std::exception_ptr> errors(work.size());
  const auto count = static_cast<long>(work.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      records[static_cast<std::size_t>(i)] =
          compute(work[static_cast<std::size_t>(i)].first, work[static_cast<std::size_t>(i)].second, f, "algorithm", false);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (csv) out << "lambda,mu,e,p,method,dim\n";
  for (const auto& r : records) {
    if (json)
      out << to_json(r).dump() << '\n';
    else if (csv)
      out << '"' << r.lambda.to_string() << "\",\"" << r.mu.to_string() << "\"," << r.e << ',' << r.p << ',' << r.method
          << ',' << r.dim << '\n';
    else
      out << bracketed(r.lambda) << ' ' << bracketed(r.mu) << ' ' << r.dim << '\n';
  }
  return exit_code::ok;
}

VerifyReport to_report(const SuiteResult& s) {
  VerifyReport r;
  r.suite = s.name;
  r.checks = s.checks;
  r.failures = s.failures;
  if (s.first_failure) {
    r.first_instance = s.first_failure->instance;
    r.first_results = s.first_failure->results;
    r.first_detail = s.first_failure->detail;
  }
  r.ms = static_cast<long>(s.seconds * 1000);
  return r;
}

int cmd_verify(const VerifyOptions& opts, const std::string& suite, bool json, std::ostream& out) {
  if (opts.n < 1) throw std::invalid_argument("--n must be positive");
  if (supported_fields(opts.e_list, opts.p_list).empty())
    throw std::invalid_argument("no supported field in --e-list x --p-list");
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {suite};
  int code = exit_code::ok;
  for (const auto& name : names) {
    const VerifyReport r = to_report(run_suite(name, opts));
    if (!r.consistent()) code = exit_code::verify_failed;
    if (json) {
      out << to_json(r).dump() << '\n';
      continue;
    }
    out << r.suite << ": " << (r.checks - r.failures) << '/' << r.checks << " passed (" << r.ms << " ms)\n";
    if (r.first_instance) {
      out << "  first failure: " << *r.first_instance;
      for (const auto& [k, v] : r.first_results) out << ' ' << k << '=' << v;
      if (!r.first_detail.empty()) out << " [" << r.first_detail << ']';
      out << '\n';
    }
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homomorphisms between Specht modules of Hecke algebras of type A", "specht-hom"};
  app.require_subcommand(1);

  std::string lambda_s, mu_s, method = "algorithm";
  FieldConfig field;
  bool kernel = false, json = false, csv = false, two_row = false;

  auto* dim = app.add_subcommand("dim", "dim EHom(S^mu, S^lambda) for one pair");
  dim->add_option("--lambda", lambda_s, "Target partition, e.g. 5,2")->required();
  dim->add_option("--mu", mu_s, "Source partition, e.g. 3,2,2")->required();
  dim->add_option("--e", field.e, "Quantum characteristic")->required();
  dim->add_option("--p", field.p, "Characteristic of the field (0 for the cyclotomic field)");
  dim->add_option("--method", method, "algorithm, classifier or oracle")
      ->check(CLI::IsMember({"algorithm", "classifier", "oracle"}));
  dim->add_flag("--kernel", kernel, "Also print a kernel basis (algorithm only)");
  dim->add_flag("--json", json, "Emit one JSON record");

  int scan_n = 0;
  auto* scan = app.add_subcommand("scan", "All pairs of partitions of n");
  scan->add_option("--n", scan_n, "Size of the partitions")->required();
  scan->add_option("--e", field.e, "Quantum characteristic")->required();
  scan->add_option("--p", field.p, "Characteristic of the field");
  scan->add_flag("--two-row", two_row, "Only lambda with at most two rows");
  auto* scan_json = scan->add_flag("--json", json, "One JSON record per line");
  scan->add_flag("--csv", csv, "CSV with a header row")->excludes(scan_json);

  VerifyOptions vopts;
  std::string e_list = "2,3,4,5", p_list = "0", suite = "all";
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--n", vopts.n, "Largest n for the sweeps")->capture_default_str();
  verify->add_option("--e-list", e_list, "Comma-separated e values")->capture_default_str();
  verify->add_option("--p-list", p_list, "Comma-separated characteristics")->capture_default_str();
  verify->add_option("--classifier-n", vopts.classifier_n, "Largest n for the classifier sweep")->capture_default_str();
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(choices))->capture_default_str();
  verify->add_flag("--json", json, "One JSON record per suite");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (*dim) return cmd_dim(lambda_s, mu_s, field, method, kernel, json, out);
    if (*scan) return cmd_scan(scan_n, field, two_row, json, csv, out);
    vopts.e_list = parse_int_list(e_list);
    vopts.p_list = parse_int_list(p_list);
    return cmd_verify(vopts, suite, json, out);
  } catch (const NotApplicable& e) {
    err << "not applicable: " << e.what() << '\n';
    return exit_code::not_applicable;
  } catch (const SizeGuardExceeded& e) {
    err << "size guard: " << e.what() << '\n';
    return exit_code::size_guard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

}  // namespace specht
