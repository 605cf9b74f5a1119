#pragma once

// Invariant suites shared by `specht-hom verify` and the acceptance binary.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specht/field.hpp"

namespace specht {

struct VerifyOptions {
  int n = 6;
  std::vector<int> e_list{2, 3, 4, 5};
  std::vector<int> p_list{0};
  /// Largest n for the classifier sweep.
  int classifier_n = 12;
};

struct CheckFailure {
  std::string instance;
  /// Result reported by each method, e.g. {"algorithm": 1, "oracle_ehom": 0}.
  std::map<std::string, long> results;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::optional<CheckFailure> first_failure;
  double seconds = 0;
  bool ok() const { return failures == 0; }
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

SuiteResult verify_identities(const VerifyOptions& opts);
SuiteResult verify_specht_dim(const VerifyOptions& opts);
SuiteResult verify_lemma7(const VerifyOptions& opts);
SuiteResult verify_agreement(const VerifyOptions& opts);
SuiteResult verify_classifier(const VerifyOptions& opts);
SuiteResult verify_charp(const VerifyOptions& opts);
SuiteResult verify_counterexample(const VerifyOptions& opts);

/// Field configurations from e_list x p_list that name a supported field.
std::vector<FieldConfig> supported_fields(const std::vector<int>& e_list, const std::vector<int>& p_list);

}  // namespace specht
