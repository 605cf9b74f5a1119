#pragma once

// Command-line front end. run_cli is kept in the library so tests can drive it
// with in-memory streams.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specht/laurent_poly.hpp"
#include "specht/tableaux.hpp"

namespace specht {

/// Ordered so that emitted keys follow the documented schema.
using Json = nlohmann::ordered_json;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int not_applicable = 2;
inline constexpr int size_guard = 3;
inline constexpr int verify_failed = 4;
}  // namespace exit_code

/// One `dim` or `scan` result.
struct RunReport {
  Partition lambda;
  Partition mu;
  int e = 2;
  int p = 0;
  std::string method = "algorithm";
  int dim = 0;
  std::optional<std::pair<std::size_t, std::size_t>> matrix_shape;
  /// Column tableaux in matrix order; present with the kernel.
  std::optional<std::vector<std::string>> columns;
  /// Kernel basis, one integral Laurent representative per coefficient.
  std::optional<std::vector<std::vector<LaurentPoly>>> kernel;
  /// Full Hom dimension, reported by the oracle method.
  std::optional<int> hom;
  long ms = 0;

  bool operator==(const RunReport&) const = default;
};

/// One `verify` suite summary.
struct VerifyReport {
  std::string suite;
  long checks = 0;
  long failures = 0;
  std::optional<std::string> first_instance;
  std::map<std::string, long> first_results;
  std::string first_detail;
  long ms = 0;

  bool consistent() const { return failures == 0; }
  bool operator==(const VerifyReport&) const = default;
};

Json to_json(const RunReport& r);
/// Throws Json::exception or std::invalid_argument on malformed input.
RunReport run_report_from_json(const Json& j);

Json to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const Json& j);

/// Laurent polynomial as [[exponent, coefficient], ...]; coefficients outside
/// the int64 range are written as decimal strings.
Json laurent_to_json(const LaurentPoly& x);
LaurentPoly laurent_from_json(const Json& j);

/// Entry point; args excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specht
