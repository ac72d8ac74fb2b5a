#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "macdonald/scalars.hpp"
#include "macdonald/serialize.hpp"

namespace macdonald {

/// Which coefficient family a check runs over.
enum class CheckVariant { QT, R, Both };

struct CheckInfo {
  std::string id;
  std::string statement;
  std::string source;
  CheckVariant variant;
};

/// The full catalog in its stable listing order.
const std::vector<CheckInfo>& catalog();
/// Entries whose id contains `needle`.
std::vector<CheckInfo> filter_catalog(std::string_view needle);
bool is_check_id(std::string_view id);

/// Run parameters shared by every check.
///
/// Without overrides, (q,t) checks run at q = 2, t = 3 and Jack checks over
/// symbolic Q(r). `symbolic` keeps every generator symbolic; `values` fixes
/// individual generators (q, t, r or a).
struct CheckOptions {
  std::size_t n = 2;
  int degree = 3;
  bool symbolic = false;
  Assignment values;
  std::uint64_t seed = 1;
};

struct CheckFailure {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string id;
  std::size_t n = 0;
  int degree = 0;
  std::vector<std::string> fields;
  std::uint64_t seed = 0;
  /// How identities in a were certified: "none", "symbolic", "fixed" or
  /// "sampled(k = degree bound + 2)".
  std::string certification = "none";
  std::size_t instances = 0;
  std::vector<CheckFailure> failures;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// Evaluates one catalog identity for every instance in range. Throws
/// UsageError for an unknown id and lets SpecializationCollision through.
CheckReport run_check(std::string_view id, const CheckOptions& options);

/// Runs the given checks on up to `jobs` threads; reports come back in the
/// order of `ids`.
std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckOptions& options,
                                    std::size_t jobs);

/// {"id", "config", "instances", "passed", "failures"} plus "elapsed_ms" when
/// `timing` is set.
Json report_to_json(const CheckReport& report, bool timing);
Json catalog_to_json(const std::vector<CheckInfo>& entries);

}  // namespace macdonald
