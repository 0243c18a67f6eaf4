#pragma once

// Exhaustive and sampled verification suites over S_n. Work is spread over
// a fixed number of threads; results are merged in input order so reports
// do not depend on scheduling.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

struct SweepOptions {
  int jobs = 0;                           // 0: SCHUBERT_JOBS or hardware threads
  std::optional<int> samples;             // sampled suites; default per suite
  std::uint64_t seed = 20240607;
  std::optional<bool> include_polytopes;  // default: n <= 5
  std::size_t max_counterexamples = 5;
};

struct Counterexample {
  std::string subject;  // e.g. "3412" or "[e,3412]"
  std::string detail;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  long long checked = 0;
  long long passed = 0;
  long long failed = 0;
  std::vector<Counterexample> counterexamples;  // lexicographically least first
  std::map<std::string, std::string> summary;

  bool ok() const { return failed == 0; }
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or n outside 2..7.
SuiteReport sweep(int n, const std::string& suite, const SweepOptions& options = {});

/// Resolved worker count for the options.
int resolve_jobs(const SweepOptions& options);

}  // namespace schubert
