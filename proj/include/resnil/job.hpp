#pragma once

#include "resnil/criteria.hpp"
#include "resnil/freegroup.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace resnil {

/// One classification request. Exactly one of `matrices`, `endo` or
/// `example` is set; several matrices describe F_n x| F_m.
struct JobSpec {
  std::vector<IntMatrix> matrices;
  std::optional<FreeEndo> endo;
  std::optional<FreeEndo> inverse;
  std::optional<std::string> example;
  unsigned power = 1;
  unsigned tensor_bound = 0;  ///< 0 selects the rank-dependent default
  std::vector<Int> primes;
  SizeCaps caps;
  bool json = false;

  /// Throws Error(InvalidInput / NotPrime) unless the invariants hold.
  void validate() const;
};

/// What a builtin example is expected to yield; checked by `self_test`.
struct Expectation {
  bool residually_nilpotent = false;
  LcsLength lcs = LcsLength::Unknown;
  std::vector<Int> p_finite;  ///< primes that must carry a positive claim
  bool all_primes = false;

  bool matches(const Verdict& v) const;
};

struct BuiltinExample {
  std::string name;
  std::string description;
  JobSpec job;
  Expectation expected;
};

const std::vector<BuiltinExample>& builtin_examples();
const BuiltinExample* find_example(const std::string& name);

/// Resolves the example (if any) and the power into the input that is classified.
struct ResolvedJob {
  std::vector<IntMatrix> matrices;
  std::optional<FreeEndo> endo;
  std::optional<FreeEndo> inverse;
  std::vector<std::string> description;
};
ResolvedJob resolve(const JobSpec& job);

Verdict classify_job(const JobSpec& job);

/// JSON job input (see README). Throws Error(InvalidInput).
JobSpec job_from_json(const std::string& text);

enum ExitCode : int { ExitOk = 0, ExitInputError = 2, ExitCapExceeded = 3 };

/// Runs one job, writing the report to `out` and diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Classifies every builtin example and compares against its expectation.
int self_test(std::ostream& out);

}  // namespace resnil
