#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ideallab/limits.hpp"
#include "ideallab/simplicial_complex.hpp"

namespace ideallab {

using Json = nlohmann::ordered_json;

struct SuiteOptions {
  /// Number of random instances; <= 0 selects the suite's default.
  int cases = 0;
  std::uint64_t seed = 1;
  FieldSpec field = FieldSpec::rationals();
  /// Largest vertex count for the graph sweeps (cm-vwc, froberg, claw-gap).
  int maxVertices = 8;
  Limits limits = Limits::fromEnvironment();
};

/// Outcome of one verification suite. `checks` counts individual assertions;
/// a case whose hypotheses do not apply is counted in `skipped`.
struct SuiteReport {
  std::string suite;
  std::string statement;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  FieldSpec field = FieldSpec::rationals();
  int cases = 0;
  long checks = 0;
  long failures = 0;
  long skipped = 0;
  Json tallies = Json::object();
  /// The smallest failing instance, when there is one.
  std::optional<Json> counterexample;

  bool passed() const { return failures == 0; }
  Json toJson() const;
};

const std::vector<std::string>& suiteNames();
/// Default instance count of a suite (the acceptance sizes).
int defaultCases(const std::string& suite);

/// Throws InvalidArgument for an unknown suite; CapExceeded propagates.
SuiteReport runSuite(const std::string& suite, const SuiteOptions& options);

}  // namespace ideallab
