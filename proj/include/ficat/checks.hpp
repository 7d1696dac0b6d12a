#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ficat {

struct ChecksOptions {
  // "quick" runs reduced sizes; "full" runs every criterion at its stated sizes.
  std::string profile = "full";
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string error;  // set when the run threw
  nlohmann::json detail;
  // Without timing the record is byte-identical across runs.
  nlohmann::json to_json(bool timing = false) const;
};

// Throws PreconditionError for an unknown profile or criterion id.
ChecksOptions validate_checks_options(const ChecksOptions& opts);
CriterionResult run_criterion(int id, const ChecksOptions& opts);
std::vector<CriterionResult> run_checks(const ChecksOptions& opts, const std::vector<int>& ids = {});

// Independent oracles, exposed for reuse by tests.
// Homology over Q of the complex of injective words on n letters, degrees 0..n.
std::vector<std::size_t> injective_words_homology(int n);
// Homology over Q of the augmented chain complex of the simplex on n vertices,
// indexed by subset size 0..n.
std::vector<std::size_t> simplex_homology(int n);

}  // namespace ficat
