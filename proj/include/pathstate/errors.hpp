#pragma once

#include <stdexcept>
#include <string>

namespace pathstate {

/// Malformed input: bad config values, schema violations, argument misuse.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Required data is missing: datasets that do not cover the configured quads,
/// settings absent from a tomography job, stabilizer supports without data.
struct CoverageError : std::runtime_error {
  explicit CoverageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numeric contract was violated: non-Hermitian input to the eigensolver,
/// unreachable projection branch, non-physical state where one is required.
struct NumericContractError : std::runtime_error {
  explicit NumericContractError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pathstate
