#pragma once

// Fixture files: JSON records pairing an input with a printed, transcribed or
// oracle-derived expected output.

#include "clustertrop/io.hpp"

#include <string>
#include <vector>

namespace clustertrop {

enum class FixtureStatus {
  Pass,
  /// Differences match exactly the entries listed under "documented".
  Documented,
  Fail,
  /// The file could not be read or evaluated.
  Error
};

std::string to_string(FixtureStatus s);

struct FixtureResult {
  std::string name;
  std::string source;
  FixtureStatus status = FixtureStatus::Error;
  std::vector<std::string> diff;
};

/// Evaluates one fixture record. Never throws; failures land in the result.
FixtureResult run_fixture(const Json& fixture, const std::string& fallback_name = "");

/// Every *.json file under dir in name order. A broken file yields an Error
/// entry and does not affect the others.
std::vector<FixtureResult> run_fixture_dir(const std::string& dir);

Json to_json(const FixtureResult& r);

}  // namespace clustertrop
