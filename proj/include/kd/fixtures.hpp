#pragma once

#include <string>
#include <vector>

#include "kd/json_io.hpp"

namespace kd {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail; // populated on failure or for notes
};

/// Location of the bundled fixture file (KD_DATA_DIR set at build time,
/// overridable with the KD_DATA_DIR environment variable).
std::string fixtures_path();

Json load_fixtures(const std::string& path = fixtures_path());

/// Replays every bundled worked example: curve displays, generator membership,
/// phi* images, image subgroups, quotient ranks, class counts, beta tables.
std::vector<CheckResult> run_fixture_checks(const Json& fixtures, int bound = 3);

} // namespace kd
