#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcsrate/scoring.hpp"

namespace lcsrate {

struct CheckResult {
    std::string group;
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;
};

struct VerifyOptions {
    /// Restrict to one group: scoring, montecarlo, bounds or partition.
    std::optional<std::string> only;
    /// Scorer under test; every check compares it against independent routes.
    ScoreFunction score = optimal_scorer();
    std::uint64_t seed = 20240607;
};

const std::vector<std::string>& verify_groups();

/// Runs the guarded exhaustive and randomized checks. Throws InputError for
/// an unknown group.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace lcsrate
