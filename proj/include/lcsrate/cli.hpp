#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcsrate/bounds.hpp"
#include "lcsrate/scoring.hpp"

namespace lcsrate::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kConfigError = 2,
    kNumericError = 3,
};

inline constexpr std::string_view kDefaultNGrid = "2:10000:1";
inline constexpr std::string_view kDefaultAGrid = "0.1:2:0.1";

struct RunConfig {
    std::string subcommand;
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::uint64_t seed = 1;
    double epsilon = 0.05;
    std::optional<double> c_mult;
    double alexander_c = kAlexanderC;
    std::optional<std::filesystem::path> scheme_path;
    std::optional<std::filesystem::path> dist_path;
    std::optional<std::filesystem::path> out_path;
    std::string n_grid{kDefaultNGrid};
    std::string a_grid{kDefaultAGrid};
    std::optional<std::string> only;
    /// confidence: use this L̄_n instead of simulating.
    std::optional<double> mean;
    unsigned threads = 0;
};

/// `start:stop:step` (inclusive) or a comma-separated list.
std::vector<std::size_t> parse_size_grid(std::string_view spec);
std::vector<double> parse_real_grid(std::string_view spec);

// Each run_* writes machine output (CSV) to --out or `out`, human-readable
// lines to `log`, and returns an ExitCode.
int run_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_bound(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_confidence(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log,
               const ScoreFunction& score = optimal_scorer());

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace lcsrate::cli
