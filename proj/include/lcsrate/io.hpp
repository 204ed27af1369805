#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lcsrate/montecarlo.hpp"
#include "lcsrate/scoring.hpp"

namespace lcsrate {

struct SchemeFile {
    std::vector<std::string> symbols;
    ScoringScheme scheme;
};

/// Parses
///
///     alphabet: <symbol> <symbol> ...
///     delta: <real>
///     matrix:
///     <alphabet_size rows of alphabet_size reals>
///
/// Blank lines and lines starting with '#' are ignored. Throws InputError.
SchemeFile parse_scheme(std::istream& in);
SchemeFile load_scheme(const std::filesystem::path& path);

/// Parses `probs: <p0> <p1> ...`.
LetterDistribution parse_distribution(std::istream& in);
LetterDistribution load_distribution(const std::filesystem::path& path);

/// Locale-independent shortest round-trip rendering.
std::string format_real(double v);

/// replicate_index,score rows followed by a mean_per_letter summary row.
void write_estimate_csv(std::ostream& out, const EstimateReport& report);

}  // namespace lcsrate
