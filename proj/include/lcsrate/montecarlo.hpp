#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lcsrate/scoring.hpp"

namespace lcsrate {

/// Common law of the i.i.d. letters of both sequences.
class LetterDistribution {
public:
    explicit LetterDistribution(std::vector<double> probs);

    static LetterDistribution uniform(std::size_t alphabet_size);
    /// All mass on `letter`.
    static LetterDistribution point_mass(std::size_t alphabet_size, Letter letter);

    std::size_t alphabet_size() const noexcept { return probs_.size(); }
    const std::vector<double>& probs() const noexcept { return probs_; }

    /// Inverse-CDF draw.
    template <class Engine>
    Letter draw(Engine& engine) const
    {
        return letter_for(uniform01(engine));
    }

    Letter letter_for(double u) const noexcept;

private:
    // 53 random bits scaled into [0, 1); independent of the standard
    // library's distribution implementations.
    template <class Engine>
    static double uniform01(Engine& engine)
    {
        return static_cast<double>(engine() >> 11) * 0x1.0p-53;
    }

    std::vector<double> probs_;
    std::vector<double> cdf_;
};

using Engine = std::mt19937_64;

/// Independent engine for replicate `replicate` of a run seeded with `seed`.
Engine replicate_engine(std::uint64_t seed, std::uint64_t replicate);

struct SampleConfig {
    std::size_t n = 1;
    std::size_t k = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct EstimateReport {
    SampleConfig config;
    std::vector<double> per_replicate_scores;
    double mean_per_letter = 0.0;
};

/// X then Y, n letters each, drawn from `engine`.
std::pair<Sequence, Sequence> sample_pair(const LetterDistribution& dist, std::size_t n, Engine& engine);

/// Runs cfg.k replicates of L_n on `threads` workers (0 = hardware
/// concurrency). The report does not depend on the worker count.
EstimateReport mean_score_estimate(const LetterDistribution& dist, const ScoringScheme& scheme,
                                   const SampleConfig& cfg, unsigned threads = 0);

inline constexpr double kMaxExactPairs = 1e7;

/// E L(X_1..X_p; Y_1..Y_q) by enumerating all alphabet^(p+q) pairs.
double exact_expected_score(const LetterDistribution& dist, const ScoringScheme& scheme, std::size_t p,
                            std::size_t q);

/// l_n = E L_n / n, exactly.
double exact_mean_score(const LetterDistribution& dist, const ScoringScheme& scheme, std::size_t n);

}  // namespace lcsrate
