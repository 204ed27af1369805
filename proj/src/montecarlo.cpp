#include "lcsrate/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "lcsrate/errors.hpp"

namespace lcsrate {

LetterDistribution::LetterDistribution(std::vector<double> probs) : probs_(std::move(probs))
{
    if (probs_.empty() || probs_.size() > kMaxAlphabet) {
        throw InputError(fmt::format("distribution must have 1..{} letters", kMaxAlphabet));
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw InputError(fmt::format("probability {} is not a nonnegative real", p));
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw InputError(fmt::format("probabilities sum to {}, not 1", sum));
    }
    cdf_.resize(probs_.size());
    std::partial_sum(probs_.begin(), probs_.end(), cdf_.begin());
}

LetterDistribution LetterDistribution::uniform(std::size_t alphabet_size)
{
    if (alphabet_size == 0) {
        throw InputError("empty alphabet");
    }
    return LetterDistribution(std::vector<double>(alphabet_size, 1.0 / static_cast<double>(alphabet_size)));
}

LetterDistribution LetterDistribution::point_mass(std::size_t alphabet_size, Letter letter)
{
    if (letter >= alphabet_size) {
        throw InputError("point mass outside alphabet");
    }
    std::vector<double> p(alphabet_size, 0.0);
    p[letter] = 1.0;
    return LetterDistribution(std::move(p));
}

Letter LetterDistribution::letter_for(double u) const noexcept
{
    // First letter whose cumulative mass exceeds u; zero-mass letters are
    // never chosen. The clamp absorbs a final cdf entry just below 1.
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    auto idx = static_cast<std::size_t>(it - cdf_.begin());
    if (idx >= probs_.size()) {
        idx = probs_.size() - 1;
        while (idx > 0 && probs_[idx] == 0.0) {
            --idx;
        }
    }
    return static_cast<Letter>(idx);
}

Engine replicate_engine(std::uint64_t seed, std::uint64_t replicate)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(replicate), static_cast<std::uint32_t>(replicate >> 32)};
    return Engine(seq);
}

void SampleConfig::validate() const
{
    if (n < 1) {
        throw InputError("sequence length n must be at least 1");
    }
    if (k < 1) {
        throw InputError("replicate count k must be at least 1");
    }
}

std::pair<Sequence, Sequence> sample_pair(const LetterDistribution& dist, std::size_t n, Engine& engine)
{
    std::pair<Sequence, Sequence> out;
    out.first.letters.resize(n);
    out.second.letters.resize(n);
    for (auto& c : out.first.letters) {
        c = dist.draw(engine);
    }
    for (auto& c : out.second.letters) {
        c = dist.draw(engine);
    }
    return out;
}

EstimateReport mean_score_estimate(const LetterDistribution& dist, const ScoringScheme& scheme,
                                   const SampleConfig& cfg, unsigned threads)
{
    cfg.validate();
    if (dist.alphabet_size() != scheme.alphabet_size()) {
        throw InputError(fmt::format("distribution has {} letters but the scheme has {}",
                                     dist.alphabet_size(), scheme.alphabet_size()));
    }
    EstimateReport report;
    report.config = cfg;
    report.per_replicate_scores.assign(cfg.k, 0.0);

    auto run = [&](std::size_t i) {
        auto engine = replicate_engine(cfg.seed, i);
        const auto [x, y] = sample_pair(dist, cfg.n, engine);
        report.per_replicate_scores[i] = optimal_score(x, y, scheme);
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.k));
    if (threads <= 1) {
        for (std::size_t i = 0; i < cfg.k; ++i) {
            run(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cfg.k; i = next++) {
                    run(i);
                }
            });
        }
    }

    double sum = 0.0;
    for (double s : report.per_replicate_scores) {
        sum += s;
    }
    report.mean_per_letter = sum / (static_cast<double>(cfg.k) * static_cast<double>(cfg.n));
    return report;
}

namespace {

struct WeightedSequence {
    std::vector<Letter> letters;
    double prob;
};

// Every sequence of length `len` with positive probability.
std::vector<WeightedSequence> all_sequences(const LetterDistribution& dist, std::size_t len)
{
    std::vector<Letter> support;
    for (std::size_t a = 0; a < dist.alphabet_size(); ++a) {
        if (dist.probs()[a] > 0.0) {
            support.push_back(static_cast<Letter>(a));
        }
    }
    std::vector<WeightedSequence> out{{{}, 1.0}};
    for (std::size_t pos = 0; pos < len; ++pos) {
        std::vector<WeightedSequence> next;
        next.reserve(out.size() * support.size());
        for (const auto& w : out) {
            for (Letter a : support) {
                auto letters = w.letters;
                letters.push_back(a);
                next.push_back({std::move(letters), w.prob * dist.probs()[a]});
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

double exact_expected_score(const LetterDistribution& dist, const ScoringScheme& scheme, std::size_t p,
                            std::size_t q)
{
    if (dist.alphabet_size() != scheme.alphabet_size()) {
        throw InputError("distribution and scheme alphabets differ");
    }
    const double pairs = std::pow(static_cast<double>(dist.alphabet_size()), static_cast<double>(p + q));
    if (pairs > kMaxExactPairs) {
        throw GuardError(fmt::format("exact expectation would enumerate {:.3g} pairs (limit {:.0g})",
                                     pairs, kMaxExactPairs));
    }
    const auto xs = all_sequences(dist, p);
    const auto ys = all_sequences(dist, q);
    double total = 0.0;
    for (const auto& x : xs) {
        double row = 0.0;
        for (const auto& y : ys) {
            row += y.prob * optimal_score(LetterSpan(x.letters), LetterSpan(y.letters), scheme);
        }
        total += x.prob * row;
    }
    return total;
}

double exact_mean_score(const LetterDistribution& dist, const ScoringScheme& scheme, std::size_t n)
{
    if (n < 1) {
        throw InputError("n must be at least 1");
    }
    return exact_expected_score(dist, scheme, n, n) / static_cast<double>(n);
}

}  // namespace lcsrate
