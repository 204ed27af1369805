#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lcsrate/montecarlo.hpp"
#include "lcsrate/scoring.hpp"

namespace lcsrate {

/// Cut points of two length-kn sequences into r piece pairs.
///
/// nu and tau hold r+1 one-based boundaries; piece j of x is
/// x[nu[j] .. nu[j+1]-1] (empty when nu[j] == nu[j+1]), likewise for y.
struct Partition {
    std::vector<std::size_t> nu;
    std::vector<std::size_t> tau;

    std::size_t parts() const noexcept { return nu.empty() ? 0 : nu.size() - 1; }
    std::size_t x_size(std::size_t j) const { return nu[j + 1] - nu[j]; }
    std::size_t y_size(std::size_t j) const { return tau[j + 1] - tau[j]; }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// True when p is in B_{k,n}: boundaries nondecreasing from 1 to kn+1, every
/// piece pair but the last holds 2n-1 or 2n letters, the last at most 2n,
/// and k <= r <= ceil(2kn/(2n-1)).
bool is_admissible(const Partition& p, std::size_t k, std::size_t n);

/// True when no aligned pair of `a` straddles two different piece indices.
bool is_compatible(const Partition& p, const Alignment& a);

/// Partition of an alignment of two length-kn sequences built by cutting
/// the column layout greedily: a part closes when its letter count reaches
/// 2n, or 2n-1 when the next column would overshoot. Unaligned x letters
/// are laid out before unaligned y letters between consecutive pairs.
Partition build_partition(const Alignment& a, std::size_t k, std::size_t n);

inline constexpr std::size_t kMaxPartitionLength = 8;

/// Visits every element of B_{k,n} once, ordered by r. Requires kn <= 8.
void for_each_partition(std::size_t k, std::size_t n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(std::size_t k, std::size_t n);

/// Sum of optimal piece scores L_kn(nu, tau).
double partitioned_score(LetterSpan x, LetterSpan y, const Partition& p, const ScoringScheme& scheme,
                         const ScoreFunction& score = optimal_scorer());
double partitioned_score(const Sequence& x, const Sequence& y, const Partition& p,
                         const ScoringScheme& scheme);

struct MaxIdentityResult {
    double optimal = 0.0;
    double best_partitioned = 0.0;
    std::size_t partitions = 0;

    bool holds() const noexcept;
};

/// Compares L_kn with the maximum of L_kn(nu, tau) over B_{k,n}; both sides
/// are computed with `score`.
MaxIdentityResult check_max_identity(LetterSpan x, LetterSpan y, const ScoringScheme& scheme,
                                     std::size_t k, std::size_t n,
                                     const ScoreFunction& score = optimal_scorer());

bool verify_max_identity(const Sequence& x, const Sequence& y, const ScoringScheme& scheme, std::size_t k,
                         std::size_t n);

struct ExpectedPartitionReport {
    std::size_t partitions = 0;
    /// Partitions with E L_kn(nu, tau) > (r/2) E L_2n.
    std::size_t violations = 0;
    double expected_l2n = 0.0;
    /// min over partitions of (r/2) E L_2n - E L_kn(nu, tau).
    double worst_slack = 0.0;

    bool ok() const noexcept { return violations == 0; }
};

/// Exact check of E L_kn(nu, tau) <= (r/2) E L_2n over all of B_{k,n}.
ExpectedPartitionReport verify_expected_partition_bound(const LetterDistribution& dist, const ScoringScheme& scheme, std::size_t k,
                           std::size_t n);

}  // namespace lcsrate
