#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace lcsrate {

using Letter = std::uint8_t;
using LetterSpan = std::span<const Letter>;

inline constexpr std::size_t kMaxAlphabet = 256;
inline constexpr double kScoreTolerance = 1e-9;

/// Symmetric nonnegative pairwise scores S(a,b) together with the gap price.
///
/// A gap is a pair of indels (one on each side), so a single indel costs
/// delta/2. F (largest score) and A (largest change of score caused by one
/// letter) are derived from the matrix and cannot be set directly.
class ScoringScheme {
public:
    /// `matrix` is row-major, alphabet_size x alphabet_size.
    ScoringScheme(std::size_t alphabet_size, std::vector<double> matrix, double delta);

    /// S(a,b) = [a == b], the longest-common-subsequence score when delta = 0.
    static ScoringScheme indicator(std::size_t alphabet_size, double delta = 0.0);

    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    double delta() const noexcept { return delta_; }
    double indel() const noexcept { return delta_ / 2.0; }
    double f_max() const noexcept { return f_max_; }
    double a_max() const noexcept { return a_max_; }

    double score(Letter a, Letter b) const noexcept { return matrix_[a * alphabet_size_ + b]; }
    std::span<const double> row(Letter a) const noexcept
    {
        return {matrix_.data() + a * alphabet_size_, alphabet_size_};
    }
    std::span<const double> matrix() const noexcept { return matrix_; }

private:
    std::size_t alphabet_size_;
    std::vector<double> matrix_;
    double delta_;
    double f_max_ = 0.0;
    double a_max_ = 0.0;
};

struct Sequence {
    std::vector<Letter> letters;

    std::size_t size() const noexcept { return letters.size(); }
    LetterSpan view() const noexcept { return letters; }

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Encodes `text` by position of each character in `alphabet`, e.g.
/// from_symbols("ACGT", "ACGT") = {0,1,2,3}.
Sequence from_symbols(std::string_view text, std::string_view alphabet);

/// Aligned positions, 1-based: x[pi[i]] is aligned with y[mu[i]].
struct Alignment {
    std::vector<std::size_t> pi;
    std::vector<std::size_t> mu;

    std::size_t aligned() const noexcept { return pi.size(); }

    friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Throws InputError unless `a` is a strictly increasing index pair within
/// [1,p] x [1,q].
void check_alignment(const Alignment& a, std::size_t p, std::size_t q);

/// Throws InputError if any letter is outside the scheme's alphabet.
void check_letters(LetterSpan s, const ScoringScheme& scheme);

/// U = sum of aligned scores + delta * ((p - k) + (q - k)) / 2.
double alignment_score(LetterSpan x, LetterSpan y, const ScoringScheme& scheme, const Alignment& a);
double alignment_score(const Sequence& x, const Sequence& y, const ScoringScheme& scheme,
                       const Alignment& a);

/// Best alignment score by the global-alignment recurrence with indel cost
/// delta/2. O(|x||y|) time, O(min(|x|,|y|)) memory.
double optimal_score(LetterSpan x, LetterSpan y, const ScoringScheme& scheme);
double optimal_score(const Sequence& x, const Sequence& y, const ScoringScheme& scheme);

/// Signature shared by optimal_score and its oracles, so checks can be
/// pointed at either.
using ScoreFunction = std::function<double(LetterSpan, LetterSpan, const ScoringScheme&)>;

/// optimal_score as a ScoreFunction.
const ScoreFunction& optimal_scorer();

inline constexpr std::size_t kMaxEnumerationLength = 24;

/// Calls `visit` once per alignment of lengths p and q (C(p+q, p) in total),
/// the empty alignment first. Throws GuardError when p + q > 24.
void for_each_alignment(std::size_t p, std::size_t q,
                        const std::function<void(const Alignment&)>& visit);
std::vector<Alignment> enumerate_alignments(std::size_t p, std::size_t q);

/// max of alignment_score over every alignment. Exhaustive; |x| + |y| <= 24.
double brute_force_score(LetterSpan x, LetterSpan y, const ScoringScheme& scheme);
double brute_force_score(const Sequence& x, const Sequence& y, const ScoringScheme& scheme);

}  // namespace lcsrate
