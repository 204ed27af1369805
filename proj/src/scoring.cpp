#include "lcsrate/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "lcsrate/errors.hpp"

namespace lcsrate {

ScoringScheme::ScoringScheme(std::size_t alphabet_size, std::vector<double> matrix, double delta)
    : alphabet_size_(alphabet_size), matrix_(std::move(matrix)), delta_(delta)
{
    if (alphabet_size_ == 0 || alphabet_size_ > kMaxAlphabet) {
        throw InputError(fmt::format("alphabet size must be in [1, {}], got {}", kMaxAlphabet,
                                     alphabet_size_));
    }
    if (matrix_.size() != alphabet_size_ * alphabet_size_) {
        throw InputError(fmt::format("score matrix has {} entries, expected {}", matrix_.size(),
                                     alphabet_size_ * alphabet_size_));
    }
    if (!std::isfinite(delta_)) {
        throw InputError("gap price must be finite");
    }
    const auto n = alphabet_size_;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const double s = matrix_[a * n + b];
            if (!std::isfinite(s) || s < 0.0) {
                throw InputError(fmt::format("S({},{}) = {} is not a nonnegative real", a, b, s));
            }
            if (s != matrix_[b * n + a]) {
                throw InputError(fmt::format("score matrix is not symmetric at ({},{})", a, b));
            }
            f_max_ = std::max(f_max_, s);
        }
    }
    // A = max_a (max_b S(a,b) - min_c S(a,c)).
    for (std::size_t a = 0; a < n; ++a) {
        const auto r = row(static_cast<Letter>(a));
        const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
        a_max_ = std::max(a_max_, *hi - *lo);
    }
    if (delta_ > f_max_) {
        throw InputError(fmt::format("gap price {} exceeds the largest score {}", delta_, f_max_));
    }
}

ScoringScheme ScoringScheme::indicator(std::size_t alphabet_size, double delta)
{
    std::vector<double> m(alphabet_size * alphabet_size, 0.0);
    for (std::size_t a = 0; a < alphabet_size; ++a) {
        m[a * alphabet_size + a] = 1.0;
    }
    return ScoringScheme(alphabet_size, std::move(m), delta);
}

Sequence from_symbols(std::string_view text, std::string_view alphabet)
{
    Sequence s;
    s.letters.reserve(text.size());
    for (char c : text) {
        const auto pos = alphabet.find(c);
        if (pos == std::string_view::npos || pos >= kMaxAlphabet) {
            throw InputError(fmt::format("symbol '{}' is not in alphabet \"{}\"", c, alphabet));
        }
        s.letters.push_back(static_cast<Letter>(pos));
    }
    return s;
}

void check_alignment(const Alignment& a, std::size_t p, std::size_t q)
{
    if (a.pi.size() != a.mu.size()) {
        throw InputError("alignment index vectors differ in length");
    }
    auto check_side = [](const std::vector<std::size_t>& idx, std::size_t len, char side) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 1 || idx[i] > len) {
                throw InputError(fmt::format("alignment index {} on side {} outside [1, {}]", idx[i],
                                             side, len));
            }
            if (i > 0 && idx[i] <= idx[i - 1]) {
                throw InputError(fmt::format("alignment indices on side {} are not increasing", side));
            }
        }
    };
    check_side(a.pi, p, 'x');
    check_side(a.mu, q, 'y');
}

void check_letters(LetterSpan s, const ScoringScheme& scheme)
{
    for (Letter c : s) {
        if (c >= scheme.alphabet_size()) {
            throw InputError(fmt::format("letter {} outside alphabet of size {}", int{c},
                                         scheme.alphabet_size()));
        }
    }
}

double alignment_score(LetterSpan x, LetterSpan y, const ScoringScheme& scheme, const Alignment& a)
{
    check_alignment(a, x.size(), y.size());
    check_letters(x, scheme);
    check_letters(y, scheme);
    double u = 0.0;
    for (std::size_t i = 0; i < a.aligned(); ++i) {
        u += scheme.score(x[a.pi[i] - 1], y[a.mu[i] - 1]);
    }
    const auto unaligned = (x.size() - a.aligned()) + (y.size() - a.aligned());
    return u + scheme.indel() * static_cast<double>(unaligned);
}

double alignment_score(const Sequence& x, const Sequence& y, const ScoringScheme& scheme,
                       const Alignment& a)
{
    return alignment_score(x.view(), y.view(), scheme, a);
}

double optimal_score(LetterSpan x, LetterSpan y, const ScoringScheme& scheme)
{
    check_letters(x, scheme);
    check_letters(y, scheme);
    // S is symmetric, so the shorter sequence can always index the row.
    if (y.size() > x.size()) {
        std::swap(x, y);
    }
    const double indel = scheme.indel();
    std::vector<double> row(y.size() + 1);
    for (std::size_t j = 0; j <= y.size(); ++j) {
        row[j] = static_cast<double>(j) * indel;
    }
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const auto scores = scheme.row(x[i - 1]);
        double diag = row[0];
        row[0] = static_cast<double>(i) * indel;
        for (std::size_t j = 1; j <= y.size(); ++j) {
            const double up = row[j];
            row[j] = std::max({diag + scores[y[j - 1]], up + indel, row[j - 1] + indel});
            diag = up;
        }
    }
    return row[y.size()];
}

double optimal_score(const Sequence& x, const Sequence& y, const ScoringScheme& scheme)
{
    return optimal_score(x.view(), y.view(), scheme);
}

const ScoreFunction& optimal_scorer()
{
    static const ScoreFunction f = [](LetterSpan x, LetterSpan y, const ScoringScheme& scheme) {
        return optimal_score(x, y, scheme);
    };
    return f;
}

namespace {

void extend_alignments(Alignment& cur, std::size_t p, std::size_t q,
                       const std::function<void(const Alignment&)>& visit)
{
    visit(cur);
    const std::size_t i0 = cur.pi.empty() ? 1 : cur.pi.back() + 1;
    const std::size_t j0 = cur.mu.empty() ? 1 : cur.mu.back() + 1;
    for (std::size_t i = i0; i <= p; ++i) {
        for (std::size_t j = j0; j <= q; ++j) {
            cur.pi.push_back(i);
            cur.mu.push_back(j);
            extend_alignments(cur, p, q, visit);
            cur.pi.pop_back();
            cur.mu.pop_back();
        }
    }
}

}  // namespace

void for_each_alignment(std::size_t p, std::size_t q,
                        const std::function<void(const Alignment&)>& visit)
{
    if (p + q > kMaxEnumerationLength) {
        throw GuardError(fmt::format("refusing to enumerate alignments of lengths {} + {} > {}", p, q,
                                     kMaxEnumerationLength));
    }
    Alignment cur;
    cur.pi.reserve(std::min(p, q));
    cur.mu.reserve(std::min(p, q));
    extend_alignments(cur, p, q, visit);
}

std::vector<Alignment> enumerate_alignments(std::size_t p, std::size_t q)
{
    std::vector<Alignment> out;
    for_each_alignment(p, q, [&](const Alignment& a) { out.push_back(a); });
    return out;
}

double brute_force_score(LetterSpan x, LetterSpan y, const ScoringScheme& scheme)
{
    check_letters(x, scheme);
    check_letters(y, scheme);
    double best = -std::numeric_limits<double>::infinity();
    for_each_alignment(x.size(), y.size(), [&](const Alignment& a) {
        best = std::max(best, alignment_score(x, y, scheme, a));
    });
    return best;
}

double brute_force_score(const Sequence& x, const Sequence& y, const ScoringScheme& scheme)
{
    return brute_force_score(x.view(), y.view(), scheme);
}

}  // namespace lcsrate
