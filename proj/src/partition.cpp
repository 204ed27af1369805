#include "lcsrate/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>

#include "lcsrate/bounds.hpp"
#include "lcsrate/errors.hpp"

namespace lcsrate {

namespace {

bool nondecreasing_from_one(const std::vector<std::size_t>& v, std::size_t end)
{
    return !v.empty() && v.front() == 1 && v.back() == end && std::is_sorted(v.begin(), v.end());
}

// Index j with boundaries[j] <= pos < boundaries[j+1]. Repeated boundaries
// (empty pieces) never contain pos, so j is unique.
std::size_t piece_of(const std::vector<std::size_t>& boundaries, std::size_t pos)
{
    auto it = std::upper_bound(boundaries.begin(), boundaries.end(), pos);
    return static_cast<std::size_t>(it - boundaries.begin()) - 1;
}

void check_kn(std::size_t k, std::size_t n)
{
    if (k < 1 || n < 1) {
        throw InputError(fmt::format("partition needs k, n >= 1 (k={}, n={})", k, n));
    }
}

}  // namespace

bool is_admissible(const Partition& p, std::size_t k, std::size_t n)
{
    if (k < 1 || n < 1 || p.nu.size() != p.tau.size() || p.nu.size() < 2) {
        return false;
    }
    const auto len = k * n;
    if (!nondecreasing_from_one(p.nu, len + 1) || !nondecreasing_from_one(p.tau, len + 1)) {
        return false;
    }
    const auto r = p.parts();
    if (r < k || r > max_parts(k, n)) {
        return false;
    }
    for (std::size_t j = 0; j + 1 < r; ++j) {
        const auto s = p.x_size(j) + p.y_size(j);
        if (s != 2 * n && s != 2 * n - 1) {
            return false;
        }
    }
    return p.x_size(r - 1) + p.y_size(r - 1) <= 2 * n;
}

bool is_compatible(const Partition& p, const Alignment& a)
{
    for (std::size_t i = 0; i < a.aligned(); ++i) {
        if (piece_of(p.nu, a.pi[i]) != piece_of(p.tau, a.mu[i])) {
            return false;
        }
    }
    return true;
}

Partition build_partition(const Alignment& a, std::size_t k, std::size_t n)
{
    check_kn(k, n);
    const auto len = k * n;
    check_alignment(a, len, len);

    // Column layout: (x letters, y letters) consumed per column.
    struct Column {
        std::size_t dx, dy;
    };
    std::vector<Column> columns;
    columns.reserve(2 * len);
    std::size_t xi = 0, yj = 0;
    auto gap_run = [&](std::size_t x_to, std::size_t y_to) {
        for (; xi < x_to; ++xi) columns.push_back({1, 0});
        for (; yj < y_to; ++yj) columns.push_back({0, 1});
    };
    for (std::size_t i = 0; i < a.aligned(); ++i) {
        gap_run(a.pi[i] - 1, a.mu[i] - 1);
        columns.push_back({1, 1});
        ++xi;
        ++yj;
    }
    gap_run(len, len);

    Partition p;
    p.nu.push_back(1);
    p.tau.push_back(1);
    std::size_t x_used = 0, y_used = 0, in_part = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        x_used += columns[c].dx;
        y_used += columns[c].dy;
        in_part += columns[c].dx + columns[c].dy;
        const bool last = c + 1 == columns.size();
        const bool overshoots =
            !last && in_part + columns[c + 1].dx + columns[c + 1].dy > 2 * n;
        if (!last && (in_part == 2 * n || (in_part == 2 * n - 1 && overshoots))) {
            p.nu.push_back(x_used + 1);
            p.tau.push_back(y_used + 1);
            in_part = 0;
        }
    }
    p.nu.push_back(len + 1);
    p.tau.push_back(len + 1);
    return p;
}

namespace {

struct PartitionWalker {
    std::size_t n, len, r;
    Partition& cur;
    const std::function<void(const Partition&)>& visit;

    void descend(std::size_t j, std::size_t x_used, std::size_t y_used)
    {
        if (j + 1 == r) {
            if ((len - x_used) + (len - y_used) <= 2 * n) {
                cur.nu.push_back(len + 1);
                cur.tau.push_back(len + 1);
                visit(cur);
                cur.nu.pop_back();
                cur.tau.pop_back();
            }
            return;
        }
        for (std::size_t total : {2 * n - 1, 2 * n}) {
            for (std::size_t a = 0; a <= std::min(total, len - x_used); ++a) {
                const auto b = total - a;
                if (b > len - y_used) {
                    continue;
                }
                cur.nu.push_back(x_used + a + 1);
                cur.tau.push_back(y_used + b + 1);
                descend(j + 1, x_used + a, y_used + b);
                cur.nu.pop_back();
                cur.tau.pop_back();
            }
        }
    }
};

}  // namespace

void for_each_partition(std::size_t k, std::size_t n, const std::function<void(const Partition&)>& visit)
{
    check_kn(k, n);
    const auto len = k * n;
    if (len > kMaxPartitionLength) {
        throw GuardError(fmt::format("refusing to enumerate partitions with kn = {} > {}", len,
                                     kMaxPartitionLength));
    }
    Partition cur;
    for (std::size_t r = k; r <= max_parts(k, n); ++r) {
        cur.nu.assign(1, 1);
        cur.tau.assign(1, 1);
        PartitionWalker{n, len, r, cur, visit}.descend(0, 0, 0);
    }
}

std::vector<Partition> enumerate_partitions(std::size_t k, std::size_t n)
{
    std::vector<Partition> out;
    for_each_partition(k, n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

double partitioned_score(LetterSpan x, LetterSpan y, const Partition& p, const ScoringScheme& scheme,
                         const ScoreFunction& score)
{
    if (x.size() != y.size() || p.nu.size() != p.tau.size() || p.nu.size() < 2 ||
        p.nu.back() != x.size() + 1 || p.tau.back() != y.size() + 1) {
        throw InputError(fmt::format("partition does not fit sequences of lengths {} and {}", x.size(),
                                     y.size()));
    }
    double total = 0.0;
    for (std::size_t j = 0; j < p.parts(); ++j) {
        total += score(x.subspan(p.nu[j] - 1, p.x_size(j)), y.subspan(p.tau[j] - 1, p.y_size(j)), scheme);
    }
    return total;
}

double partitioned_score(const Sequence& x, const Sequence& y, const Partition& p,
                         const ScoringScheme& scheme)
{
    return partitioned_score(x.view(), y.view(), p, scheme);
}

bool MaxIdentityResult::holds() const noexcept
{
    return std::abs(optimal - best_partitioned) <= kScoreTolerance;
}

MaxIdentityResult check_max_identity(LetterSpan x, LetterSpan y, const ScoringScheme& scheme,
                                     std::size_t k, std::size_t n, const ScoreFunction& score)
{
    check_kn(k, n);
    if (x.size() != k * n || y.size() != k * n) {
        throw InputError(fmt::format("max identity needs |x| = |y| = kn = {}", k * n));
    }
    // Piece scores are shared by many partitions; cache by (x range, y range).
    const auto side = k * n + 2;  // boundaries run 1..kn+1
    std::vector<double> cache(side * side * side * side, std::numeric_limits<double>::quiet_NaN());
    auto piece = [&](std::size_t xs, std::size_t xe, std::size_t ys, std::size_t ye) {
        double& slot = cache[((xs * side + xe) * side + ys) * side + ye];
        if (std::isnan(slot)) {
            slot = score(x.subspan(xs - 1, xe - xs), y.subspan(ys - 1, ye - ys), scheme);
        }
        return slot;
    };

    MaxIdentityResult result;
    result.optimal = score(x, y, scheme);
    result.best_partitioned = -std::numeric_limits<double>::infinity();
    for_each_partition(k, n, [&](const Partition& p) {
        double total = 0.0;
        for (std::size_t j = 0; j < p.parts(); ++j) {
            total += piece(p.nu[j], p.nu[j + 1], p.tau[j], p.tau[j + 1]);
        }
        result.best_partitioned = std::max(result.best_partitioned, total);
        ++result.partitions;
    });
    return result;
}

bool verify_max_identity(const Sequence& x, const Sequence& y, const ScoringScheme& scheme, std::size_t k,
                         std::size_t n)
{
    return check_max_identity(x.view(), y.view(), scheme, k, n).holds();
}

ExpectedPartitionReport verify_expected_partition_bound(const LetterDistribution& dist, const ScoringScheme& scheme, std::size_t k,
                           std::size_t n)
{
    check_kn(k, n);
    ExpectedPartitionReport report;
    report.expected_l2n = exact_expected_score(dist, scheme, 2 * n, 2 * n);
    report.worst_slack = std::numeric_limits<double>::infinity();

    // Pieces are i.i.d. blocks, so E L_kn(nu, tau) only depends on piece sizes.
    std::map<std::pair<std::size_t, std::size_t>, double> piece_mean;
    auto expected_piece = [&](std::size_t a, std::size_t b) {
        auto [it, inserted] = piece_mean.try_emplace({a, b}, 0.0);
        if (inserted) {
            it->second = exact_expected_score(dist, scheme, a, b);
        }
        return it->second;
    };

    for_each_partition(k, n, [&](const Partition& p) {
        double expected = 0.0;
        for (std::size_t j = 0; j < p.parts(); ++j) {
            expected += expected_piece(p.x_size(j), p.y_size(j));
        }
        const double slack = static_cast<double>(p.parts()) / 2.0 * report.expected_l2n - expected;
        report.worst_slack = std::min(report.worst_slack, slack);
        if (slack < -kScoreTolerance) {
            ++report.violations;
        }
        ++report.partitions;
    });
    return report;
}

}  // namespace lcsrate
