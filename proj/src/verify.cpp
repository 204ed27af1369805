#include "lcsrate/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "lcsrate/bounds.hpp"
#include "lcsrate/errors.hpp"
#include "lcsrate/montecarlo.hpp"
#include "lcsrate/partition.hpp"

namespace lcsrate {

namespace {

constexpr double kTol = kScoreTolerance;

class Recorder {
public:
    Recorder(std::string group, std::string name) : result_{std::move(group), std::move(name), true, 0, {}} {}

    void count(std::size_t cases = 1) { result_.cases += cases; }

    // Keeps the first failure message only.
    void fail(std::string detail)
    {
        if (result_.passed) {
            result_.detail = std::move(detail);
        }
        result_.passed = false;
    }

    void expect(bool ok, const std::function<std::string()>& detail)
    {
        count();
        if (!ok) {
            fail(detail());
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string show(LetterSpan s)
{
    std::string out;
    for (Letter c : s) {
        out += static_cast<char>('0' + c);
    }
    return out.empty() ? std::string("<empty>") : out;
}

std::vector<Letter> random_letters(Engine& eng, std::size_t len, std::size_t alphabet)
{
    std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet) - 1);
    std::vector<Letter> s(len);
    for (auto& c : s) {
        c = static_cast<Letter>(letter(eng));
    }
    return s;
}

ScoringScheme random_scheme(Engine& eng, std::size_t alphabet)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> m(alphabet * alphabet);
    for (std::size_t a = 0; a < alphabet; ++a) {
        for (std::size_t b = a; b < alphabet; ++b) {
            m[a * alphabet + b] = m[b * alphabet + a] = std::round(unit(eng) * 8.0) / 4.0;
        }
    }
    const double f = *std::max_element(m.begin(), m.end());
    const double delta = f - unit(eng) * (f + 2.0);
    return ScoringScheme(alphabet, std::move(m), delta);
}

// All strings over {0,1} of length 0..max_len.
std::vector<std::vector<Letter>> binary_strings(std::size_t max_len)
{
    std::vector<std::vector<Letter>> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            std::vector<Letter> s(len);
            for (std::size_t i = 0; i < len; ++i) {
                s[i] = static_cast<Letter>((bits >> (len - 1 - i)) & 1u);
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<Letter> binary_string(std::size_t bits, std::size_t len)
{
    std::vector<Letter> s(len);
    for (std::size_t i = 0; i < len; ++i) {
        s[i] = static_cast<Letter>((bits >> (len - 1 - i)) & 1u);
    }
    return s;
}

// Textbook integer LCS table, independent of the scoring-scheme recurrence.
std::size_t textbook_lcs(LetterSpan x, LetterSpan y)
{
    std::vector<std::vector<std::size_t>> t(x.size() + 1, std::vector<std::size_t>(y.size() + 1, 0));
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            t[i][j] = x[i - 1] == y[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
        }
    }
    return t[x.size()][y.size()];
}

// ---- scoring ---------------------------------------------------------------

CheckResult oracle_equivalence_binary(const VerifyOptions& opt)
{
    Recorder rec("scoring", "oracle_equivalence_binary");
    const auto strings = binary_strings(5);
    for (double delta : {0.0, -0.5}) {
        const auto scheme = ScoringScheme::indicator(2, delta);
        for (const auto& x : strings) {
            for (const auto& y : strings) {
                const double got = opt.score(x, y, scheme);
                const double want = brute_force_score(x, y, scheme);
                rec.expect(std::abs(got - want) <= kTol, [&] {
                    return fmt::format("x={} y={} delta={}: dp={} brute={}", show(x), show(y), delta, got,
                                       want);
                });
            }
        }
    }
    return rec.take();
}

CheckResult oracle_equivalence_random(const VerifyOptions& opt)
{
    Recorder rec("scoring", "oracle_equivalence_random");
    Engine eng(opt.seed);
    std::uniform_int_distribution<std::size_t> len(0, 6);
    for (int t = 0; t < 200; ++t) {
        const auto scheme = random_scheme(eng, 4);
        const auto x = random_letters(eng, len(eng), 4);
        const auto y = random_letters(eng, len(eng), 4);
        const double got = opt.score(x, y, scheme);
        const double want = brute_force_score(x, y, scheme);
        rec.expect(std::abs(got - want) <= kTol, [&] {
            return fmt::format("x={} y={} delta={}: dp={} brute={}", show(x), show(y), scheme.delta(), got,
                               want);
        });
    }
    return rec.take();
}

CheckResult lcs_specialization(const VerifyOptions& opt)
{
    Recorder rec("scoring", "lcs_specialization");
    Engine eng(opt.seed + 1);
    std::uniform_int_distribution<std::size_t> len(0, 40);
    for (std::size_t alphabet : {2u, 4u}) {
        const auto scheme = ScoringScheme::indicator(alphabet);
        for (int t = 0; t < 250; ++t) {
            const auto x = random_letters(eng, len(eng), alphabet);
            const auto y = random_letters(eng, len(eng), alphabet);
            const double got = opt.score(x, y, scheme);
            const auto want = textbook_lcs(x, y);
            rec.expect(std::abs(got - static_cast<double>(want)) <= kTol, [&] {
                return fmt::format("x={} y={}: score={} lcs={}", show(x), show(y), got, want);
            });
        }
    }
    return rec.take();
}

CheckResult symmetry(const VerifyOptions& opt)
{
    Recorder rec("scoring", "symmetry");
    Engine eng(opt.seed + 2);
    std::uniform_int_distribution<std::size_t> len(0, 20);
    for (int t = 0; t < 300; ++t) {
        const auto scheme = random_scheme(eng, 4);
        const auto x = random_letters(eng, len(eng), 4);
        const auto y = random_letters(eng, len(eng), 4);
        const double xy = opt.score(x, y, scheme);
        const double yx = opt.score(y, x, scheme);
        rec.expect(std::abs(xy - yx) <= kTol,
                   [&] { return fmt::format("x={} y={}: L(x,y)={} L(y,x)={}", show(x), show(y), xy, yx); });
    }
    return rec.take();
}

CheckResult single_letter_sensitivity(const VerifyOptions& opt)
{
    Recorder rec("scoring", "single_letter_sensitivity");
    Engine eng(opt.seed + 3);
    std::uniform_int_distribution<std::size_t> len(1, 24);
    for (int t = 0; t < 1000; ++t) {
        const auto scheme = random_scheme(eng, 4);
        const auto n = len(eng);
        const auto x = random_letters(eng, n, 4);
        const auto y = random_letters(eng, n, 4);
        auto mutated = x;
        const auto pos = std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
        mutated[pos] = static_cast<Letter>((mutated[pos] + 1 + eng() % 3) % 4);
        const double diff = std::abs(opt.score(x, y, scheme) - opt.score(mutated, y, scheme));
        rec.expect(diff <= scheme.a_max() + kTol, [&] {
            return fmt::format("x={} x'={} y={}: |dL|={} > A={}", show(x), show(mutated), show(y), diff,
                               scheme.a_max());
        });
    }
    return rec.take();
}

CheckResult superadditivity_splits(const VerifyOptions& opt)
{
    Recorder rec("scoring", "superadditivity_splits");
    Engine eng(opt.seed + 4);
    std::uniform_int_distribution<std::size_t> len(0, 24);
    for (int t = 0; t < 500; ++t) {
        const auto scheme = random_scheme(eng, 4);
        const auto x = random_letters(eng, len(eng), 4);
        const auto y = random_letters(eng, len(eng), 4);
        const auto p = std::uniform_int_distribution<std::size_t>(0, x.size())(eng);
        const auto q = std::uniform_int_distribution<std::size_t>(0, y.size())(eng);
        const LetterSpan xs(x), ys(y);
        const double parts = opt.score(xs.first(p), ys.first(q), scheme) +
                             opt.score(xs.subspan(p), ys.subspan(q), scheme);
        const double whole = opt.score(xs, ys, scheme);
        rec.expect(parts <= whole + kTol, [&] {
            return fmt::format("x={} y={} split=({},{}): pieces {} > whole {}", show(x), show(y), p, q, parts,
                               whole);
        });
    }
    return rec.take();
}

// ---- montecarlo ------------------------------------------------------------

CheckResult exact_small_n(const VerifyOptions&)
{
    Recorder rec("montecarlo", "exact_small_n");
    const auto dist = LetterDistribution::uniform(2);
    const auto scheme = ScoringScheme::indicator(2);
    std::vector<double> el{0.0};
    for (std::size_t n = 1; n <= 4; ++n) {
        el.push_back(exact_expected_score(dist, scheme, n, n));
    }
    rec.expect(el[1] == 0.5, [&] { return fmt::format("l_1 = {} != 0.5", el[1]); });
    rec.expect(std::abs(el[2] / 2.0 - 0.5625) <= 1e-12, [&] { return fmt::format("l_2 = {} != 0.5625", el[2] / 2); });
    for (std::size_t n = 1; n < 4; ++n) {
        rec.expect(el[n] / static_cast<double>(n) <= el[n + 1] / static_cast<double>(n + 1) + 1e-12,
                   [&] { return fmt::format("l_{} > l_{}", n, n + 1); });
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t m = 1; n + m <= 4; ++m) {
            rec.expect(el[n + m] + 1e-12 >= el[n] + el[m],
                       [&] { return fmt::format("EL_{} < EL_{} + EL_{}", n + m, n, m); });
        }
    }
    return rec.take();
}

CheckResult replicate_determinism(const VerifyOptions& opt)
{
    Recorder rec("montecarlo", "replicate_determinism");
    const auto dist = LetterDistribution::uniform(2);
    const auto scheme = ScoringScheme::indicator(2);
    const SampleConfig cfg{64, 33, opt.seed};
    const auto serial = mean_score_estimate(dist, scheme, cfg, 1);
    for (unsigned threads : {2u, 5u, 16u}) {
        const auto parallel = mean_score_estimate(dist, scheme, cfg, threads);
        rec.expect(parallel.per_replicate_scores == serial.per_replicate_scores &&
                       parallel.mean_per_letter == serial.mean_per_letter,
                   [&] { return fmt::format("{} workers changed the estimate", threads); });
    }
    return rec.take();
}

// ---- bounds ----------------------------------------------------------------

CheckResult bound_dominance(const VerifyOptions&)
{
    Recorder rec("bounds", "bound_dominance");
    for (double a : {0.1, 0.5, 1.0, 2.0}) {
        for (std::size_t n = 10; n <= 10000; n += 2) {
            const double q = q_bound(n, a, 1.0);
            const double r = alexander_bound(n);
            rec.expect(q < r, [&] { return fmt::format("n={} A={}: Q={} >= R={}", n, a, q, r); });
        }
    }
    return rec.take();
}

CheckResult monotone_decay(const VerifyOptions&)
{
    Recorder rec("bounds", "monotone_decay");
    double prev = q_bound(4, 1.0, 1.0);
    for (std::size_t n = 6; n <= 1000000; n += 2) {
        const double q = q_bound(n, 1.0, 1.0);
        rec.expect(q < prev, [&] { return fmt::format("Q({}) = {} not below Q({}) = {}", n, q, n - 2, prev); });
        prev = q;
    }
    return rec.take();
}

CheckResult sample_pooling(const VerifyOptions&)
{
    Recorder rec("bounds", "sample_pooling");
    for (std::size_t n = 4; n <= 2000; n += 2) {
        for (std::size_t k = 2; k <= 10; ++k) {
            rec.expect(q_bound(k * n, 1.0, 1.0) < q_bound(n, 1.0, 1.0),
                       [&] { return fmt::format("Q(kn) >= Q(n) at n={} k={}", n, k); });
        }
    }
    return rec.take();
}

CheckResult entropy_inequality(const VerifyOptions&)
{
    Recorder rec("bounds", "entropy_inequality");
    for (std::size_t n = 2; n <= 1000000; ++n) {
        const double m = static_cast<double>(n);
        const double q = 2.0 / (2.0 * m + 1.0);
        const double lhs = binary_entropy(q);
        const double rhs = q * ((2.0 * m + 1.0) / (2.0 * m - 1.0) + std::log((2.0 * m - 1.0) / 2.0));
        rec.expect(lhs <= rhs, [&] { return fmt::format("n={}: h={} > {}", n, lhs, rhs); });
    }
    return rec.take();
}

CheckResult binomial_entropy(const VerifyOptions&)
{
    Recorder rec("bounds", "binomial_entropy");
    for (int a = 2; a <= 200; ++a) {
        for (int b = 1; b < a; ++b) {
            const double lhs = log_binomial(a, b);
            const double rhs = binary_entropy(static_cast<double>(b) / a) * a;
            rec.expect(lhs <= rhs + 1e-12, [&] { return fmt::format("ln C({},{}) = {} > {}", a, b, lhs, rhs); });
        }
    }
    return rec.take();
}

CheckResult tail_inversion(const VerifyOptions&)
{
    Recorder rec("bounds", "tail_inversion");
    for (std::size_t n : {10u, 1000u, 100000u}) {
        for (std::size_t k : {1u, 2u, 40u}) {
            for (double a : {0.5, 1.0, 3.0}) {
                for (double eps : {0.01, 0.05, 0.5}) {
                    const double rho = sampling_radius(n, k, a, eps, false);
                    const double tail = mcdiarmid_tail(rho * static_cast<double>(k * n), k * n, a);
                    rec.expect(std::abs(tail - eps) <= 1e-12,
                               [&] { return fmt::format("n={} k={} A={} eps={}: tail={}", n, k, a, eps, tail); });
                }
            }
        }
    }
    return rec.take();
}

// ---- partition -------------------------------------------------------------

CheckResult worked_example(const VerifyOptions&)
{
    Recorder rec("partition", "worked_example");
    const Alignment a{{1, 5, 6, 9, 10, 12}, {2, 3, 4, 6, 9, 10}};
    const auto p = build_partition(a, 4, 3);
    const Partition want{{1, 5, 9, 10, 13, 13}, {1, 3, 5, 9, 12, 13}};
    rec.expect(p == want, [&] {
        return fmt::format("nu=({}) tau=({})", fmt::join(p.nu, ","), fmt::join(p.tau, ","));
    });
    return rec.take();
}

CheckResult partition_existence(const VerifyOptions&)
{
    Recorder rec("partition", "partition_existence");
    for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 4}, {2, 2}, {4, 1}, {1, 6}, {2, 3}, {3, 2}, {6, 1}}) {
        for_each_alignment(k * n, k * n, [&](const Alignment& a) {
            const auto p = build_partition(a, k, n);
            rec.expect(is_admissible(p, k, n) && is_compatible(p, a), [&] {
                return fmt::format("k={} n={} pi=({}) mu=({}) -> nu=({}) tau=({})", k, n, fmt::join(a.pi, ","),
                                   fmt::join(a.mu, ","), fmt::join(p.nu, ","), fmt::join(p.tau, ","));
            });
        });
    }
    return rec.take();
}

CheckResult max_identity(const VerifyOptions& opt)
{
    Recorder rec("partition", "max_identity");
    for (double delta : {0.0, -0.5}) {
        const auto scheme = ScoringScheme::indicator(2, delta);
        for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
            const auto len = k * n;
            for (std::size_t xb = 0; xb < (std::size_t{1} << len); ++xb) {
                const auto x = binary_string(xb, len);
                for (std::size_t yb = 0; yb < (std::size_t{1} << len); ++yb) {
                    const auto y = binary_string(yb, len);
                    const auto r = check_max_identity(x, y, scheme, k, n, opt.score);
                    rec.expect(r.holds(), [&] {
                        return fmt::format("k={} n={} delta={} x={} y={}: L={} max={}", k, n, delta, show(x),
                                           show(y), r.optimal, r.best_partitioned);
                    });
                }
            }
        }
    }
    return rec.take();
}

CheckResult cardinality(const VerifyOptions&)
{
    Recorder rec("partition", "cardinality");
    for (std::size_t k = 1; k <= kMaxPartitionLength; ++k) {
        for (std::size_t n = 1; k * n <= kMaxPartitionLength; ++n) {
            std::vector<std::size_t> by_r(max_parts(k, n) + 1, 0);
            for_each_partition(k, n, [&](const Partition& p) { ++by_r[p.parts()]; });
            for (std::size_t r = k; r < by_r.size(); ++r) {
                const double bound = b_cardinality_upper(k, n, r);
                rec.expect(static_cast<double>(by_r[r]) <= bound * (1.0 + 1e-12), [&] {
                    return fmt::format("|B^{}_{{{},{}}}| = {} > {}", r, k, n, by_r[r], bound);
                });
            }
        }
    }
    return rec.take();
}

CheckResult expected_partition_score(const VerifyOptions&)
{
    Recorder rec("partition", "expected_partition_score");
    const auto dist = LetterDistribution::uniform(2);
    const auto scheme = ScoringScheme::indicator(2);
    // E L_2n is enumerated over 2^(4n) pairs, so n stays small.
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t n = 1; k * n <= 6 && n <= 4; ++n) {
            const auto report = verify_expected_partition_bound(dist, scheme, k, n);
            rec.count(report.partitions);
            if (!report.ok()) {
                rec.fail(fmt::format("k={} n={}: {} partitions exceed (r/2) EL_2n, worst slack {}", k, n,
                                     report.violations, report.worst_slack));
            }
        }
    }
    return rec.take();
}

using Check = CheckResult (*)(const VerifyOptions&);

struct Entry {
    const char* group;
    const char* name;
    Check run;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> checks{
        {"scoring", "oracle_equivalence_binary", oracle_equivalence_binary},
        {"scoring", "oracle_equivalence_random", oracle_equivalence_random},
        {"scoring", "lcs_specialization", lcs_specialization},
        {"scoring", "symmetry", symmetry},
        {"scoring", "single_letter_sensitivity", single_letter_sensitivity},
        {"scoring", "superadditivity_splits", superadditivity_splits},
        {"montecarlo", "exact_small_n", exact_small_n},
        {"montecarlo", "replicate_determinism", replicate_determinism},
        {"bounds", "bound_dominance", bound_dominance},
        {"bounds", "monotone_decay", monotone_decay},
        {"bounds", "sample_pooling", sample_pooling},
        {"bounds", "entropy_inequality", entropy_inequality},
        {"bounds", "binomial_entropy", binomial_entropy},
        {"bounds", "tail_inversion", tail_inversion},
        {"partition", "worked_example", worked_example},
        {"partition", "partition_existence", partition_existence},
        {"partition", "max_identity", max_identity},
        {"partition", "cardinality", cardinality},
        {"partition", "expected_partition_score", expected_partition_score},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& verify_groups()
{
    static const std::vector<std::string> groups{"scoring", "montecarlo", "bounds", "partition"};
    return groups;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options)
{
    if (options.only &&
        std::find(verify_groups().begin(), verify_groups().end(), *options.only) == verify_groups().end()) {
        throw InputError(fmt::format("unknown check group '{}'", *options.only));
    }
    std::vector<CheckResult> results;
    for (const auto& entry : registry()) {
        if (options.only && *options.only != entry.group) {
            continue;
        }
        try {
            results.push_back(entry.run(options));
        } catch (const std::exception& e) {
            // A throwing check is a failing check, not a crashed suite.
            results.push_back({entry.group, entry.name, false, 0, fmt::format("threw: {}", e.what())});
        }
    }
    return results;
}

}  // namespace lcsrate
