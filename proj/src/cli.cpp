#include "lcsrate/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lcsrate/errors.hpp"
#include "lcsrate/io.hpp"
#include "lcsrate/montecarlo.hpp"
#include "lcsrate/verify.hpp"

namespace lcsrate::cli {

namespace {

template <class T>
T parse_number(std::string_view tok)
{
    T v{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw InputError(fmt::format("grid entry '{}' is not a number", tok));
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

template <class T>
std::vector<T> parse_grid(std::string_view spec)
{
    if (spec.find(':') != std::string_view::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3) {
            throw InputError(fmt::format("grid '{}' must be start:stop:step", spec));
        }
        const T start = parse_number<T>(parts[0]);
        const T stop = parse_number<T>(parts[1]);
        const T step = parse_number<T>(parts[2]);
        if (!(step > T{0}) || stop < start) {
            throw InputError(fmt::format("grid '{}' needs step > 0 and stop >= start", spec));
        }
        std::vector<T> out;
        if constexpr (std::is_integral_v<T>) {
            for (T v = start; v <= stop; v += step) {
                out.push_back(v);
            }
        } else {
            // Index-based so rounding does not accumulate or drop the endpoint.
            const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
            for (std::size_t i = 0; i < count; ++i) {
                out.push_back(start + static_cast<double>(i) * step);
            }
        }
        return out;
    }
    std::vector<T> out;
    for (auto tok : split(spec, ',')) {
        out.push_back(parse_number<T>(tok));
    }
    return out;
}

struct Inputs {
    ScoringScheme scheme;
    LetterDistribution dist;
};

// Binary alphabet, indicator scores, zero gap price unless a file says otherwise.
Inputs load_inputs(const RunConfig& cfg)
{
    auto scheme = cfg.scheme_path ? load_scheme(*cfg.scheme_path).scheme : ScoringScheme::indicator(2);
    auto dist = cfg.dist_path ? load_distribution(*cfg.dist_path)
                              : LetterDistribution::uniform(scheme.alphabet_size());
    if (dist.alphabet_size() != scheme.alphabet_size()) {
        throw InputError(fmt::format("distribution has {} letters but the scheme alphabet has {}",
                                     dist.alphabet_size(), scheme.alphabet_size()));
    }
    return {std::move(scheme), std::move(dist)};
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag)
{
    if (!v) {
        throw InputError(fmt::format("--{} is required", flag));
    }
    if (*v == 0) {
        throw InputError(fmt::format("--{} must be positive", flag));
    }
    return *v;
}

// Machine output goes to --out when given.
int with_output(const RunConfig& cfg, std::ostream& fallback, const std::function<int(std::ostream&)>& body)
{
    if (!cfg.out_path) {
        return body(fallback);
    }
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) {
        throw InputError(fmt::format("cannot write '{}'", cfg.out_path->string()));
    }
    const int rc = body(file);
    file.flush();
    if (!file) {
        throw InputError(fmt::format("failed writing '{}'", cfg.out_path->string()));
    }
    return rc;
}

BoundParams bound_params(const RunConfig& cfg, std::size_t n, std::size_t k, const ScoringScheme& scheme)
{
    BoundParams p;
    p.n = n;
    p.k = k;
    p.a_max = scheme.a_max();
    p.f_max = scheme.f_max();
    p.epsilon = cfg.epsilon;
    p.c_mult = cfg.c_mult;
    p.validate();
    return p;
}

void warn_if_odd(std::size_t n, std::ostream& log)
{
    if (n % 2 != 0) {
        fmt::print(log, "warning: n={} is odd; the rate bound is evaluated at n-1={}\n", n, n - 1);
    }
}

EstimateReport estimate(const RunConfig& cfg, const Inputs& in)
{
    const SampleConfig sc{require(cfg.n, "n"), require(cfg.k, "k"), cfg.seed};
    return mean_score_estimate(in.dist, in.scheme, sc, cfg.threads);
}

}  // namespace

std::vector<std::size_t> parse_size_grid(std::string_view spec) { return parse_grid<std::size_t>(spec); }

std::vector<double> parse_real_grid(std::string_view spec) { return parse_grid<double>(spec); }

int run_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& log)
{
    const auto in = load_inputs(cfg);
    const auto report = estimate(cfg, in);
    with_output(cfg, out, [&](std::ostream& o) {
        write_estimate_csv(o, report);
        return kOk;
    });
    fmt::print(log, "mean_per_letter={} n={} k={} seed={}\n", format_real(report.mean_per_letter),
               report.config.n, report.config.k, report.config.seed);
    return kOk;
}

int run_bound(const RunConfig& cfg, std::ostream& out, std::ostream& log)
{
    const auto in = load_inputs(cfg);
    const auto n = require(cfg.n, "n");
    const auto k = cfg.k.value_or(1);
    warn_if_odd(n, log);
    const auto p = bound_params(cfg, n, k, in.scheme);
    const auto ci = point_estimate(0.0, p);
    return with_output(cfg, out, [&](std::ostream& o) {
        fmt::print(o, "n={}\nk={}\nA={}\nF={}\nc={}\neps={}\n", n, k, format_real(p.a_max),
                   format_real(p.f_max), format_real(p.c()), format_real(p.epsilon));
        fmt::print(o, "q_bound={}\n", format_real(ci.q_value));
        fmt::print(o, "alexander_bound={}\n", format_real(alexander_bound(n, cfg.alexander_c)));
        fmt::print(o, "sampling_radius_one_sided={}\n",
                   format_real(sampling_radius(n, k, p.a_max, p.epsilon, false)));
        fmt::print(o, "sampling_radius_two_sided={}\n", format_real(ci.sampling_radius));
        fmt::print(o, "confidence_radius={}\n", format_real(ci.radius));
        return kOk;
    });
}

int run_confidence(const RunConfig& cfg, std::ostream& out, std::ostream& log)
{
    const auto in = load_inputs(cfg);
    const auto n = require(cfg.n, "n");
    const auto k = require(cfg.k, "k");
    warn_if_odd(n, log);
    const auto p = bound_params(cfg, n, k, in.scheme);
    const double mean = cfg.mean ? *cfg.mean : estimate(cfg, in).mean_per_letter;
    const auto ci = point_estimate(mean, p);
    return with_output(cfg, out, [&](std::ostream& o) {
        fmt::print(o, "mean_per_letter={}\n", format_real(mean));
        fmt::print(o, "l_hat={}\n", format_real(ci.l_hat));
        fmt::print(o, "radius={}\n", format_real(ci.radius));
        fmt::print(o, "q_bound={}\n", format_real(ci.q_value));
        fmt::print(o, "sampling_radius={}\n", format_real(ci.sampling_radius));
        fmt::print(o, "lower={}\nupper={}\n", format_real(ci.lower), format_real(ci.upper));
        fmt::print(o, "one_sided_upper={}\n", format_real(one_sided_upper(mean, p)));
        fmt::print(o, "confidence={}\n", format_real(1.0 - p.epsilon));
        return kOk;
    });
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log)
{
    const auto ns = parse_size_grid(cfg.n_grid);
    const auto as = parse_real_grid(cfg.a_grid);
    for (auto n : ns) {
        if (n < 2) {
            throw InputError(fmt::format("n-grid entry {} is below 2", n));
        }
    }
    for (double a : as) {
        if (!(a > 0.0)) {
            throw InputError(fmt::format("A-grid entry {} is not positive", a));
        }
    }
    const double f = cfg.scheme_path ? load_scheme(*cfg.scheme_path).scheme.f_max() : 1.0;
    if (std::any_of(ns.begin(), ns.end(), [](std::size_t n) { return n % 2 != 0; })) {
        fmt::print(log, "warning: odd n rows use the rate bound at n-1\n");
    }
    return with_output(cfg, out, [&](std::ostream& o) {
        o << "n,A,F,q_bound,alexander_bound\n";
        for (double a : as) {
            const double c = cfg.c_mult.value_or(std::sqrt(a));
            for (auto n : ns) {
                fmt::print(o, "{},{},{},{},{}\n", n, format_real(a), format_real(f),
                           format_real(q_bound(n, a, f, c)), format_real(alexander_bound(n, cfg.alexander_c)));
            }
        }
        return kOk;
    });
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log, const ScoreFunction& score)
{
    VerifyOptions opt;
    opt.only = cfg.only;
    opt.score = score;
    const auto results = run_verification(opt);
    std::size_t failed = 0;
    return with_output(cfg, out, [&](std::ostream& o) {
        for (const auto& r : results) {
            fmt::print(o, "{} {}/{} cases={}{}{}\n", r.passed ? "PASS" : "FAIL", r.group, r.name, r.cases,
                       r.detail.empty() ? "" : " : ", r.detail);
            failed += r.passed ? 0 : 1;
        }
        fmt::print(o, "{} of {} checks passed\n", results.size() - failed, results.size());
        if (failed > 0) {
            fmt::print(log, "verification failed\n");
            return kVerificationFailed;
        }
        return kOk;
    });
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& log)
{
    try {
        if (cfg.subcommand == "estimate") return run_estimate(cfg, out, log);
        if (cfg.subcommand == "bound") return run_bound(cfg, out, log);
        if (cfg.subcommand == "confidence") return run_confidence(cfg, out, log);
        if (cfg.subcommand == "sweep") return run_sweep(cfg, out, log);
        if (cfg.subcommand == "verify") return run_verify(cfg, out, log);
        fmt::print(log, "error: unknown subcommand '{}'\n", cfg.subcommand);
        return kConfigError;
    } catch (const InputError& e) {
        fmt::print(log, "error: {}\n", e.what());
        return kConfigError;
    } catch (const DomainError& e) {
        fmt::print(log, "error: {}\n", e.what());
        return kNumericError;
    } catch (const GuardError& e) {
        fmt::print(log, "error: {}\n", e.what());
        return kNumericError;
    }
}

}  // namespace lcsrate::cli
