#include "lcsrate/bounds.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "lcsrate/errors.hpp"

namespace lcsrate {

double q_bound(std::size_t n, double a_max, double f_max, double c)
{
    if (n < 2) {
        throw DomainError(fmt::format("rate bound needs n >= 2, got {}", n));
    }
    if (!(a_max > 0.0) || !(f_max >= 0.0) || !(c > 0.0)) {
        throw DomainError(fmt::format("rate bound needs A > 0, F >= 0, c > 0 (A={}, F={}, c={})", a_max,
                                      f_max, c));
    }
    const auto m = static_cast<double>(even_floor(n)) - 1.0;
    return c * std::sqrt(2.0 / m * ((m + 2.0) / m + std::log(m))) + f_max / m;
}

double q_bound(std::size_t n, double a_max, double f_max)
{
    if (!(a_max > 0.0)) {
        throw DomainError("rate bound needs A > 0");
    }
    return q_bound(n, a_max, f_max, std::sqrt(a_max));
}

double alexander_bound(std::size_t n, double c)
{
    if (n < 2) {
        throw DomainError(fmt::format("Alexander bound needs n >= 2, got {}", n));
    }
    const auto x = static_cast<double>(n);
    return c * std::sqrt(std::log(x) / x);
}

double mcdiarmid_tail(double delta, std::size_t m, double a_max)
{
    if (!(delta >= 0.0) || m == 0 || !(a_max > 0.0)) {
        throw DomainError("tail bound needs delta >= 0, m >= 1, A > 0");
    }
    return std::exp(-delta * delta / (static_cast<double>(m) * a_max * a_max));
}

double sampling_radius(std::size_t n, std::size_t k, double a_max, double eps, bool two_sided)
{
    if (n == 0 || k == 0) {
        throw DomainError("sampling radius needs n, k >= 1");
    }
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw DomainError(fmt::format("confidence level eps must be in (0, 1], got {}", eps));
    }
    if (!(a_max > 0.0)) {
        throw DomainError("sampling radius needs A > 0");
    }
    const double numerator = std::log((two_sided ? 2.0 : 1.0) / eps);
    return a_max * std::sqrt(numerator / (static_cast<double>(k) * static_cast<double>(n)));
}

double BoundParams::c() const { return c_mult.value_or(std::sqrt(a_max)); }

void BoundParams::validate() const
{
    if (n < 2) {
        throw DomainError(fmt::format("n must be >= 2, got {}", n));
    }
    if (k < 1) {
        throw DomainError("k must be >= 1");
    }
    if (!(a_max > 0.0) || !(f_max > 0.0)) {
        throw DomainError(fmt::format("A and F must be positive (A={}, F={})", a_max, f_max));
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw DomainError(fmt::format("eps must be in (0, 1), got {}", epsilon));
    }
    // c = sqrt(A) is admitted although the theorem asks for c > sqrt(A).
    if (c_mult && !(*c_mult >= std::sqrt(a_max) * (1.0 - 1e-12))) {
        throw DomainError(fmt::format("c = {} is below sqrt(A) = {}", *c_mult, std::sqrt(a_max)));
    }
}

double one_sided_upper(double mean, const BoundParams& p)
{
    p.validate();
    return mean + q_bound(p.n, p.a_max, p.f_max, p.c()) +
           sampling_radius(p.n, p.k, p.a_max, p.epsilon, false);
}

ConfidenceReport point_estimate(double mean, const BoundParams& p)
{
    p.validate();
    ConfidenceReport r;
    r.q_value = q_bound(p.n, p.a_max, p.f_max, p.c());
    r.sampling_radius = sampling_radius(p.n, p.k, p.a_max, p.epsilon, true);
    r.l_hat = mean + r.q_value / 2.0;
    r.radius = r.sampling_radius + r.q_value / 2.0;
    r.lower = r.l_hat - r.radius;
    r.upper = r.l_hat + r.radius;
    return r;
}

double psi(std::size_t n)
{
    if (n < 1) {
        throw DomainError("psi needs n >= 1");
    }
    const double m = 2.0 * static_cast<double>(n) - 1.0;
    return 2.0 / m * ((m + 2.0) / m + std::log(m));
}

double binary_entropy(double q)
{
    if (!(q >= 0.0 && q <= 1.0)) {
        throw DomainError(fmt::format("entropy argument {} outside [0, 1]", q));
    }
    auto term = [](double t) { return t > 0.0 ? -t * std::log(t) : 0.0; };
    return term(q) + term(1.0 - q);
}

double log_binomial(double a, double b)
{
    if (!(b >= 0.0 && b <= a)) {
        throw DomainError(fmt::format("binomial C({}, {}) undefined", a, b));
    }
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
}

std::size_t max_parts(std::size_t k, std::size_t n)
{
    if (n < 1) {
        throw DomainError("n must be >= 1");
    }
    const auto num = 2 * k * n;
    const auto den = 2 * n - 1;
    return (num + den - 1) / den;
}

double log_b_cardinality_upper(std::size_t k, std::size_t n, std::size_t r)
{
    if (k < 1 || n < 1 || r < k || r > max_parts(k, n)) {
        throw DomainError(fmt::format("part count r={} outside [k, ceil(2kn/(2n-1))] for k={}, n={}", r,
                                      k, n));
    }
    const auto rm1 = static_cast<double>(r - 1);
    const auto nk = static_cast<double>(n * k);
    return rm1 * std::numbers::ln2 + std::log(2.0 * static_cast<double>(n)) + log_binomial(nk + rm1, rm1);
}

double b_cardinality_upper(std::size_t k, std::size_t n, std::size_t r)
{
    return std::exp(log_b_cardinality_upper(k, n, r));
}

double b_total_upper(std::size_t k, std::size_t n)
{
    double total = 0.0;
    for (std::size_t r = k; r <= max_parts(k, n); ++r) {
        total += b_cardinality_upper(k, n, r);
    }
    return total;
}

}  // namespace lcsrate
