#pragma once

#include <cstddef>
#include <optional>

namespace lcsrate {

/// Constant of the earlier LCS rate bound C*sqrt(ln n / n): 3.42 + 0.1.
inline constexpr double kAlexanderC = 3.52;

/// Largest even integer <= n. Used wherever a bound holds only for even n:
/// l_n is nondecreasing, so l - l_n <= l - l_{n-1}.
constexpr std::size_t even_floor(std::size_t n) noexcept { return n - (n % 2); }

/// Upper bound on l - l_n:
///   c * sqrt(2/(n-1) * ((n+1)/(n-1) + ln(n-1))) + F/(n-1).
/// Odd n is evaluated at n-1. Requires n >= 2, A > 0, F >= 0, c > 0.
double q_bound(std::size_t n, double a_max, double f_max, double c);
/// Same with c = sqrt(A).
double q_bound(std::size_t n, double a_max, double f_max);

/// C * sqrt(ln n / n); requires n >= 2.
double alexander_bound(std::size_t n, double c = kAlexanderC);

/// exp(-delta^2 / (m A^2)), the bounded-differences tail for a function of
/// 2m independent letters.
double mcdiarmid_tail(double delta, std::size_t m, double a_max);

/// A * sqrt(ln(1/eps) / (kn)), or ln(2/eps) when two-sided. eps in (0, 1].
double sampling_radius(std::size_t n, std::size_t k, double a_max, double eps, bool two_sided);

struct BoundParams {
    std::size_t n = 2;
    std::size_t k = 1;
    double a_max = 1.0;
    double f_max = 1.0;
    double epsilon = 0.05;
    /// Multiplier c of the rate bound; defaults to sqrt(A).
    std::optional<double> c_mult;

    double c() const;
    /// Throws DomainError on any violated invariant.
    void validate() const;
};

struct ConfidenceReport {
    double l_hat = 0.0;
    double radius = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double q_value = 0.0;
    double sampling_radius = 0.0;
};

/// l <= mean + Q_F(n, A) + A sqrt(ln(1/eps)/(kn)) with probability 1 - eps.
double one_sided_upper(double mean, const BoundParams& p);

/// l_hat = mean + Q/2 with two-sided radius A sqrt(ln(2/eps)/(kn)) + Q/2.
ConfidenceReport point_estimate(double mean, const BoundParams& p);

/// psi(n) = 2/(2n-1) * ((2n+1)/(2n-1) + ln(2n-1)).
double psi(std::size_t n);

/// -q ln q - (1-q) ln(1-q), natural log, zero at both ends.
double binary_entropy(double q);

/// ln C(a, b) via log-gamma.
double log_binomial(double a, double b);

/// Largest part count of a partition of length-kn sequences: ceil(2kn / (2n-1)).
std::size_t max_parts(std::size_t k, std::size_t n);

/// ln of (2^(r-1) * 2n) * C(nk + r - 1, r - 1), the bound on |B^r_{k,n}|.
double log_b_cardinality_upper(std::size_t k, std::size_t n, std::size_t r);
double b_cardinality_upper(std::size_t k, std::size_t n, std::size_t r);
/// Sum of the per-r bounds over r = k .. max_parts(k, n).
double b_total_upper(std::size_t k, std::size_t n);

}  // namespace lcsrate
