#include <doctest.h>

#include <cmath>

#include "lcsrate/bounds.hpp"
#include "lcsrate/errors.hpp"

using namespace lcsrate;

// Reference values below come from direct evaluation at 40 digits
// (tests/oracle/expected_values.py).

TEST_CASE("q_bound")
{
    CHECK(q_bound(2, 1.0, 1.0) == doctest::Approx(std::sqrt(6.0) + 1.0));
    CHECK(q_bound(2, 4.0, 0.5) == doctest::Approx(2.0 * std::sqrt(6.0) + 0.5));
    CHECK(std::abs(q_bound(100000, 1.0, 1.0) - 0.0158296464903) <= 1e-12);
    CHECK(std::abs(q_bound(10, 1.0, 1.0) - 0.982820389809) <= 1e-11);
    CHECK(std::abs(q_bound(10000, 1.0, 1.0) - 0.0452917382997) <= 1e-12);
    // Larger c strictly loosens.
    CHECK(q_bound(100, 1.0, 1.0, 1.5) > q_bound(100, 1.0, 1.0));
}

TEST_CASE("q_bound odd n uses n - 1")
{
    CHECK(q_bound(11, 1.0, 1.0) == q_bound(10, 1.0, 1.0));
    CHECK(q_bound(3, 0.3, 1.0) == q_bound(2, 0.3, 1.0));
    CHECK(even_floor(7) == 6);
    CHECK(even_floor(8) == 8);
}

TEST_CASE("q_bound domain")
{
    CHECK_THROWS_AS(q_bound(1, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(q_bound(0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(q_bound(10, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(q_bound(10, 1.0, -1.0), DomainError);
}

TEST_CASE("alexander_bound")
{
    CHECK(std::abs(alexander_bound(10, 1.0) - 0.479852591219) <= 1e-11);
    CHECK(std::abs(alexander_bound(100000) - 0.0377690020627) <= 1e-12);
    CHECK(std::abs(alexander_bound(10000) - 0.106826869909) <= 1e-11);
    CHECK(alexander_bound(500, 0.0) == 0.0);
    CHECK_THROWS_AS(alexander_bound(1), DomainError);
}

TEST_CASE("mcdiarmid_tail")
{
    CHECK(mcdiarmid_tail(0.0, 10, 1.0) == 1.0);
    CHECK(mcdiarmid_tail(2.0 * std::sqrt(50.0), 50, 2.0) == doctest::Approx(std::exp(-1.0)));
    const double rho = sampling_radius(100000, 2, 1.0, 0.05, false);
    CHECK(std::abs(mcdiarmid_tail(rho * 200000.0, 200000, 1.0) - 0.05) <= 1e-12);
    CHECK(mcdiarmid_tail(1.0, 10, 1.0) > mcdiarmid_tail(2.0, 10, 1.0));
    CHECK_THROWS_AS(mcdiarmid_tail(-1.0, 10, 1.0), DomainError);
}

TEST_CASE("sampling_radius")
{
    CHECK(std::abs(sampling_radius(100000, 2, 1.0, 0.05, true) - 0.00429469408347) <= 1e-13);
    CHECK(std::abs(sampling_radius(100000, 2, 1.0, 0.05, false) - 0.0038702275602) <= 1e-13);
    CHECK(sampling_radius(10, 3, 1.0, 1.0, false) == 0.0);
    CHECK(sampling_radius(100, 8, 1.0, 0.05, true) == doctest::Approx(sampling_radius(100, 2, 1.0, 0.05, true) / 2.0));
    CHECK(sampling_radius(200, 2, 1.0, 0.05, true) < sampling_radius(100, 2, 1.0, 0.05, true));
    CHECK_THROWS_AS(sampling_radius(10, 1, 1.0, 0.0, true), DomainError);
    CHECK_THROWS_AS(sampling_radius(10, 1, 1.0, 1.5, true), DomainError);
    CHECK_THROWS_AS(sampling_radius(0, 1, 1.0, 0.05, true), DomainError);
}

TEST_CASE("one_sided_upper")
{
    BoundParams p{100000, 2, 1.0, 1.0, 0.05, {}};
    CHECK(std::abs(one_sided_upper(0.8, p) - 0.819699874051) <= 1e-11);

    auto doubled = p;
    doubled.k = 4;
    CHECK(one_sided_upper(0.8, doubled) < one_sided_upper(0.8, p));

    // As A shrinks the bound collapses to mean + F/(n-1).
    BoundParams tiny{100000, 2, 1e-12, 1.0, 0.05, {}};
    CHECK(one_sided_upper(0.0, tiny) == doctest::Approx(1.0 / 99999.0).epsilon(1e-4));
}

TEST_CASE("point_estimate")
{
    const BoundParams p{100000, 2, 1.0, 1.0, 0.05, {}};
    const auto r = point_estimate(0.8, p);
    CHECK(std::abs(r.radius - 0.0122) <= 5e-4);
    CHECK(std::abs(r.radius - 0.0122095173286) <= 1e-12);
    CHECK(r.l_hat == doctest::Approx(0.8 + r.q_value / 2.0));
    CHECK(r.radius - r.sampling_radius == doctest::Approx(r.q_value / 2.0));
    CHECK(r.lower == doctest::Approx(r.l_hat - r.radius));
    CHECK(r.upper == doctest::Approx(r.l_hat + r.radius));
    CHECK(r.lower <= r.l_hat);
    CHECK(r.l_hat <= r.upper);

    auto wide = p;
    wide.epsilon = 0.5;
    CHECK(point_estimate(0.8, wide).radius < r.radius);
}

TEST_CASE("bound params validation")
{
    BoundParams p{100, 2, 1.0, 1.0, 0.05, {}};
    CHECK_NOTHROW(p.validate());
    CHECK(p.c() == 1.0);
    p.c_mult = 0.9;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.c_mult = 1.0;
    CHECK_NOTHROW(p.validate());
    p.epsilon = 1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.epsilon = 0.05;
    p.n = 1;
    CHECK_THROWS_AS(point_estimate(0.0, p), DomainError);
}

TEST_CASE("psi")
{
    CHECK(psi(1) == 6.0);
    CHECK(std::abs(psi(3) - 1.20377516497) <= 1e-11);
    for (std::size_t n = 1; n < 2000; ++n) {
        REQUIRE(psi(n + 1) < psi(n));
    }
    // Plugging u = sqrt(A psi(n)) into the rate bound at 2n with F = 0.
    for (std::size_t n : {1u, 2u, 5u, 50u, 12345u}) {
        for (double a : {0.1, 1.0, 2.0}) {
            CHECK(q_bound(2 * n, a, 0.0, std::sqrt(a)) == doctest::Approx(std::sqrt(a * psi(n))).epsilon(1e-14));
        }
    }
}

TEST_CASE("binary_entropy")
{
    CHECK(binary_entropy(0.5) == doctest::Approx(std::log(2.0)));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(std::abs(binary_entropy(2.0 / 7.0) - 0.598269588585) <= 1e-11);
    for (double q = 0.0; q <= 0.5; q += 0.01) {
        CHECK(binary_entropy(q) == doctest::Approx(binary_entropy(1.0 - q)));
        CHECK(binary_entropy(q) <= std::log(2.0) + 1e-15);
    }
    CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
}

TEST_CASE("b_cardinality_upper")
{
    CHECK(b_cardinality_upper(2, 2, 2) == doctest::Approx(40.0));
    CHECK(b_cardinality_upper(2, 2, 3) == doctest::Approx(240.0));
    for (std::size_t n : {1u, 2u, 7u}) {
        CHECK(b_cardinality_upper(1, n, 1) == doctest::Approx(2.0 * static_cast<double>(n)));
    }
    CHECK(max_parts(4, 3) == 5);
    CHECK(max_parts(2, 2) == 3);
    CHECK(max_parts(1, 1) == 2);
    CHECK(b_total_upper(2, 2) == doctest::Approx(280.0));
    CHECK_THROWS_AS(b_cardinality_upper(2, 2, 1), DomainError);
    CHECK_THROWS_AS(b_cardinality_upper(2, 2, 4), DomainError);
    // Stays finite where the direct product would overflow.
    CHECK(std::isfinite(log_b_cardinality_upper(5000, 50, 5050)));
}

TEST_CASE("rate bound properties")
{
    SUBCASE("dominance over the Alexander bound")
    {
        for (double a : {0.1, 0.5, 1.0, 2.0})
            for (std::size_t n = 10; n <= 10000; n += 2)
                REQUIRE(q_bound(n, a, 1.0) < alexander_bound(n));
    }
    SUBCASE("strictly decreasing in even n")
    {
        double prev = q_bound(4, 1.0, 1.0);
        for (std::size_t n = 6; n <= 1000000; n += 2) {
            const double q = q_bound(n, 1.0, 1.0);
            REQUIRE(q < prev);
            prev = q;
        }
    }
    SUBCASE("one long sample beats k short ones")
    {
        for (std::size_t n = 4; n <= 3000; n += 2)
            for (std::size_t k = 2; k <= 12; ++k) REQUIRE(q_bound(k * n, 0.7, 1.0) < q_bound(n, 0.7, 1.0));
    }
    SUBCASE("entropy inequality")
    {
        for (std::size_t n = 2; n <= 1000000; ++n) {
            const double m = static_cast<double>(n);
            const double q = 2.0 / (2.0 * m + 1.0);
            REQUIRE(binary_entropy(q) <= q * ((2.0 * m + 1.0) / (2.0 * m - 1.0) + std::log((2.0 * m - 1.0) / 2.0)));
        }
    }
    SUBCASE("binomial entropy bound")
    {
        for (int a = 2; a <= 200; ++a)
            for (int b = 1; b < a; ++b)
                REQUIRE(log_binomial(a, b) <= binary_entropy(static_cast<double>(b) / a) * a + 1e-12);
    }
}
