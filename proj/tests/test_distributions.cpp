#include <doctest.h>

#include <cmath>
#include <vector>

#include "anneal/distributions.hpp"
#include "anneal/rng.hpp"
#include "support.hpp"

using namespace anneal;

TEST_CASE("asa_draw endpoints and center")
{
    CHECK(asa_draw(0.5, 1.0) == 0.0);
    CHECK(asa_draw(0.5, 1e-6) == 0.0);
    CHECK(asa_draw(1.0, 0.3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(asa_draw(0.0, 0.3) == doctest::Approx(-1.0).epsilon(1e-12));
    // Direct evaluation at u = 3/4, T = 1: sgn(1/4) * 1 * (2^{1/2} - 1).
    CHECK(asa_draw(0.75, 1.0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
    CHECK(asa_draw(0.75, 1.0) == doctest::Approx(0.41421356237309515).epsilon(1e-12));
}

TEST_CASE("asa_draw domain errors")
{
    CHECK_THROWS_AS(asa_draw(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(asa_draw(0.5, -1.0), std::domain_error);
    CHECK_THROWS_AS(asa_draw(0.5, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_THROWS_AS(asa_draw(1.5, 1.0), std::domain_error);
}

TEST_CASE("asa_cdf values and errors")
{
    CHECK(asa_cdf(0.0, 1.0) == 0.5);
    CHECK(asa_cdf(0.0, 1e-5) == 0.5);
    CHECK(asa_cdf(1.0, 0.01) == 1.0);
    CHECK(asa_cdf(-1.0, 0.01) == 0.0);
    CHECK(asa_cdf(0.41421356237309515, 1.0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_THROWS_AS(asa_cdf(1.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(asa_cdf(0.5, 0.0), std::domain_error);
}

TEST_CASE("asa draw/cdf round trip is exact to 1e-12")
{
    std::vector<double> const temperatures = {1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1, 0.5, 1.0};
    for (double t : temperatures)
    {
        for (int i = 0; i <= 256; ++i)
        {
            double const u = static_cast<double>(i) / 256.0;
            CHECK(asa_cdf(asa_draw(u, t), t) == doctest::Approx(u).epsilon(1e-12));
        }
    }
    Rng rng(7);
    for (int i = 0; i < 2000; ++i)
    {
        double const u = rng.uniform();
        double const t = std::pow(10.0, -6.0 * rng.uniform());
        double const back = asa_cdf(asa_draw(u, t), t);
        CHECK(std::abs(back - u) <= 1e-12);
    }
}

TEST_CASE("asa_density values and product form")
{
    Eigen::VectorXd y1(1), t1(1);
    y1 << 0.0;
    t1 << 1.0;
    double const center = 1.0 / (2.0 * std::log(2.0));
    CHECK(asa_density(y1, t1) == doctest::Approx(center).epsilon(1e-14));
    CHECK(asa_density(y1, t1) == doctest::Approx(0.72134752044448169).epsilon(1e-12));

    y1 << 1.0;
    CHECK(asa_density(y1, t1) == doctest::Approx(1.0 / (4.0 * std::log(2.0))).epsilon(1e-14));
    CHECK(asa_density(y1, t1) == doctest::Approx(0.36067376022224085).epsilon(1e-12));

    Eigen::VectorXd y2(2), t2(2);
    y2 << 0.0, 0.0;
    t2 << 1.0, 1.0;
    CHECK(asa_density(y2, t2) == doctest::Approx(center * center).epsilon(1e-14));

    Eigen::VectorXd t_bad(1);
    t_bad << 1.0;
    CHECK_THROWS_AS(asa_density(y2, t_bad), std::invalid_argument);
}

TEST_CASE("asa_density integrates to one")
{
    for (double t : {1e-4, 1e-2, 1.0})
    {
        auto density = [t](double y) { return asa_density_1d(y, t); };
        // Split at the kink.
        double const total = testsupport::integrate(density, -1.0, 0.0)
                             + testsupport::integrate(density, 0.0, 1.0);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("asa_draw samples match asa_cdf (KS)")
{
    double const t = 0.01;
    Rng rng(12345);
    std::vector<double> samples(1000000);
    for (auto& s : samples) s = asa_draw(rng.uniform(), t);
    double const stat =
        testsupport::ks_statistic(samples, [t](double y) { return asa_cdf(y, t); });
    CHECK(stat < 0.002);
}

TEST_CASE("boltzmann_draw moments")
{
    Rng rng(99);
    int const n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += boltzmann_draw(rng, 1.0, 1)[0];
    CHECK(std::abs(sum / n) < 0.02);

    double sq = 0.0;
    double mean_sum = 0.0;
    for (int i = 0; i < n; ++i)
    {
        double const x = boltzmann_draw(rng, 2.0, 1)[0];
        mean_sum += x;
        sq += x * x;
    }
    double const mean = mean_sum / n;
    double const variance = sq / n - mean * mean;
    CHECK(variance == doctest::Approx(2.0).epsilon(0.05));

    // T -> 0 concentrates at the origin.
    for (int i = 0; i < 1000; ++i)
        CHECK(std::abs(boltzmann_draw(rng, 1e-12, 1)[0]) < 1e-3);

    CHECK_THROWS_AS(boltzmann_draw(rng, 0.0, 1), std::domain_error);
}

TEST_CASE("cauchy_draw product-mode law")
{
    Rng rng(4242);
    int const n = 100000;
    std::vector<double> magnitudes(n);
    int negative = 0;
    int tail = 0;
    for (int i = 0; i < n; ++i)
    {
        double const x = cauchy_draw(rng, 1.0, 1)[0];
        magnitudes[static_cast<std::size_t>(i)] = std::abs(x);
        if (x < 0.0) ++negative;
        if (std::abs(x) > 10.0) ++tail;
    }
    // Quartiles of the unit Cauchy sit at +-scale.
    CHECK(testsupport::median(magnitudes) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(static_cast<double>(negative) / n == doctest::Approx(0.5).epsilon(0.02));
    double const expected_tail = 2.0 / 3.14159265358979323846 * std::atan(0.1);
    CHECK(std::abs(static_cast<double>(tail) / n - expected_tail) < 0.005);

    CHECK_THROWS_AS(cauchy_draw(rng, -1.0, 1), std::domain_error);
}

TEST_CASE("cauchy_draw isotropic mode is symmetric with Cauchy marginals")
{
    Rng rng(77);
    int const n = 50000;
    int negative = 0;
    std::vector<double> first(n);
    for (int i = 0; i < n; ++i)
    {
        Eigen::VectorXd const step = cauchy_draw(rng, 1.0, 3, CauchyMode::Isotropic);
        first[static_cast<std::size_t>(i)] = std::abs(step[0]);
        if (step[0] < 0.0) ++negative;
    }
    CHECK(static_cast<double>(negative) / n == doctest::Approx(0.5).epsilon(0.02));
    // Marginal of the isotropic law is a one-dimensional Cauchy of the same scale.
    CHECK(testsupport::median(first) == doctest::Approx(1.0).epsilon(0.08));
}

TEST_CASE("acceptance probability forms")
{
    CHECK(acceptance_probability(-5.0, 1.0) == 1.0);
    CHECK(acceptance_probability(1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(acceptance_probability(0.0, 1.0, AcceptanceForm::logistic()) == 0.5);
    CHECK(acceptance_probability(2.5, 0.5, AcceptanceForm::metropolis())
          == doctest::Approx(std::exp(-5.0)).epsilon(1e-14));
    // Overflow guard: huge ratios saturate instead of producing inf/0 traps.
    CHECK(acceptance_probability(1e6, 1e-3) < 1e-300);  // clamped exponent, e^-700
    CHECK(acceptance_probability(-1e6, 1e-3) == 1.0);
    CHECK_THROWS_AS(acceptance_probability(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(acceptance_probability(std::numeric_limits<double>::quiet_NaN(), 1.0),
                    std::domain_error);
}

TEST_CASE("acceptance monotone in cost delta and temperature")
{
    std::vector<AcceptanceForm> const forms = {AcceptanceForm::metropolis(),
                                               AcceptanceForm::logistic(),
                                               AcceptanceForm::tsallis(0.5),
                                               AcceptanceForm::tsallis(2.0)};
    for (auto const& form : forms)
    {
        for (double ta : {0.1, 1.0, 10.0})
        {
            double previous = 2.0;
            for (double de = 0.0; de <= 20.0; de += 0.25)
            {
                double const p = acceptance_probability(de, ta, form);
                CHECK(p <= previous + 1e-15);
                CHECK(p >= 0.0);
                CHECK(p <= 1.0);
                previous = p;
            }
        }
        for (double de : {0.5, 2.0, 8.0})
        {
            double previous = -1.0;
            for (double ta = 0.1; ta <= 30.0; ta *= 1.5)
            {
                double const p = acceptance_probability(de, ta, form);
                CHECK(p >= previous - 1e-15);
                previous = p;
            }
        }
    }
}

TEST_CASE("tsallis approaches metropolis as q -> 1")
{
    auto const nearly_one = AcceptanceForm::tsallis(1.0 + 1e-6);
    for (double ratio = 0.0; ratio <= 10.0; ratio += 0.05)
    {
        double const difference = std::abs(acceptance_probability(ratio, 1.0, nearly_one)
                                           - acceptance_probability(ratio, 1.0));
        CHECK(difference < 1e-4);
    }
    CHECK_THROWS_AS(AcceptanceForm::tsallis(1.0), std::invalid_argument);
    // q < 1 cuts off at finite cost increase; q > 1 accepts all improvements.
    CHECK(acceptance_probability(3.0, 1.0, AcceptanceForm::tsallis(0.5)) == 0.0);
    CHECK(acceptance_probability(-100.0, 1.0, AcceptanceForm::tsallis(2.0)) == 1.0);
}

TEST_CASE("two-state detailed balance")
{
    double const e1 = 0.3, e2 = 1.7, ta = 0.9;
    double const pi1 = std::exp(-e1 / ta);
    double const pi2 = std::exp(-e2 / ta);
    double const p12 = acceptance_probability(e2 - e1, ta);
    double const p21 = acceptance_probability(e1 - e2, ta);
    CHECK(pi1 * p12 == doctest::Approx(pi2 * p21).epsilon(1e-15));
}

TEST_CASE("acceptance test draws")
{
    // At dE = Ta the threshold is e^{-1}; a uniform of 0.5 rejects.
    CHECK_FALSE(accept_candidate(0.5, 1.0, 1.0));
    CHECK(accept_candidate(0.3, 1.0, 1.0));
    CHECK(accept_candidate(0.999999, -0.1, 1.0));

    Rng rng(2024);
    int const n = 100000;
    int accepted = 0;
    for (int i = 0; i < n; ++i)
        if (accept_candidate(rng.uniform(), 1.0, 1.0)) ++accepted;
    CHECK(std::abs(static_cast<double>(accepted) / n - std::exp(-1.0)) < 0.01);
}
