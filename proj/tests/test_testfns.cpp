#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "anneal/rng.hpp"
#include "anneal/testfns.hpp"

using namespace anneal;

namespace {

Eigen::VectorXd v4(double a, double b, double c, double d)
{
    Eigen::VectorXd x(4);
    x << a, b, c, d;
    return x;
}

Eigen::VectorXd v2(double a, double b)
{
    Eigen::VectorXd x(2);
    x << a, b;
    return x;
}

double shubert_sum(double v)
{
    double s = 0.0;
    for (int j = 1; j <= 5; ++j) s += j * std::cos((j + 1) * v + j);
    return s;
}

/// Compass-search polish used by the minimum census.
Eigen::Vector2d polish(Eigen::Vector2d point, double step)
{
    auto f = [](Eigen::Vector2d const& p) { return shubert(Eigen::VectorXd(p)); };
    double best = f(point);
    while (step > 1e-10)
    {
        bool moved = false;
        for (int axis = 0; axis < 2; ++axis)
        {
            for (double direction : {+1.0, -1.0})
            {
                Eigen::Vector2d probe = point;
                probe[axis] += direction * step;
                if (probe[axis] < -10.0 || probe[axis] > 10.0) continue;
                double const value = f(probe);
                if (value < best)
                {
                    best = value;
                    point = probe;
                    moved = true;
                }
            }
        }
        if (!moved) step *= 0.5;
    }
    return point;
}

}  // namespace

TEST_CASE("corana values")
{
    CHECK(corana(v4(0, 0, 0, 0)) == 0.0);
    // Hand expansion: every coordinate sits in the z = 1 valley, so the value
    // is 0.15 * 0.95^2 * (1 + 1000 + 10 + 100).
    CHECK(corana(v4(1, 1, 1, 1))
          == doctest::Approx(0.15 * 0.95 * 0.95 * 1111.0).epsilon(1e-15));
    CHECK(corana(v4(1, 1, 1, 1)) == doctest::Approx(150.401625).epsilon(1e-12));
    CHECK(corana(v4(0.049, 0, 0, 0)) == 0.0);
    CHECK_THROWS_AS(corana(Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST_CASE("corana global plateau is exactly zero")
{
    Rng rng(31337);
    for (int i = 0; i < 2000; ++i)
    {
        Eigen::VectorXd x(4);
        for (int d = 0; d < 4; ++d) x[d] = (rng.uniform() - 0.5) * 2.0 * 0.0499999;
        CHECK(corana(x) == 0.0);
    }
}

TEST_CASE("corana valleys repeat with period 0.2 along an axis")
{
    for (int k = 1; k <= 10; ++k)
    {
        double const z = 0.2 * k;
        double const plateau = 0.15 * (z - 0.05) * (z - 0.05) * 1.0;
        // Constant inside the valley around z...
        for (double delta : {-0.04, -0.01, 0.0, 0.02, 0.04})
            CHECK(corana(v4(z + delta, 0, 0, 0)) == doctest::Approx(plateau).epsilon(1e-12));
        // ...and the paraboloid in between.
        double const outside = z + 0.07;
        CHECK(corana(v4(outside, 0, 0, 0)) == doctest::Approx(outside * outside).epsilon(1e-12));
        CHECK(corana(v4(-outside, 0, 0, 0)) == corana(v4(outside, 0, 0, 0)));
    }
}

TEST_CASE("shubert values and symmetry")
{
    double const f00 = shubert_sum(0.0) * shubert_sum(0.0);
    CHECK(shubert(v2(0, 0)) == doctest::Approx(f00).epsilon(1e-15));
    CHECK(shubert_sum(0.0) == doctest::Approx(-4.458232).epsilon(1e-6));
    CHECK(shubert(v2(0, 0)) == doctest::Approx(19.875834).epsilon(1e-6));

    Rng rng(8);
    for (int i = 0; i < 200; ++i)
    {
        double const a = (rng.uniform() - 0.5) * 20.0;
        double const b = (rng.uniform() - 0.5) * 20.0;
        CHECK(shubert(v2(a, b)) == shubert(v2(b, a)));
    }
    CHECK_THROWS_AS(shubert(Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST_CASE("shubert census: 18 global minima at -186.7309")
{
    // Grid sweep (product structure makes the 2000x2000 evaluation cheap),
    // then a compass polish of every deep grid-local minimum.
    int const n = 2000;
    double const h = 20.0 / (n - 1);
    std::vector<double> axis(n), factor(n);
    for (int i = 0; i < n; ++i)
    {
        axis[i] = -10.0 + h * i;
        factor[i] = shubert_sum(axis[i]);
    }
    auto value = [&](int i, int j) { return factor[i] * factor[j]; };

    std::vector<Eigen::Vector2d> candidates;
    for (int i = 1; i + 1 < n; ++i)
    {
        for (int j = 1; j + 1 < n; ++j)
        {
            double const f = value(i, j);
            if (f > -170.0) continue;
            bool is_local_min = true;
            for (int di = -1; di <= 1 && is_local_min; ++di)
                for (int dj = -1; dj <= 1; ++dj)
                {
                    if (di == 0 && dj == 0) continue;
                    if (value(i + di, j + dj) < f)
                    {
                        is_local_min = false;
                        break;
                    }
                }
            if (is_local_min) candidates.emplace_back(axis[i], axis[j]);
        }
    }
    REQUIRE(candidates.size() >= 18);

    std::vector<Eigen::Vector2d> minima;
    for (auto const& start : candidates)
    {
        Eigen::Vector2d const refined = polish(start, h);
        if (shubert(Eigen::VectorXd(refined)) >= -186.72) continue;
        bool duplicate = false;
        for (auto const& known : minima)
            if ((known - refined).norm() <= 0.1)
            {
                duplicate = true;
                break;
            }
        if (!duplicate) minima.push_back(refined);
    }
    CHECK(minima.size() == 18);
    for (auto const& m : minima)
        CHECK(shubert(Eigen::VectorXd(m)) == doctest::Approx(-186.7309).epsilon(1e-3 / 186.0));
}

TEST_CASE("sphere")
{
    CHECK(sphere(Eigen::VectorXd::Zero(5)) == 0.0);
    CHECK(sphere(v2(3, 4)) == 25.0);
    CHECK(sphere(Eigen::VectorXd::Ones(4)) == 4.0);
}

TEST_CASE("catalog entries")
{
    BenchmarkProblem const shubert_problem = catalog("shubert");
    CHECK(shubert_problem.problem.parameters.size() == 2);
    CHECK(shubert_problem.global_minimum == -186.7309);
    CHECK(shubert_problem.target_tolerance ==  1e-3);
    CHECK(shubert_problem.minimizer_count == 18);
    CHECK(shubert_problem.problem.parameters[0].lower == -10.0);

    BenchmarkProblem const corana_problem = catalog("corana");
    CHECK(corana_problem.problem.parameters.size() == 4);
    CHECK(corana_problem.problem.parameters[0].lower == -10000.0);
    CHECK(corana_problem.problem.parameters[0].upper == 10000.0);
    CHECK(corana_problem.global_minimum == 0.0);
    CHECK(corana_problem.target_tolerance == 1e-6);

    BenchmarkProblem const sphere_problem = catalog("sphere", 6);
    CHECK(sphere_problem.problem.parameters.size() == 6);

    CHECK_THROWS_WITH_AS(catalog("noSuch"), doctest::Contains("available"),
                         std::invalid_argument);
    CHECK_THROWS_AS(catalog("shubert", 3), std::invalid_argument);
}
