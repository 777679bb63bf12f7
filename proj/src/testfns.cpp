#include "anneal/testfns.hpp"

#include <cmath>
#include <stdexcept>

#include "anneal/distributions.hpp"

namespace anneal {

double corana(Eigen::VectorXd const& x)
{
    if (x.size() != 4)
        throw std::invalid_argument("corana expects a 4-dimensional point");
    constexpr double s = 0.2;
    constexpr double t = 0.05;
    constexpr double d[4] = {1.0, 1000.0, 10.0, 100.0};
    double total = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i)
    {
        double const z = std::trunc(std::abs(x[i]) / s + 0.49999) * s * sign(x[i]);
        if (std::abs(x[i] - z) < t)
        {
            double const w = z - 0.05 * sign(z);
            total += 0.15 * w * w * d[i];
        }
        else
        {
            total += d[i] * x[i] * x[i];
        }
    }
    return total;
}

namespace {

double shubert_factor(double v)
{
    double sum = 0.0;
    for (int j = 1; j <= 5; ++j)
        sum += j * std::cos((j + 1) * v + j);
    return sum;
}

}  // namespace

double shubert(Eigen::VectorXd const& x)
{
    if (x.size() != 2)
        throw std::invalid_argument("shubert expects a 2-dimensional point");
    return shubert_factor(x[0]) * shubert_factor(x[1]);
}

double sphere(Eigen::VectorXd const& x)
{
    return x.squaredNorm();
}

std::vector<std::string> catalog_names() { return {"corana", "shubert", "sphere"}; }

BenchmarkProblem catalog(std::string const& name, std::optional<int> dimension)
{
    auto check_dimension = [&](int required) {
        if (dimension && *dimension != required)
            throw std::invalid_argument("problem '" + name + "' is fixed at dimension "
                                        + std::to_string(required));
    };

    BenchmarkProblem bench;
    bench.name = name;
    if (name == "corana")
    {
        check_dimension(4);
        double const initial[4] = {1000.0, -1000.0, 1000.0, -1000.0};
        for (int i = 0; i < 4; ++i)
            bench.problem.parameters.push_back({"x" + std::to_string(i + 1), -10000.0,
                                                10000.0, ParameterKind::Real, initial[i]});
        bench.problem.cost = corana;
        bench.global_minimum = 0.0;
        bench.target_tolerance = 1e-6;
    }
    else if (name == "shubert")
    {
        check_dimension(2);
        for (int i = 0; i < 2; ++i)
            bench.problem.parameters.push_back({"x" + std::to_string(i + 1), -10.0, 10.0,
                                                ParameterKind::Real, 1.0});
        bench.problem.cost = shubert;
        bench.global_minimum = -186.7309;
        bench.minimizer_count = 18;
        bench.target_tolerance = 1e-3;
    }
    else if (name == "sphere")
    {
        int const dim = dimension.value_or(2);
        if (dim < 1) throw std::invalid_argument("sphere needs dimension >= 1");
        for (int i = 0; i < dim; ++i)
            bench.problem.parameters.push_back({"x" + std::to_string(i + 1), -5.0, 5.0,
                                                ParameterKind::Real, 4.0});
        bench.problem.cost = sphere;
        bench.global_minimum = 0.0;
        bench.minimizer_count = 1;
        bench.target_tolerance = 1e-4;
    }
    else
    {
        std::string names;
        for (auto const& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown problem '" + name + "'; available: " + names);
    }
    return bench;
}

}  // namespace anneal
