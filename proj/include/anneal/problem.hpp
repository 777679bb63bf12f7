#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace anneal {

enum class ParameterKind { Real, Integer };

/// One bounded search coordinate. A zero-width range (lower == upper) pins
/// the parameter; pinned parameters are never perturbed and do not count
/// toward the effective dimension of the annealing schedules.
struct ParameterSpec {
    std::string name;
    double lower = 0.0;
    double upper = 0.0;
    ParameterKind kind = ParameterKind::Real;
    double initial = 0.0;

    bool fixed() const { return !(upper > lower); }
    double width() const { return upper - lower; }

    void validate() const
    {
        if (!(lower <= upper))
            throw std::invalid_argument("parameter '" + name + "': lower bound exceeds upper bound");
        if (!(initial >= lower && initial <= upper))
            throw std::invalid_argument("parameter '" + name + "': initial value outside range");
        if (kind == ParameterKind::Integer
            && std::ceil(lower) > std::floor(upper))
            throw std::invalid_argument("parameter '" + name + "': no integer inside range");
    }
};

using CostFunction = std::function<double(Eigen::VectorXd const&)>;
using FeasiblePredicate = std::function<bool(Eigen::VectorXd const&)>;

/// The system under optimization: a cost function over an axis-aligned box
/// of mixed real/integer parameters, plus an optional feasibility predicate
/// evaluated before any cost call.
struct Problem {
    std::vector<ParameterSpec> parameters;
    CostFunction cost;
    FeasiblePredicate feasible;  // may be empty

    Eigen::Index dimension() const { return static_cast<Eigen::Index>(parameters.size()); }

    int effective_dimension() const
    {
        int d = 0;
        for (auto const& p : parameters)
            if (!p.fixed()) ++d;
        return d;
    }

    Eigen::VectorXd initial_point() const
    {
        Eigen::VectorXd x(dimension());
        for (Eigen::Index i = 0; i < dimension(); ++i)
            x[i] = parameters[static_cast<std::size_t>(i)].initial;
        return x;
    }

    bool in_range(Eigen::VectorXd const& x) const
    {
        for (Eigen::Index i = 0; i < dimension(); ++i)
        {
            auto const& p = parameters[static_cast<std::size_t>(i)];
            if (x[i] < p.lower || x[i] > p.upper) return false;
        }
        return true;
    }

    bool is_feasible(Eigen::VectorXd const& x) const { return !feasible || feasible(x); }

    void validate() const
    {
        if (parameters.empty())
            throw std::invalid_argument("problem has no parameters");
        if (!cost)
            throw std::invalid_argument("problem has no cost function");
        for (auto const& p : parameters)
            p.validate();
    }
};

/// Convenience builder for an unnamed all-real box problem.
inline Problem make_box_problem(Eigen::VectorXd const& lower,
                                Eigen::VectorXd const& upper,
                                Eigen::VectorXd const& initial,
                                CostFunction cost)
{
    if (lower.size() != upper.size() || lower.size() != initial.size())
        throw std::invalid_argument("bound/initial dimensions differ");
    Problem problem;
    problem.cost = std::move(cost);
    problem.parameters.reserve(static_cast<std::size_t>(lower.size()));
    for (Eigen::Index i = 0; i < lower.size(); ++i)
        problem.parameters.push_back({"x" + std::to_string(i + 1),
                                      lower[i], upper[i], ParameterKind::Real, initial[i]});
    return problem;
}

}  // namespace anneal
