#include "anneal/reanneal.hpp"

#include <cmath>

#include "anneal/schedules.hpp"

namespace anneal {

namespace {
constexpr double kAcceptanceTemperatureFloor = 1e-18;
constexpr double kSensitivityGuard = 1e-12;  // relative to s_max
}  // namespace

SensitivityVector sensitivities(Problem const& problem,
                                Eigen::VectorXd const& point,
                                double fd_step_rel,
                                long* cost_evaluations)
{
    Eigen::Index const dim = problem.dimension();
    SensitivityVector result;
    result.values = Eigen::VectorXd::Zero(dim);

    double const base = problem.cost(point);
    if (cost_evaluations) ++*cost_evaluations;
    for (Eigen::Index i = 0; i < dim; ++i)
    {
        auto const& p = problem.parameters[static_cast<std::size_t>(i)];
        if (p.fixed()) continue;
        double h = fd_step_rel * p.width();
        if (point[i] + h > p.upper) h = -h;  // reflect at the upper bound
        Eigen::VectorXd probe = point;
        probe[i] += h;
        double const cost = problem.cost(probe);
        if (cost_evaluations) ++*cost_evaluations;
        if (!std::isfinite(cost) || !std::isfinite(base)) continue;  // leaves s_i = 0
        result.values[i] = std::abs((cost - base) / h);
    }

    result.max_value = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i)
        if (!problem.parameters[static_cast<std::size_t>(i)].fixed())
            result.max_value = std::max(result.max_value, result.values[i]);
    return result;
}

void reanneal_parameters(AnnealerState& state,
                         SensitivityVector const& sensitivities,
                         std::vector<ScheduleParams> const& schedules)
{
    double const s_max = sensitivities.max_value;
    if (!(s_max > 0.0)) return;  // flat cost: nothing to rescale

    for (Eigen::Index i = 0; i < state.temperatures.size(); ++i)
    {
        double const s = sensitivities.values[i];
        // s_i = 0 marks fixed or flat directions; near-zero values would
        // produce enormous ratios from numerical noise, so skip those too.
        if (!(s > kSensitivityGuard * s_max)) continue;
        auto const& sched = schedules[static_cast<std::size_t>(i)];
        double rescaled = state.temperatures[i] * (s_max / s);
        rescaled = std::min(rescaled, sched.initial_temperature);
        state.temperatures[i] = rescaled;
        state.indices[i] = index_for_temperature(rescaled, sched);
    }
}

void reanneal_acceptance(AnnealerState& state,
                         double best_cost,
                         double last_cost,
                         double current_cost)
{
    double const t0 = std::max({std::abs(current_cost), std::abs(best_cost),
                                kAcceptanceTemperatureFloor});
    double target = std::min({std::abs(current_cost), std::abs(best_cost),
                              std::abs(last_cost)});
    target = std::clamp(target, kAcceptanceTemperatureFloor, t0);

    state.acceptance_schedule.initial_temperature = t0;
    state.accept_temperature = target;
    state.accept_index = index_for_temperature(target, state.acceptance_schedule);
}

}  // namespace anneal
