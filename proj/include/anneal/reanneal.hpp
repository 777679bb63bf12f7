#pragma once

#include <Eigen/Core>

#include "anneal/annealer.hpp"
#include "anneal/problem.hpp"

namespace anneal {

/// Cost-gradient magnitudes |dL/da_i| at a point, used as the relative
/// steepness measure for rescaling. Fixed parameters get s_i = 0 and are
/// excluded from the maximum.
struct SensitivityVector {
    Eigen::VectorXd values;
    double max_value = 0.0;
};

/// One-sided finite differences at the given point (normally the current
/// best), step fd_step_rel relative to each range width, reflected at the
/// upper bound. A failed probe (non-finite cost) yields s_i = 0.
/// cost_evaluations, when given, is incremented per cost call.
SensitivityVector sensitivities(Problem const& problem,
                                Eigen::VectorXd const& point,
                                double fd_step_rel,
                                long* cost_evaluations = nullptr);

/// Rescales parameter temperatures by s_max/s_i (insensitive parameters end
/// hotter, stretching their searched range) and rewrites each annealing
/// index through the schedule inverse. Temperatures are capped at their
/// initial value; parameters with s_i below 1e-12 * s_max are left alone.
/// No-op when s_max = 0.
void reanneal_parameters(AnnealerState& state,
                         SensitivityVector const& sensitivities,
                         std::vector<ScheduleParams> const& schedules);

/// Resets the acceptance scale: T_a0 becomes max(|current|, |best|) and the
/// acceptance temperature is re-aimed at min(|current|, |best|, |last|),
/// both floored at 1e-18, with the index rewritten through the inverse.
void reanneal_acceptance(AnnealerState& state,
                         double best_cost,
                         double last_cost,
                         double current_cost);

}  // namespace anneal
