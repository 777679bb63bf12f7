#pragma once

#include <Eigen/Core>

#include "anneal/problem.hpp"

namespace anneal {

/// Central-difference curvature of the cost at a point: the full symmetric
/// second-derivative matrix plus the per-parameter "standard deviations"
/// [d2L/da_i^2]^{-1/2}. Where the diagonal is non-positive the standard
/// deviation is undefined (NaN, defined[i] = false) rather than an error.
struct CurvatureReport {
    Eigen::MatrixXd hessian;
    Eigen::VectorXd standard_deviations;
    Eigen::Array<bool, Eigen::Dynamic, 1> defined;
};

/// Steps are fd_step_rel of each range width, shrunk so every probe stays
/// inside the box; fixed parameters contribute zero rows/columns.
CurvatureReport curvature_diagnostics(Problem const& problem,
                                      Eigen::VectorXd const& point,
                                      double fd_step_rel,
                                      long* cost_evaluations = nullptr);

}  // namespace anneal
