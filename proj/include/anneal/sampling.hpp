#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "anneal/config.hpp"

namespace anneal {

/// One generated state together with the biases the engine applied to it:
/// the generating density (in parameter coordinates) it was drawn from and
/// the acceptance probability it faced. Rejected states are recorded too;
/// they carry the same weight information as accepted ones.
struct SampleRecord {
    long generated_index = 0;
    Eigen::VectorXd point;
    double cost = 0.0;
    double generation_density = 0.0;   // g > 0
    double acceptance_probability = 0.0;
    bool accepted = false;
};

/// Generating density of a relative step at the given temperatures, mapped
/// to parameter coordinates by the 1/(B - A) range Jacobian. `axis` < 0
/// means every free coordinate was perturbed (all-coordinates mode);
/// otherwise only that coordinate contributes.
double generation_density(Eigen::VectorXd const& step,
                          Eigen::VectorXd const& temperatures,
                          Eigen::VectorXd const& widths,
                          Algorithm algorithm,
                          CauchyMode fa_mode,
                          int axis);

struct ExpectationEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    double effective_sample_size = 0.0;
};

/// Self-normalized importance estimate of E[f] over the sampled box using
/// weights 1/g across all generated points, accepted or not. The standard
/// error comes from the weighted-variance (effective-sample-size) formula.
ExpectationEstimate
estimate_expectation(std::span<SampleRecord const> records,
                     std::function<double(Eigen::VectorXd const&)> const& observable);

}  // namespace anneal
