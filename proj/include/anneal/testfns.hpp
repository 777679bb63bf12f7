#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "anneal/problem.hpp"

namespace anneal {

/// Corana's highly multimodal 4-parameter test function: a paraboloid
/// d_i x_i^2 carved into flat rectangular valleys of period 0.2. The global
/// minimum value 0 fills the plateau max|x_i| < 0.05.
double corana(Eigen::VectorXd const& x);

/// Two-dimensional Shubert function, the product of two five-term cosine
/// sums; 18 global minima of value -186.7309 among hundreds of local ones
/// over [-10, 10]^2.
double shubert(Eigen::VectorXd const& x);

/// Sum of squares; smoke-test landscape with its minimum at the origin.
double sphere(Eigen::VectorXd const& x);

struct BenchmarkProblem {
    std::string name;
    Problem problem;
    double global_minimum = 0.0;
    std::optional<int> minimizer_count;
    double target_tolerance = 0.0;
};

std::vector<std::string> catalog_names();

/// Benchmark problem by name ("corana", "shubert", "sphere"); dimension is
/// honored only by dimension-flexible entries (sphere). Unknown names throw
/// with the list of available problems.
BenchmarkProblem catalog(std::string const& name, std::optional<int> dimension = {});

}  // namespace anneal
