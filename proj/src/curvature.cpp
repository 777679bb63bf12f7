#include "anneal/curvature.hpp"

#include <cmath>
#include <limits>

namespace anneal {

CurvatureReport curvature_diagnostics(Problem const& problem,
                                      Eigen::VectorXd const& point,
                                      double fd_step_rel,
                                      long* cost_evaluations)
{
    Eigen::Index const dim = problem.dimension();
    double const nan = std::numeric_limits<double>::quiet_NaN();

    CurvatureReport report;
    report.hessian = Eigen::MatrixXd::Zero(dim, dim);
    report.standard_deviations = Eigen::VectorXd::Constant(dim, nan);
    report.defined = Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(dim, false);

    auto evaluate = [&](Eigen::VectorXd const& x) {
        if (cost_evaluations) ++*cost_evaluations;
        return problem.cost(x);
    };

    // Central differences need room on both sides; shrink each step to fit.
    Eigen::VectorXd steps = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
    {
        auto const& p = problem.parameters[static_cast<std::size_t>(i)];
        if (p.fixed()) continue;
        double h = fd_step_rel * p.width();
        h = std::min({h, p.upper - point[i], point[i] - p.lower});
        if (h > 1e-300) steps[i] = h;
    }

    double const base = evaluate(point);
    for (Eigen::Index i = 0; i < dim; ++i)
    {
        if (steps[i] == 0.0) continue;
        Eigen::VectorXd plus = point, minus = point;
        plus[i] += steps[i];
        minus[i] -= steps[i];
        double const d2 = (evaluate(plus) - 2.0 * base + evaluate(minus))
                          / (steps[i] * steps[i]);
        report.hessian(i, i) = d2;
        if (d2 > 0.0)
        {
            report.standard_deviations[i] = 1.0 / std::sqrt(d2);
            report.defined[i] = true;
        }
    }

    for (Eigen::Index i = 0; i < dim; ++i)
    {
        if (steps[i] == 0.0) continue;
        for (Eigen::Index j = i + 1; j < dim; ++j)
        {
            if (steps[j] == 0.0) continue;
            Eigen::VectorXd pp = point, pm = point, mp = point, mm = point;
            pp[i] += steps[i]; pp[j] += steps[j];
            pm[i] += steps[i]; pm[j] -= steps[j];
            mp[i] -= steps[i]; mp[j] += steps[j];
            mm[i] -= steps[i]; mm[j] -= steps[j];
            double const mixed = (evaluate(pp) - evaluate(pm) - evaluate(mp) + evaluate(mm))
                                 / (4.0 * steps[i] * steps[j]);
            report.hessian(i, j) = mixed;
            report.hessian(j, i) = mixed;
        }
    }
    return report;
}

}  // namespace anneal
