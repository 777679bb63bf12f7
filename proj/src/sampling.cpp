#include "anneal/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "anneal/distributions.hpp"

namespace anneal {

double generation_density(Eigen::VectorXd const& step,
                          Eigen::VectorXd const& temperatures,
                          Eigen::VectorXd const& widths,
                          Algorithm algorithm,
                          CauchyMode fa_mode,
                          int axis)
{
    std::vector<Eigen::Index> axes;
    if (axis >= 0)
        axes.push_back(axis);
    else
        for (Eigen::Index i = 0; i < step.size(); ++i)
            if (widths[i] > 0.0) axes.push_back(i);
    if (axes.empty()) throw std::invalid_argument("no free coordinates");

    if (algorithm == Algorithm::Fa && fa_mode == CauchyMode::Isotropic && axis < 0)
    {
        // Rotationally symmetric multivariate Cauchy in relative units.
        double const pi = 3.14159265358979323846;
        auto const d = static_cast<double>(axes.size());
        double const t = temperatures[axes.front()];
        double r2 = 0.0;
        double jacobian = 1.0;
        for (Eigen::Index i : axes)
        {
            r2 += step[i] * step[i];
            jacobian /= widths[i];
        }
        double const norm = std::tgamma(0.5 * (d + 1.0)) / std::pow(pi, 0.5 * (d + 1.0));
        return norm * t / std::pow(r2 + t * t, 0.5 * (d + 1.0)) * jacobian;
    }

    double density = 1.0;
    for (Eigen::Index i : axes)
    {
        double factor = 0.0;
        switch (algorithm)
        {
            case Algorithm::Asa:
                factor = asa_density_1d(step[i], temperatures[i]);
                break;
            case Algorithm::Ba:
                factor = boltzmann_density_1d(step[i], temperatures[i]);
                break;
            case Algorithm::Fa:
                factor = cauchy_density_1d(step[i], temperatures[i]);
                break;
        }
        density *= factor / widths[i];
    }
    return density;
}

ExpectationEstimate
estimate_expectation(std::span<SampleRecord const> records,
                     std::function<double(Eigen::VectorXd const&)> const& observable)
{
    if (records.size() < 2)
        throw std::invalid_argument("importance estimate needs at least two sample records");

    // Anchored at the first observable value so that a constant observable
    // yields the constant exactly with zero spread.
    double const anchor = observable(records.front().point);
    double weight_sum = 0.0;
    double weight_sq_sum = 0.0;
    double shifted_sum = 0.0;
    std::vector<double> weights(records.size());
    std::vector<double> values(records.size());
    for (std::size_t j = 0; j < records.size(); ++j)
    {
        double const g = records[j].generation_density;
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::invalid_argument("sample record has non-positive generating density");
        double const w = 1.0 / g;
        double const f = j == 0 ? anchor : observable(records[j].point);
        weights[j] = w;
        values[j] = f;
        weight_sum += w;
        weight_sq_sum += w * w;
        shifted_sum += w * (f - anchor);
    }
    if (!(weight_sum > 0.0) || !std::isfinite(weight_sum))
        throw std::invalid_argument("total importance weight is not positive");

    ExpectationEstimate estimate;
    estimate.value = anchor + shifted_sum / weight_sum;
    double variance = 0.0;
    for (std::size_t j = 0; j < records.size(); ++j)
    {
        double const dev = values[j] - estimate.value;
        variance += weights[j] * weights[j] * dev * dev;
    }
    estimate.standard_error = std::sqrt(variance) / weight_sum;
    estimate.effective_sample_size = weight_sum * weight_sum / weight_sq_sum;
    return estimate;
}

}  // namespace anneal
