#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "anneal/rng.hpp"

namespace anneal {

/// Sign function with sign(0) = 0.
template <class Scalar>
constexpr int sign(Scalar x)
{
    return (x > Scalar{0}) - (x < Scalar{0});
}

namespace detail {

template <class Scalar>
void require_temperature(Scalar temperature)
{
    if (!(temperature > Scalar{0}) || !std::isfinite(temperature))
        throw std::domain_error("temperature must be positive and finite");
}

/// exp with the argument clamped to +-700 so the result stays finite.
inline double safe_exp(double x)
{
    if (x > 700.0) x = 700.0;
    if (x < -700.0) x = -700.0;
    return std::exp(x);
}

}  // namespace detail

/// Inverse-CDF draw of one relative step y in [-1, 1] from the product
/// heavy-tailed generating density at temperature T:
///
///     y = sgn(u - 1/2) T [(1 + 1/T)^|2u-1| - 1]
///
/// Uniform u = 1/2 maps to y = 0; u = 0, 1 map to the range edges -1, +1.
template <class Scalar>
Scalar asa_draw(Scalar u, Scalar temperature)
{
    detail::require_temperature(temperature);
    if (u < Scalar{0} || u > Scalar{1})
        throw std::domain_error("uniform variate must lie in [0, 1]");
    Scalar const a = std::abs(Scalar{2} * u - Scalar{1});
    Scalar y = sign(u - Scalar{0.5})
               * temperature * std::expm1(a * std::log1p(Scalar{1} / temperature));
    // expm1/log1p keep the draw/cdf round trip tight; clamp rounding overshoot.
    if (y > Scalar{1}) y = Scalar{1};
    if (y < Scalar{-1}) y = Scalar{-1};
    return y;
}

/// Cumulative distribution of asa_draw, the exact inverse map:
///
///     G(y) = 1/2 + sgn(y)/2 ln(1 + |y|/T) / ln(1 + 1/T)
template <class Scalar>
Scalar asa_cdf(Scalar y, Scalar temperature)
{
    detail::require_temperature(temperature);
    if (std::abs(y) > Scalar{1})
        throw std::domain_error("relative step must lie in [-1, 1]");
    return Scalar{0.5}
           + Scalar{0.5} * sign(y) * std::log1p(std::abs(y) / temperature)
                 / std::log1p(Scalar{1} / temperature);
}

/// One-dimensional factor of the generating density,
/// 1 / (2 (|y| + T) ln(1 + 1/T)), normalized over [-1, 1].
template <class Scalar>
Scalar asa_density_1d(Scalar y, Scalar temperature)
{
    detail::require_temperature(temperature);
    if (std::abs(y) > Scalar{1})
        throw std::domain_error("relative step must lie in [-1, 1]");
    return Scalar{1}
           / (Scalar{2} * (std::abs(y) + temperature)
              * std::log1p(Scalar{1} / temperature));
}

/// Product generating density over a step vector; integrates to 1 on [-1,1]^D.
template <class DerivedY, class DerivedT>
typename DerivedY::Scalar asa_density(Eigen::MatrixBase<DerivedY> const& y,
                                      Eigen::MatrixBase<DerivedT> const& temperatures)
{
    using Scalar = typename DerivedY::Scalar;
    if (y.size() != temperatures.size())
        throw std::invalid_argument("step and temperature dimensions differ");
    Scalar density{1};
    for (Eigen::Index i = 0; i < y.size(); ++i)
        density *= asa_density_1d(Scalar(y[i]), Scalar(temperatures[i]));
    return density;
}

/// Gaussian step vector with per-coordinate variance T (Boltzmann generating
/// density (2 pi T)^{-D/2} exp[-dx^2 / (2T)]).
inline Eigen::VectorXd boltzmann_draw(Rng& rng, double temperature, Eigen::Index dim)
{
    detail::require_temperature(temperature);
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    double const scale = std::sqrt(temperature);
    Eigen::VectorXd step(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        step[i] = scale * rng.gaussian();
    return step;
}

enum class CauchyMode {
    Product,    ///< independent one-dimensional Cauchy per coordinate
    Isotropic,  ///< D-dimensional radial law T / (dx^2 + T^2)^{(D+1)/2}
};

/// Cauchy step vector with scale T.
///
/// Product mode transforms one uniform per coordinate through tan(). The
/// isotropic mode draws from the rotationally symmetric D-dimensional law
/// as a normal vector divided by an independent half-normal.
inline Eigen::VectorXd
cauchy_draw(Rng& rng, double temperature, Eigen::Index dim, CauchyMode mode = CauchyMode::Product)
{
    detail::require_temperature(temperature);
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    Eigen::VectorXd step(dim);
    if (mode == CauchyMode::Product)
    {
        for (Eigen::Index i = 0; i < dim; ++i)
            step[i] = temperature
                      * std::tan(3.14159265358979323846 * (rng.uniform() - 0.5));
        return step;
    }
    for (Eigen::Index i = 0; i < dim; ++i)
        step[i] = rng.gaussian();
    double denom = std::abs(rng.gaussian());
    if (denom < 1e-300) denom = 1e-300;
    return (temperature / denom) * step;
}

/// Density of a one-dimensional Cauchy with scale T.
inline double cauchy_density_1d(double x, double temperature)
{
    return temperature
           / (3.14159265358979323846 * (x * x + temperature * temperature));
}

/// Density of a one-dimensional Gaussian with variance T.
inline double boltzmann_density_1d(double x, double temperature)
{
    return std::exp(-x * x / (2.0 * temperature))
           / std::sqrt(2.0 * 3.14159265358979323846 * temperature);
}

/// Which acceptance function maps a cost increase to a keep-probability.
struct AcceptanceForm {
    enum class Kind {
        MetropolisExp,  ///< min(1, exp(-dE/T)); the asymptotic form
        Logistic,       ///< 1 / (1 + exp(dE/T)); the symmetric two-state form
        Tsallis,        ///< min(1, [1 - (1-q) dE/T]^{1/(1-q)}), q != 1
    };

    Kind kind = Kind::MetropolisExp;
    double tsallis_q = 1.5;

    static AcceptanceForm metropolis() { return {Kind::MetropolisExp, 1.0}; }
    static AcceptanceForm logistic() { return {Kind::Logistic, 1.0}; }
    static AcceptanceForm tsallis(double q)
    {
        if (q == 1.0)
            throw std::invalid_argument("tsallis q = 1 is the metropolis limit; use MetropolisExp");
        return {Kind::Tsallis, q};
    }
};

/// Probability of accepting a candidate whose cost differs by cost_delta
/// (new minus old) at acceptance temperature Ta. Always in [0, 1].
///
/// Tsallis convention: for q < 1 the bracket 1 - (1-q) dE/Ta can reach zero
/// at finite dE; beyond that cutoff the probability is 0. For q > 1 the
/// bracket only vanishes for improving moves, where the continuous limit is
/// certain acceptance, so the probability is 1 there.
inline double
acceptance_probability(double cost_delta, double accept_temperature, AcceptanceForm const& form = {})
{
    detail::require_temperature(accept_temperature);
    if (!std::isfinite(cost_delta))
        throw std::domain_error("cost difference must be finite");
    double const ratio = cost_delta / accept_temperature;
    switch (form.kind)
    {
        case AcceptanceForm::Kind::MetropolisExp:
            return std::min(1.0, detail::safe_exp(-ratio));
        case AcceptanceForm::Kind::Logistic:
            return 1.0 / (1.0 + detail::safe_exp(ratio));
        case AcceptanceForm::Kind::Tsallis: {
            double const q = form.tsallis_q;
            double const bracket = 1.0 - (1.0 - q) * ratio;
            if (bracket <= 0.0)
                return q < 1.0 ? 0.0 : 1.0;
            return std::min(1.0, detail::safe_exp(std::log(bracket) / (1.0 - q)));
        }
    }
    throw std::logic_error("unknown acceptance form");
}

/// The acceptance test itself: keep the candidate iff the supplied uniform
/// falls below the acceptance probability.
inline bool accept_candidate(double uniform,
                             double cost_delta,
                             double accept_temperature,
                             AcceptanceForm const& form = {})
{
    return uniform < acceptance_probability(cost_delta, accept_temperature, form);
}

}  // namespace anneal
