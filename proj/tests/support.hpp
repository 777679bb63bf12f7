// Test-only numerical oracles, independent of the library implementations
// they are used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace testsupport {

/// Adaptive Simpson quadrature.
inline double simpson_slice(std::function<double(double)> const& f,
                            double a, double b, double fa, double fb, double fm,
                            double whole, double tol, int depth)
{
    double const m = 0.5 * (a + b);
    double const lm = 0.5 * (a + m);
    double const rm = 0.5 * (m + b);
    double const flm = f(lm);
    double const frm = f(rm);
    double const left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double const right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_slice(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1)
           + simpson_slice(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}

inline double integrate(std::function<double(double)> const& f, double a, double b,
                        double tol = 1e-10, int depth = 48)
{
    double const fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double const whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_slice(f, a, b, fa, fb, fm, whole, tol, depth);
}

/// Kolmogorov-Smirnov statistic of samples against a CDF (samples get sorted).
inline double ks_statistic(std::vector<double>& samples,
                           std::function<double(double)> const& cdf)
{
    std::sort(samples.begin(), samples.end());
    double const n = static_cast<double>(samples.size());
    double stat = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        double const c = cdf(samples[i]);
        double const lo = static_cast<double>(i) / n;
        double const hi = static_cast<double>(i + 1) / n;
        stat = std::max({stat, std::abs(c - lo), std::abs(c - hi)});
    }
    return stat;
}

inline double median(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    std::size_t const n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

inline double mean(std::vector<double> const& values)
{
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace testsupport
