#pragma once

#include <cmath>
#include <stdexcept>

namespace anneal {

/// Temperatures are clamped here instead of underflowing to zero, so that
/// later divisions by T stay finite.
inline constexpr double kTemperatureFloor = 1e-300;

/// Default m: the schedule spans five decades, T_final = T0 exp(-m) = 1e-5 T0.
inline double default_ratio_exponent() { return -std::log(1e-5); }

/// Default n: that final ratio is reached after about exp(n) = 100 events.
inline double default_anneal_exponent() { return std::log(100.0); }

/// Scale c of the exponential schedule, c = m exp(-n Q / D).
inline double schedule_scale(double m, double n, double quench, int dimension)
{
    if (!(m >= 0.0) || !(n >= 0.0))
        throw std::domain_error("schedule exponents m, n must be non-negative");
    if (!(quench > 0.0)) throw std::domain_error("quench factor must be positive");
    if (dimension < 1) throw std::domain_error("dimension must be >= 1");
    return m * std::exp(-n * quench / static_cast<double>(dimension));
}

/// Free parameters of one exponential annealing schedule
/// T(k) = T0 exp(-c k^{Q/D}), c = m exp(-n Q / D).
///
/// m controls the targeted temperature ratio (T0 exp(-m) after exp(n)
/// events) and n stretches the schedule; both are per-parameter tuning
/// knobs. m = 0 freezes the schedule at T0, which sampling runs use.
/// Q is the quenching factor: Q > 1 cools faster than the sampling proof
/// permits, Q < 1 slower. D is the effective (non-fixed) dimension.
struct ScheduleParams {
    double initial_temperature = 1.0;
    double m = default_ratio_exponent();
    double n = default_anneal_exponent();
    double quench = 1.0;
    int dimension = 1;

    double scale() const { return schedule_scale(m, n, quench, dimension); }

    void validate() const
    {
        if (!(initial_temperature > 0.0))
            throw std::domain_error("initial temperature must be positive");
        (void)scale();  // validates m, n, quench, dimension
    }
};

/// Exponential schedule T(k) = T0 exp(-c k^{Q/D}), clamped at the floor.
inline double asa_temperature(double index, ScheduleParams const& p)
{
    if (!(index >= 0.0) || !std::isfinite(index))
        throw std::domain_error("annealing index must be finite and >= 0");
    double const exponent = p.scale()
                            * std::pow(index, p.quench / static_cast<double>(p.dimension));
    double const t = p.initial_temperature * std::exp(-exponent);
    return t < kTemperatureFloor ? kTemperatureFloor : t;
}

/// Inverse of asa_temperature: k = (ln(T0/T) / c)^{D/Q}.
///
/// Temperatures above T0 clamp to k = 0; reannealing relies on this being
/// an exact inverse so rescaled temperatures keep consistent indices.
inline double index_for_temperature(double temperature, ScheduleParams const& p)
{
    if (!(temperature > 0.0))
        throw std::domain_error("temperature must be positive");
    double log_ratio = std::log(p.initial_temperature / temperature);
    if (log_ratio < 0.0) log_ratio = 0.0;  // T > T0: restart the schedule
    if (p.m == 0.0) return 0.0;            // frozen schedule has no inverse
    return std::pow(log_ratio / p.scale(), static_cast<double>(p.dimension) / p.quench);
}

/// Logarithmic Boltzmann schedule T(k) = T0 ln(k0) / ln(k), k >= k0 >= 2.
/// With k0 = e this is the classic T0 / ln(k) bound.
inline double ba_temperature(double index, double initial_temperature, double start_index)
{
    if (!(initial_temperature > 0.0))
        throw std::domain_error("initial temperature must be positive");
    if (!(start_index >= 2.0))
        throw std::domain_error("logarithmic schedule needs start index >= 2");
    if (index < start_index)
        throw std::domain_error("index below schedule start");
    double const t = initial_temperature * std::log(start_index) / std::log(index);
    return t < kTemperatureFloor ? kTemperatureFloor : t;
}

inline double ba_default_start_index() { return std::exp(1.0); }

/// Geometric (exponential) schedule T_k = T0 ratio^k with 0 < ratio < 1,
/// the simulated-quenching schedule often paired with Boltzmann sampling.
inline double sq_exponential_temperature(double index, double initial_temperature, double ratio)
{
    if (!(initial_temperature > 0.0))
        throw std::domain_error("initial temperature must be positive");
    if (!(ratio > 0.0) || !(ratio < 1.0))
        throw std::domain_error("geometric ratio must lie in (0, 1)");
    double const t = initial_temperature * std::pow(ratio, index);
    return t < kTemperatureFloor ? kTemperatureFloor : t;
}

/// Reciprocal fast-annealing schedule T(k) = T0 / k, k >= 1.
inline double fa_temperature(double index, double initial_temperature)
{
    if (!(initial_temperature > 0.0))
        throw std::domain_error("initial temperature must be positive");
    if (!(index >= 1.0))
        throw std::domain_error("reciprocal schedule needs index >= 1");
    double const t = initial_temperature / index;
    return t < kTemperatureFloor ? kTemperatureFloor : t;
}

/// Families of the ergodic-sampling partial sums. Each schedule's proof
/// hinges on whether the generation-probability proxy summed over
/// annealing time diverges; quenching with Q > 1 makes the sum converge.
enum class ProofFamily {
    BoltzmannLog,    ///< sum 1/k from k = 2 (diverges)
    FastReciprocal,  ///< sum 1/k from k = 1 (diverges)
    Asa,             ///< sum 1/k from k = 1, the Q = 1 form (diverges)
    AsaQuenched,     ///< sum 1/k^Q from k = 1 (converges for Q > 1)
};

/// Finite-horizon partial sum of the proof proxy; constant prefactors are
/// dropped since only growth across horizons matters.
inline double proof_sum_diagnostic(ProofFamily family, long horizon, double quench = 1.0)
{
    if (horizon < 10) throw std::domain_error("horizon must be >= 10");
    if (family == ProofFamily::AsaQuenched && !(quench > 0.0))
        throw std::domain_error("quench factor must be positive");
    long const start = family == ProofFamily::BoltzmannLog ? 2 : 1;
    double sum = 0.0;
    // Summed smallest-first to keep the converging tails accurate.
    for (long k = horizon; k >= start; --k)
    {
        double const kd = static_cast<double>(k);
        sum += family == ProofFamily::AsaQuenched ? 1.0 / std::pow(kd, quench) : 1.0 / kd;
    }
    return sum;
}

}  // namespace anneal
