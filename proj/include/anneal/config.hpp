#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "anneal/distributions.hpp"
#include "anneal/problem.hpp"
#include "anneal/schedules.hpp"

namespace anneal {

enum class Algorithm {
    Asa,  ///< bounded heavy-tail generation, exponential schedules, reannealing
    Ba,   ///< Gaussian generation, logarithmic schedule
    Fa,   ///< Cauchy generation, reciprocal schedule
};

enum class GenerationMode {
    AllCoordinates,        ///< perturb every free coordinate per candidate
    SequentialCoordinate,  ///< perturb one coordinate per candidate, round-robin
};

enum class ReannealTrigger { AcceptedEvents, GeneratedEvents };

struct TerminationRules {
    long max_generated = 100000;
    std::optional<double> target_cost;  // stop once best <= target
    double stall_epsilon = 1e-10;       // relative best-cost improvement
    int stall_cycles = 4;               // consecutive quiet reanneal cycles
};

/// Everything that determines a run besides the problem itself. A default
/// constructed config runs plain ASA with the historical default scales.
struct RunConfig {
    Algorithm algorithm = Algorithm::Asa;

    /// Per-parameter schedules. Size 0 means all defaults, size 1 broadcasts,
    /// otherwise must match the problem dimension. initial_temperature is
    /// forced to 1 at init; dimension is filled with the effective dimension.
    std::vector<ScheduleParams> parameter_schedules;

    /// Acceptance-temperature schedule; its initial temperature is set from
    /// the initial cost at init and reset on reannealing.
    ScheduleParams acceptance_schedule;

    AcceptanceForm acceptance_form;
    GenerationMode generation_mode = GenerationMode::AllCoordinates;
    CauchyMode fa_mode = CauchyMode::Product;

    long reanneal_every = 100;
    ReannealTrigger reanneal_trigger = ReannealTrigger::AcceptedEvents;
    double fd_step = 1e-5;  // finite-difference step, relative to range width

    TerminationRules termination;
    std::uint64_t seed = 0;

    /// Candidates generated (and cost-evaluated, possibly concurrently) per
    /// batch before the sequential acceptance pass. Results depend on the
    /// batch size but never on the worker count.
    int batch_size = 1;
    int workers = 1;

    bool record_trace = false;
    bool record_samples = false;

    void validate() const
    {
        if (reanneal_every < 1) throw std::invalid_argument("reanneal cadence must be >= 1");
        if (termination.max_generated < 1)
            throw std::invalid_argument("max_generated must be >= 1");
        if (!(fd_step > 0.0)) throw std::invalid_argument("fd step must be positive");
        if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
        if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
        if (termination.stall_cycles < 1)
            throw std::invalid_argument("stall cycle count must be >= 1");
        for (auto const& s : parameter_schedules) s.validate();
        acceptance_schedule.validate();
    }
};

}  // namespace anneal
