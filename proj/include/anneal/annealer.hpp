#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "anneal/config.hpp"
#include "anneal/problem.hpp"
#include "anneal/rng.hpp"
#include "anneal/sampling.hpp"

namespace anneal {

/// A proposed move: the point, the relative step it came from, and what the
/// engine learned about it so far. Cost is NaN until evaluated.
struct Candidate {
    Eigen::VectorXd point;
    Eigen::VectorXd step;        // relative units, zero on untouched coordinates
    double cost = std::numeric_limits<double>::quiet_NaN();
    bool feasible = true;
    bool clamped = false;        // some coordinate hit the redraw cap
    int axis = -1;               // perturbed coordinate in sequential mode, -1 = all
    double generation_density = 0.0;  // filled when sampling is on
};

struct Counters {
    long generated = 0;        // evaluated candidates, including the initial point
    long accepted = 0;
    long rejected = 0;
    long infeasible = 0;       // rejected before any cost evaluation
    long best_updates = 0;
    long clamped_draws = 0;    // candidates that hit the per-coordinate redraw cap
    long nonfinite_costs = 0;  // evaluated candidates with non-finite cost
    long reanneals = 0;
    long cost_evaluations = 0; // every cost call, including sensitivity probes
};

struct TraceRow {
    long generated = 0;
    long accepted = 0;
    double best_cost = 0.0;
    double current_cost = 0.0;
    double accept_temperature = 0.0;
    double max_parameter_temperature = 0.0;
};

/// Complete annealer state; reannealing rewrites temperatures and indices
/// in place. Invariant away from a reanneal: every temperature equals its
/// schedule evaluated at its index.
struct AnnealerState {
    Eigen::VectorXd current_point;
    double current_cost = 0.0;
    Eigen::VectorXd best_point;
    double best_cost = 0.0;
    double last_accepted_cost = 0.0;  // cost of the previously accepted state

    Eigen::VectorXd temperatures;  // per-parameter T_i
    Eigen::VectorXd indices;       // per-parameter annealing time k_i (real)

    ScheduleParams acceptance_schedule;  // owns the resettable T_a0
    double accept_temperature = 0.0;
    double accept_index = 0.0;

    Counters counters;
    Rng rng;
    int next_axis = 0;  // sequential-mode round robin
};

struct RunReport {
    Eigen::VectorXd best_point;
    double best_cost = 0.0;
    Eigen::VectorXd final_point;
    double final_cost = 0.0;
    Counters counters;
    std::optional<long> generated_at_target;
    std::string termination_reason;  // "target" | "max_generated" | "stall"
    std::vector<TraceRow> trace;
    std::vector<SampleRecord> samples;

    // Echoes for report emission.
    std::vector<ParameterSpec> parameters;
    RunConfig config;
};

/// The annealing state machine. Drives candidate generation over the
/// bounded mixed integer/real box, constraint rejection, the acceptance
/// test, temperature bookkeeping, reannealing, and termination.
///
/// A single instance must be driven by one thread at a time. run() may
/// cost-evaluate candidate batches concurrently when configured; the result
/// is bit-identical to the single-worker run of the same batch size.
class Annealer {
  public:
    /// Validates inputs, evaluates the initial cost (generated = 1), and
    /// starts every parameter temperature at 1 and the acceptance
    /// temperature at |initial cost| (floored at 1e-18).
    Annealer(Problem problem, RunConfig config);

    /// Draws one candidate from the current state. Out-of-range coordinates
    /// are redrawn (up to 1000 times each, then clamped to the nearest
    /// bound); integer coordinates are rounded, ties toward zero. The
    /// feasibility predicate runs here; the cost is not evaluated.
    Candidate generate_candidate();

    /// Cost-evaluates a candidate in place. Pure with respect to the engine
    /// state, so batches may call it concurrently.
    void evaluate(Candidate& candidate) const;

    /// Applies the acceptance test to an evaluated candidate and does all
    /// bookkeeping: counters, per-parameter and acceptance temperatures,
    /// best tracking, trace and sample rows, reanneal triggering.
    /// Returns true if the candidate became the current state.
    bool accept_step(Candidate const& candidate);

    /// One serial generate/evaluate/accept cycle (skips bookkeeping-free
    /// infeasible candidates internally). Returns false once a termination
    /// rule fired.
    bool step();

    /// Runs to termination and reports.
    RunReport run();

    /// Sensitivity-based rescaling of parameter temperatures/indices and
    /// the acceptance temperature (ASA only; no-op for BA/FA).
    void reanneal_now();

    AnnealerState& state() { return state_; }
    AnnealerState const& state() const { return state_; }
    Problem const& problem() const { return problem_; }
    RunConfig const& config() const { return config_; }
    std::vector<ScheduleParams> const& parameter_schedules() const { return schedules_; }

  private:
    double parameter_temperature(Eigen::Index i, double index) const;
    double acceptance_temperature(double index) const;
    double draw_step(Eigen::Index axis);
    void advance_generated_indices();
    void note_best(Candidate const& candidate);
    bool termination_due(std::string* reason) const;
    void maybe_reanneal();
    void push_trace();

    Problem problem_;
    RunConfig config_;
    std::vector<ScheduleParams> schedules_;  // resolved per-parameter
    AnnealerState state_;

    // termination latches
    std::optional<long> generated_at_target_;
    double stall_reference_best_ = 0.0;
    int stall_quiet_cycles_ = 0;
    bool stalled_ = false;
    long next_reanneal_accepted_ = 0;
    long next_reanneal_generated_ = 0;

    std::vector<TraceRow> trace_;
    std::vector<SampleRecord> samples_;
};

/// Convenience one-shot driver.
RunReport run(Problem const& problem, RunConfig const& config);

}  // namespace anneal
