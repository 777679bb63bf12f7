#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "anneal/annealer.hpp"

namespace anneal {

/// Multi-seed statistics in the reporting format of the comparison studies:
/// generated cost evaluations until the target was first attained,
/// aggregated over the seeds that attained it.
struct BenchSummary {
    std::vector<std::uint64_t> seeds;
    std::vector<std::optional<long>> generated_to_target;  // per seed
    std::vector<double> best_costs;                        // per seed
    std::vector<double> wall_seconds;                      // per seed

    long successes = 0;
    double success_rate = 0.0;
    // Aggregates over successful seeds only (zero successes leaves them 0).
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
    long min = 0;
    long max = 0;

    double target = 0.0;
    double tolerance = 0.0;
};

/// Runs one independent optimization per seed (uniform random initial point
/// per seed) and aggregates the generated counts at first attainment of
/// target + tolerance. Seeds may run concurrently; results and aggregates
/// are independent of worker count and of seed-list order.
BenchSummary bench(Problem const& problem,
                   RunConfig const& config,
                   std::span<std::uint64_t const> seeds,
                   double target,
                   double tolerance,
                   int workers = 1);

struct MetaRange {
    double lower = 0.0;
    double upper = 0.0;
};

enum class MetaObjective {
    GeneratedToTarget,  ///< mean generated evaluations to reach the target
    BestAtBudget,       ///< mean best cost at the inner budget
};

/// The one meta-level of self optimization: which tuning knobs the outer
/// annealer may move, over which ranges, and how inner runs are scored.
struct MetaConfig {
    std::optional<MetaRange> m;        // applied to parameter + acceptance schedules
    std::optional<MetaRange> n;
    std::optional<MetaRange> quench;
    std::optional<MetaRange> cadence;  // integer-valued reanneal cadence

    MetaObjective objective = MetaObjective::GeneratedToTarget;
    long meta_budget = 50;                  // outer generated states
    std::vector<std::uint64_t> inner_seeds = {1, 2, 3};
    double target = 0.0;
    double tolerance = 0.0;
    std::uint64_t meta_seed = 1;

    void validate() const;
};

struct SelfOptimizeResult {
    RunConfig tuned;
    double tuned_score = 0.0;    // meta cost of the tuned config
    double default_score = 0.0;  // meta cost of the base config
    RunReport meta_report;       // trace of the outer search
};

/// Outer ASA over the selected RunConfig fields; each meta-evaluation runs
/// the full inner optimization over the fixed inner seed set and scores it
/// by the meta objective (failed seeds score as 1e300). With a zero meta
/// budget the base config is returned unchanged.
SelfOptimizeResult
self_optimize(Problem const& problem, RunConfig const& base, MetaConfig const& meta);

}  // namespace anneal
