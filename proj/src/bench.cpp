#include "anneal/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

namespace anneal {

namespace {

double round_half_to_zero(double x)
{
    double const f = std::floor(x);
    double const frac = x - f;
    if (frac > 0.5) return f + 1.0;
    if (frac < 0.5) return f;
    return x > 0.0 ? f : f + 1.0;
}

/// Decorrelates the initial-point stream from the run's own stream, which
/// uses the seed directly.
constexpr std::uint64_t kInitialPointSalt = 0x9E3779B97F4A7C15ull;

Problem with_random_initial(Problem problem, std::uint64_t seed)
{
    Rng rng(seed ^ kInitialPointSalt);
    for (auto& p : problem.parameters)
    {
        if (p.fixed()) continue;
        double v = p.lower + rng.uniform() * p.width();
        if (p.kind == ParameterKind::Integer)
            v = std::clamp(round_half_to_zero(v), std::ceil(p.lower), std::floor(p.upper));
        p.initial = v;
    }
    return problem;
}

}  // namespace

BenchSummary bench(Problem const& problem,
                   RunConfig const& config,
                   std::span<std::uint64_t const> seeds,
                   double target,
                   double tolerance,
                   int workers)
{
    if (seeds.empty()) throw std::invalid_argument("bench needs at least one seed");
    if (workers < 1) throw std::invalid_argument("worker count must be >= 1");

    BenchSummary summary;
    summary.seeds.assign(seeds.begin(), seeds.end());
    summary.generated_to_target.resize(seeds.size());
    summary.best_costs.resize(seeds.size());
    summary.wall_seconds.resize(seeds.size());
    summary.target = target;
    summary.tolerance = tolerance;

    auto run_one = [&](std::size_t index) {
        std::uint64_t const seed = seeds[index];
        RunConfig run_config = config;
        run_config.seed = seed;
        run_config.termination.target_cost = target + tolerance;
        run_config.record_trace = false;
        run_config.record_samples = false;

        auto const start = std::chrono::steady_clock::now();
        RunReport const report = run(with_random_initial(problem, seed), run_config);
        auto const stop = std::chrono::steady_clock::now();

        summary.generated_to_target[index] = report.generated_at_target;
        summary.best_costs[index] = report.best_cost;
        summary.wall_seconds[index] =
            std::chrono::duration<double>(stop - start).count();
    };

    if (workers > 1 && seeds.size() > 1)
    {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (std::size_t j; (j = next.fetch_add(1)) < seeds.size();)
            {
                try
                {
                    run_one(j);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        std::size_t const n_threads =
            std::min<std::size_t>(static_cast<std::size_t>(workers), seeds.size());
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    else
    {
        for (std::size_t j = 0; j < seeds.size(); ++j) run_one(j);
    }

    // Aggregates over the successful seeds, computed on a sorted copy so the
    // result is independent of seed-list order.
    std::vector<long> counts;
    for (auto const& g : summary.generated_to_target)
        if (g) counts.push_back(*g);
    std::sort(counts.begin(), counts.end());
    summary.successes = static_cast<long>(counts.size());
    summary.success_rate =
        static_cast<double>(summary.successes) / static_cast<double>(seeds.size());
    if (!counts.empty())
    {
        double sum = 0.0;
        for (long c : counts) sum += static_cast<double>(c);
        summary.mean = sum / static_cast<double>(counts.size());
        double sq = 0.0;
        for (long c : counts)
        {
            double const d = static_cast<double>(c) - summary.mean;
            sq += d * d;
        }
        summary.stddev = counts.size() > 1
                             ? std::sqrt(sq / static_cast<double>(counts.size() - 1))
                             : 0.0;
        summary.min = counts.front();
        summary.max = counts.back();
    }
    return summary;
}

void MetaConfig::validate() const
{
    auto check = [](std::optional<MetaRange> const& r, char const* name, double floor) {
        if (!r) return;
        if (!(r->lower <= r->upper) || !(r->lower >= floor))
            throw std::invalid_argument(std::string("invalid meta range for ") + name);
    };
    check(m, "m", 0.0);
    check(n, "n", 0.0);
    check(quench, "quench", 1e-6);
    check(cadence, "cadence", 1.0);
    if (!m && !n && !quench && !cadence)
        throw std::invalid_argument("self-optimization needs at least one tunable field");
    if (meta_budget < 0) throw std::invalid_argument("meta budget must be >= 0");
    if (inner_seeds.empty()) throw std::invalid_argument("self-optimization needs inner seeds");
}

namespace {

struct MetaKnobs {
    bool m = false, n = false, quench = false, cadence = false;
};

RunConfig apply_meta_point(RunConfig base, MetaKnobs const& knobs, Eigen::VectorXd const& point)
{
    Eigen::Index k = 0;
    auto next = [&] { return point[k++]; };
    double m = 0.0, n = 0.0, q = 0.0;
    if (knobs.m) m = next();
    if (knobs.n) n = next();
    if (knobs.quench) q = next();
    if (knobs.cadence) base.reanneal_every = static_cast<long>(std::llround(next()));

    auto retune = [&](ScheduleParams& s) {
        if (knobs.m) s.m = m;
        if (knobs.n) s.n = n;
        if (knobs.quench) s.quench = q;
    };
    if (base.parameter_schedules.empty()) base.parameter_schedules.resize(1);
    for (auto& s : base.parameter_schedules) retune(s);
    retune(base.acceptance_schedule);
    return base;
}

}  // namespace

SelfOptimizeResult
self_optimize(Problem const& problem, RunConfig const& base, MetaConfig const& meta)
{
    meta.validate();
    base.validate();

    SelfOptimizeResult result;
    result.tuned = base;
    if (meta.meta_budget == 0)
    {
        double const nan = std::numeric_limits<double>::quiet_NaN();
        result.tuned_score = nan;
        result.default_score = nan;
        return result;
    }

    MetaKnobs knobs{meta.m.has_value(), meta.n.has_value(), meta.quench.has_value(),
                    meta.cadence.has_value()};

    // Outer search space: one coordinate per tunable field, started at the
    // base config's value so the default is the first meta evaluation.
    ScheduleParams const base_sched = base.parameter_schedules.empty()
                                          ? ScheduleParams{}
                                          : base.parameter_schedules.front();
    Problem meta_problem;
    auto add = [&](char const* name, MetaRange const& r, double initial, ParameterKind kind) {
        meta_problem.parameters.push_back(
            {name, r.lower, r.upper, kind, std::clamp(initial, r.lower, r.upper)});
    };
    if (knobs.m) add("m", *meta.m, base_sched.m, ParameterKind::Real);
    if (knobs.n) add("n", *meta.n, base_sched.n, ParameterKind::Real);
    if (knobs.quench) add("quench", *meta.quench, base_sched.quench, ParameterKind::Real);
    if (knobs.cadence)
        add("cadence", *meta.cadence, static_cast<double>(base.reanneal_every),
            ParameterKind::Integer);

    double const failure_score = 1e300;
    long const unattained_score = 10 * base.termination.max_generated;
    meta_problem.cost = [&](Eigen::VectorXd const& point) -> double {
        RunConfig candidate_config;
        try
        {
            candidate_config = apply_meta_point(base, knobs, point);
            candidate_config.validate();
        }
        catch (std::exception const&)
        {
            return failure_score;
        }
        double total = 0.0;
        for (std::uint64_t seed : meta.inner_seeds)
        {
            try
            {
                BenchSummary const one = bench(problem, candidate_config,
                                               std::span<std::uint64_t const>(&seed, 1),
                                               meta.target, meta.tolerance, 1);
                if (meta.objective == MetaObjective::BestAtBudget)
                    total += one.best_costs.front();
                else
                    total += one.generated_to_target.front()
                                 ? static_cast<double>(*one.generated_to_target.front())
                                 : static_cast<double>(unattained_score);
            }
            catch (std::exception const&)
            {
                return failure_score;
            }
        }
        return total / static_cast<double>(meta.inner_seeds.size());
    };

    RunConfig outer;
    outer.seed = meta.meta_seed;
    outer.termination.max_generated = meta.meta_budget;
    outer.record_trace = true;

    result.meta_report = run(meta_problem, outer);
    result.tuned = apply_meta_point(base, knobs, result.meta_report.best_point);
    result.tuned_score = result.meta_report.best_cost;
    // The outer run starts at the base values, so its first evaluation is
    // the default config's score.
    result.default_score = result.meta_report.trace.front().current_cost;
    return result;
}

}  // namespace anneal
