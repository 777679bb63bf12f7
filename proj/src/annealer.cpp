#include "anneal/annealer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "anneal/distributions.hpp"
#include "anneal/reanneal.hpp"

namespace anneal {

namespace {

/// Round to nearest integer, ties toward zero.
double round_ties_to_zero(double x)
{
    double const f = std::floor(x);
    double const frac = x - f;
    if (frac > 0.5) return f + 1.0;
    if (frac < 0.5) return f;
    return x > 0.0 ? f : f + 1.0;
}

constexpr int kRedrawCap = 1000;
constexpr double kAcceptanceTemperatureFloor = 1e-18;

}  // namespace

Annealer::Annealer(Problem problem, RunConfig config)
    : problem_(std::move(problem)), config_(std::move(config))
{
    // Integer parameters may be specified with a non-integral start; snap it.
    for (auto& p : problem_.parameters)
        if (p.kind == ParameterKind::Integer) p.initial = round_ties_to_zero(p.initial);
    problem_.validate();
    config_.validate();

    Eigen::Index const dim = problem_.dimension();
    int const d_eff = std::max(1, problem_.effective_dimension());

    if (config_.parameter_schedules.empty())
        schedules_.assign(static_cast<std::size_t>(dim), ScheduleParams{});
    else if (config_.parameter_schedules.size() == 1)
        schedules_.assign(static_cast<std::size_t>(dim), config_.parameter_schedules.front());
    else if (config_.parameter_schedules.size() == static_cast<std::size_t>(dim))
        schedules_ = config_.parameter_schedules;
    else
        throw std::invalid_argument("parameter schedule count does not match problem dimension");
    for (auto& s : schedules_)
    {
        s.initial_temperature = 1.0;  // unity spans each normalized dimension
        s.dimension = d_eff;
        s.validate();
    }

    state_.rng = Rng(config_.seed);
    state_.current_point = problem_.initial_point();
    if (!problem_.is_feasible(state_.current_point))
        throw std::invalid_argument("initial point is infeasible");
    double const initial_cost = problem_.cost(state_.current_point);
    state_.counters.cost_evaluations = 1;
    if (!std::isfinite(initial_cost))
        throw std::invalid_argument("cost at the initial point is not finite");
    state_.current_cost = initial_cost;
    state_.best_point = state_.current_point;
    state_.best_cost = initial_cost;
    state_.last_accepted_cost = initial_cost;

    state_.temperatures = Eigen::VectorXd::Ones(dim);
    state_.indices = Eigen::VectorXd::Zero(dim);

    state_.acceptance_schedule = config_.acceptance_schedule;
    state_.acceptance_schedule.dimension = d_eff;
    state_.acceptance_schedule.initial_temperature =
        std::max(std::abs(initial_cost), kAcceptanceTemperatureFloor);
    state_.accept_index = 0.0;
    state_.accept_temperature = acceptance_temperature(0.0);

    // The initial evaluation is generated state #1 and becomes the first
    // accepted (current) state; its acceptance index stays at 0.
    state_.counters.generated = 1;
    state_.counters.accepted = 1;
    state_.counters.best_updates = 1;

    if (config_.termination.target_cost && initial_cost <= *config_.termination.target_cost)
        generated_at_target_ = 1;
    stall_reference_best_ = initial_cost;
    next_reanneal_accepted_ = config_.reanneal_every;
    next_reanneal_generated_ = config_.reanneal_every;

    push_trace();
}

double Annealer::parameter_temperature(Eigen::Index i, double index) const
{
    auto const& sched = schedules_[static_cast<std::size_t>(i)];
    switch (config_.algorithm)
    {
        case Algorithm::Asa:
            return asa_temperature(index, sched);
        case Algorithm::Ba:
            return ba_temperature(ba_default_start_index() + index,
                                  sched.initial_temperature,
                                  ba_default_start_index());
        case Algorithm::Fa:
            return fa_temperature(1.0 + index, sched.initial_temperature);
    }
    throw std::logic_error("unknown algorithm");
}

double Annealer::acceptance_temperature(double index) const
{
    auto const& sched = state_.acceptance_schedule;
    switch (config_.algorithm)
    {
        case Algorithm::Asa:
            return asa_temperature(index, sched);
        case Algorithm::Ba:
            return ba_temperature(ba_default_start_index() + index,
                                  sched.initial_temperature,
                                  ba_default_start_index());
        case Algorithm::Fa:
            return fa_temperature(1.0 + index, sched.initial_temperature);
    }
    throw std::logic_error("unknown algorithm");
}

double Annealer::draw_step(Eigen::Index axis)
{
    double const t = state_.temperatures[axis];
    switch (config_.algorithm)
    {
        case Algorithm::Asa:
            return asa_draw(state_.rng.uniform(), t);
        case Algorithm::Ba:
            return std::sqrt(t) * state_.rng.gaussian();
        case Algorithm::Fa:
            // Sequential mode uses the one-dimensional marginal, which is the
            // same Cauchy for both product and isotropic modes.
            return t * std::tan(3.14159265358979323846 * (state_.rng.uniform() - 0.5));
    }
    throw std::logic_error("unknown algorithm");
}

Candidate Annealer::generate_candidate()
{
    Eigen::Index const dim = problem_.dimension();
    Candidate candidate;
    candidate.point = state_.current_point;
    candidate.step = Eigen::VectorXd::Zero(dim);

    std::vector<Eigen::Index> axes;
    if (config_.generation_mode == GenerationMode::SequentialCoordinate)
    {
        // Round-robin over the free coordinates.
        for (Eigen::Index tried = 0; tried < dim; ++tried)
        {
            Eigen::Index const i = state_.next_axis % dim;
            state_.next_axis = static_cast<int>((i + 1) % dim);
            if (!problem_.parameters[static_cast<std::size_t>(i)].fixed())
            {
                axes.push_back(i);
                candidate.axis = static_cast<int>(i);
                break;
            }
        }
    }
    else
    {
        for (Eigen::Index i = 0; i < dim; ++i)
            if (!problem_.parameters[static_cast<std::size_t>(i)].fixed()) axes.push_back(i);
    }

    bool const isotropic_fa = config_.algorithm == Algorithm::Fa
                              && config_.fa_mode == CauchyMode::Isotropic
                              && config_.generation_mode == GenerationMode::AllCoordinates
                              && !axes.empty();
    if (isotropic_fa)
    {
        // The radial law couples the coordinates, so redraw the whole vector
        // rather than one coordinate at a time.
        double const t = state_.temperatures[axes.front()];
        bool in_range = false;
        for (int attempt = 0; attempt < kRedrawCap && !in_range; ++attempt)
        {
            Eigen::VectorXd const step =
                cauchy_draw(state_.rng, t, static_cast<Eigen::Index>(axes.size()),
                            CauchyMode::Isotropic);
            in_range = true;
            for (std::size_t j = 0; j < axes.size(); ++j)
            {
                auto const& p = problem_.parameters[static_cast<std::size_t>(axes[j])];
                double proposal = state_.current_point[axes[j]] + step[static_cast<Eigen::Index>(j)] * p.width();
                if (p.kind == ParameterKind::Integer) proposal = round_ties_to_zero(proposal);
                candidate.point[axes[j]] = proposal;
                candidate.step[axes[j]] = step[static_cast<Eigen::Index>(j)];
                if (proposal < p.lower || proposal > p.upper) in_range = false;
            }
        }
        if (!in_range)
        {
            candidate.clamped = true;
            for (Eigen::Index i : axes)
            {
                auto const& p = problem_.parameters[static_cast<std::size_t>(i)];
                double v = std::clamp(candidate.point[i], p.lower, p.upper);
                if (p.kind == ParameterKind::Integer)
                    v = std::clamp(round_ties_to_zero(v), std::ceil(p.lower), std::floor(p.upper));
                candidate.point[i] = v;
                candidate.step[i] = p.width() > 0.0 ? (v - state_.current_point[i]) / p.width() : 0.0;
            }
        }
    }
    else
    {
        for (Eigen::Index i : axes)
        {
            auto const& p = problem_.parameters[static_cast<std::size_t>(i)];
            bool placed = false;
            double proposal = state_.current_point[i];
            for (int attempt = 0; attempt < kRedrawCap; ++attempt)
            {
                double const y = draw_step(i);
                proposal = state_.current_point[i] + y * p.width();
                if (p.kind == ParameterKind::Integer) proposal = round_ties_to_zero(proposal);
                if (proposal >= p.lower && proposal <= p.upper)
                {
                    candidate.point[i] = proposal;
                    candidate.step[i] = y;
                    placed = true;
                    break;
                }
            }
            if (!placed)
            {
                candidate.clamped = true;
                double v = std::clamp(proposal, p.lower, p.upper);
                if (p.kind == ParameterKind::Integer)
                    v = std::clamp(round_ties_to_zero(v), std::ceil(p.lower), std::floor(p.upper));
                candidate.point[i] = v;
                candidate.step[i] = p.width() > 0.0 ? (v - state_.current_point[i]) / p.width() : 0.0;
            }
        }
    }

    candidate.feasible = problem_.is_feasible(candidate.point);
    if (config_.record_samples && candidate.feasible)
    {
        Eigen::VectorXd widths(dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            widths[i] = problem_.parameters[static_cast<std::size_t>(i)].width();
        candidate.generation_density = generation_density(
            candidate.step, state_.temperatures, widths, config_.algorithm,
            config_.fa_mode, candidate.axis);
    }
    return candidate;
}

void Annealer::evaluate(Candidate& candidate) const
{
    candidate.cost = problem_.cost(candidate.point);
}

void Annealer::advance_generated_indices()
{
    for (Eigen::Index i = 0; i < problem_.dimension(); ++i)
    {
        if (problem_.parameters[static_cast<std::size_t>(i)].fixed()) continue;
        state_.indices[i] += 1.0;
        state_.temperatures[i] = parameter_temperature(i, state_.indices[i]);
    }
}

void Annealer::note_best(Candidate const& candidate)
{
    state_.best_point = candidate.point;
    state_.best_cost = candidate.cost;
    ++state_.counters.best_updates;
}

bool Annealer::accept_step(Candidate const& candidate)
{
    if (!candidate.feasible)
        throw std::logic_error("accept_step called on an infeasible candidate");
    Counters& c = state_.counters;
    ++c.cost_evaluations;
    if (candidate.clamped) ++c.clamped_draws;

    if (!std::isfinite(candidate.cost))
    {
        // Rejected without an acceptance draw; still a generated state.
        ++c.nonfinite_costs;
        ++c.generated;
        ++c.rejected;
        advance_generated_indices();
        maybe_reanneal();
        return false;
    }

    ++c.generated;
    if (config_.termination.target_cost && !generated_at_target_
        && candidate.cost <= *config_.termination.target_cost)
        generated_at_target_ = c.generated;

    bool const improved_best = candidate.cost < state_.best_cost;
    if (improved_best) note_best(candidate);

    double const cost_delta = candidate.cost - state_.current_cost;
    double const probability = acceptance_probability(
        cost_delta, state_.accept_temperature, config_.acceptance_form);
    bool const accepted = state_.rng.uniform() < probability;

    advance_generated_indices();
    if (accepted)
    {
        state_.last_accepted_cost = state_.current_cost;
        state_.current_point = candidate.point;
        state_.current_cost = candidate.cost;
        ++c.accepted;
        state_.accept_index += 1.0;
        state_.accept_temperature = acceptance_temperature(state_.accept_index);
    }
    else
    {
        ++c.rejected;
    }

    if (config_.record_samples)
        samples_.push_back({c.generated, candidate.point, candidate.cost,
                            candidate.generation_density, probability, accepted});
    if (improved_best) push_trace();
    maybe_reanneal();
    return accepted;
}

void Annealer::reanneal_now()
{
    if (config_.algorithm != Algorithm::Asa) return;
    SensitivityVector const s = sensitivities(
        problem_, state_.best_point, config_.fd_step, &state_.counters.cost_evaluations);
    reanneal_parameters(state_, s, schedules_);
    reanneal_acceptance(state_, state_.best_cost, state_.last_accepted_cost,
                        state_.current_cost);
    ++state_.counters.reanneals;
}

void Annealer::maybe_reanneal()
{
    bool due = false;
    if (config_.reanneal_trigger == ReannealTrigger::AcceptedEvents
        && state_.counters.accepted >= next_reanneal_accepted_)
    {
        next_reanneal_accepted_ += config_.reanneal_every;
        due = true;
    }
    else if (config_.reanneal_trigger == ReannealTrigger::GeneratedEvents
             && state_.counters.generated >= next_reanneal_generated_)
    {
        next_reanneal_generated_ += config_.reanneal_every;
        due = true;
    }
    if (!due) return;

    reanneal_now();

    // Stall detection runs on the reanneal cadence.
    double const previous = stall_reference_best_;
    double const improvement = previous - state_.best_cost;
    double const scale = std::max(std::abs(previous), 1e-30);
    if (improvement / scale < config_.termination.stall_epsilon)
        ++stall_quiet_cycles_;
    else
        stall_quiet_cycles_ = 0;
    stall_reference_best_ = state_.best_cost;
    if (stall_quiet_cycles_ >= config_.termination.stall_cycles) stalled_ = true;
}

bool Annealer::termination_due(std::string* reason) const
{
    if (generated_at_target_)
    {
        if (reason) *reason = "target";
        return true;
    }
    if (state_.counters.generated >= config_.termination.max_generated)
    {
        if (reason) *reason = "max_generated";
        return true;
    }
    if (stalled_)
    {
        if (reason) *reason = "stall";
        return true;
    }
    return false;
}

void Annealer::push_trace()
{
    if (!config_.record_trace) return;
    double max_temperature = 0.0;
    for (Eigen::Index i = 0; i < problem_.dimension(); ++i)
        if (!problem_.parameters[static_cast<std::size_t>(i)].fixed())
            max_temperature = std::max(max_temperature, state_.temperatures[i]);
    trace_.push_back({state_.counters.generated, state_.counters.accepted,
                      state_.best_cost, state_.current_cost,
                      state_.accept_temperature, max_temperature});
}

bool Annealer::step()
{
    if (termination_due(nullptr)) return false;
    Candidate candidate = generate_candidate();
    if (!candidate.feasible)
    {
        ++state_.counters.infeasible;
        return !termination_due(nullptr);
    }
    evaluate(candidate);
    accept_step(candidate);
    return !termination_due(nullptr);
}

RunReport Annealer::run()
{
    std::string reason;
    std::vector<Candidate> batch;
    while (!termination_due(&reason))
    {
        batch.clear();
        for (int g = 0; g < config_.batch_size; ++g)
            batch.push_back(generate_candidate());

        std::vector<std::size_t> todo;
        for (std::size_t j = 0; j < batch.size(); ++j)
            if (batch[j].feasible) todo.push_back(j);

        if (config_.workers > 1 && todo.size() > 1)
        {
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            auto work = [&] {
                for (std::size_t j; (j = next.fetch_add(1)) < todo.size();)
                {
                    try
                    {
                        evaluate(batch[todo[j]]);
                    }
                    catch (...)
                    {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            };
            std::size_t const n_threads =
                std::min<std::size_t>(static_cast<std::size_t>(config_.workers), todo.size());
            std::vector<std::thread> pool;
            pool.reserve(n_threads);
            for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();
            if (failure)
            {
                try
                {
                    std::rethrow_exception(failure);
                }
                catch (std::exception const& e)
                {
                    throw std::runtime_error(
                        "cost function failed near generated="
                        + std::to_string(state_.counters.generated) + ": " + e.what());
                }
            }
        }
        else
        {
            for (std::size_t j : todo)
            {
                try
                {
                    evaluate(batch[j]);
                }
                catch (std::exception const& e)
                {
                    throw std::runtime_error(
                        "cost function failed near generated="
                        + std::to_string(state_.counters.generated) + ": " + e.what());
                }
            }
        }

        // Acceptance is sequential in generation order; counters, reanneals,
        // and termination behave exactly as in the single-candidate loop.
        for (auto const& candidate : batch)
        {
            if (termination_due(&reason)) break;
            if (!candidate.feasible)
            {
                ++state_.counters.infeasible;
                continue;
            }
            accept_step(candidate);
        }
    }

    RunReport report;
    report.best_point = state_.best_point;
    report.best_cost = state_.best_cost;
    report.final_point = state_.current_point;
    report.final_cost = state_.current_cost;
    report.counters = state_.counters;
    report.generated_at_target = generated_at_target_;
    report.termination_reason = reason;
    report.trace = trace_;
    report.samples = samples_;
    report.parameters = problem_.parameters;
    report.config = config_;
    report.config.parameter_schedules = schedules_;
    return report;
}

RunReport run(Problem const& problem, RunConfig const& config)
{
    return Annealer(problem, config).run();
}

}  // namespace anneal
