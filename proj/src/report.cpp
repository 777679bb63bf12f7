#include "anneal/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "anneal/names.hpp"

namespace anneal {

namespace {

std::string fmt17(double v)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

nlohmann::json vector_to_json(Eigen::VectorXd const& v)
{
    nlohmann::json array = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) array.push_back(v[i]);
    return array;
}

nlohmann::json schedule_to_json(ScheduleParams const& s)
{
    return {{"initial_temperature", s.initial_temperature},
            {"m", s.m},
            {"n", s.n},
            {"quench", s.quench},
            {"dimension", s.dimension}};
}

nlohmann::json counters_to_json(Counters const& c)
{
    return {{"generated", c.generated},
            {"accepted", c.accepted},
            {"rejected", c.rejected},
            {"infeasible", c.infeasible},
            {"best_updates", c.best_updates},
            {"clamped_draws", c.clamped_draws},
            {"nonfinite_costs", c.nonfinite_costs},
            {"reanneals", c.reanneals},
            {"cost_evaluations", c.cost_evaluations}};
}

nlohmann::json config_to_json(RunConfig const& c)
{
    nlohmann::json schedules = nlohmann::json::array();
    for (auto const& s : c.parameter_schedules) schedules.push_back(schedule_to_json(s));
    nlohmann::json form = {{"form", acceptance_form_name(c.acceptance_form.kind)}};
    if (c.acceptance_form.kind == AcceptanceForm::Kind::Tsallis)
        form["q"] = c.acceptance_form.tsallis_q;
    nlohmann::json termination = {{"max_generated", c.termination.max_generated},
                                  {"stall_epsilon", c.termination.stall_epsilon},
                                  {"stall_cycles", c.termination.stall_cycles}};
    if (c.termination.target_cost) termination["target"] = *c.termination.target_cost;
    return {{"algorithm", algorithm_name(c.algorithm)},
            {"seed", c.seed},
            {"generation", generation_mode_name(c.generation_mode)},
            {"fa_mode", cauchy_mode_name(c.fa_mode)},
            {"parameter_schedules", schedules},
            {"acceptance_schedule", schedule_to_json(c.acceptance_schedule)},
            {"acceptance", form},
            {"reanneal", {{"every", c.reanneal_every},
                          {"trigger", reanneal_trigger_name(c.reanneal_trigger)}}},
            {"fd_step", c.fd_step},
            {"termination", termination},
            {"batch", {{"size", c.batch_size}, {"workers", c.workers}}}};
}

}  // namespace

nlohmann::json report_to_json(RunReport const& report)
{
    nlohmann::json parameters = nlohmann::json::array();
    for (auto const& p : report.parameters)
        parameters.push_back({{"name", p.name},
                              {"lower", p.lower},
                              {"upper", p.upper},
                              {"kind", parameter_kind_name(p.kind)},
                              {"initial", p.initial}});
    nlohmann::json trace = nlohmann::json::array();
    for (auto const& row : report.trace)
        trace.push_back({row.generated, row.accepted, row.best_cost, row.current_cost,
                         row.accept_temperature, row.max_parameter_temperature});
    nlohmann::json j = {{"best", {{"cost", report.best_cost},
                                  {"point", vector_to_json(report.best_point)}}},
                        {"final", {{"cost", report.final_cost},
                                   {"point", vector_to_json(report.final_point)}}},
                        {"counters", counters_to_json(report.counters)},
                        {"termination", report.termination_reason},
                        {"config", config_to_json(report.config)},
                        {"parameters", parameters},
                        {"trace", trace},
                        {"sample_count", report.samples.size()}};
    j["generated_at_target"] = report.generated_at_target
                                   ? nlohmann::json(*report.generated_at_target)
                                   : nlohmann::json(nullptr);
    return j;
}

nlohmann::json summary_to_json(BenchSummary const& summary)
{
    nlohmann::json per_seed = nlohmann::json::array();
    for (std::size_t i = 0; i < summary.seeds.size(); ++i)
    {
        nlohmann::json row = {{"seed", summary.seeds[i]},
                              {"best_cost", summary.best_costs[i]},
                              {"wall_seconds", summary.wall_seconds[i]}};
        row["generated_to_target"] = summary.generated_to_target[i]
                                         ? nlohmann::json(*summary.generated_to_target[i])
                                         : nlohmann::json(nullptr);
        per_seed.push_back(row);
    }
    return {{"per_seed", per_seed},
            {"aggregate", {{"successes", summary.successes},
                           {"success_rate", summary.success_rate},
                           {"mean", summary.mean},
                           {"stddev", summary.stddev},
                           {"min", summary.min},
                           {"max", summary.max}}},
            {"target", summary.target},
            {"tolerance", summary.tolerance}};
}

std::string trace_to_csv(RunReport const& report)
{
    std::string csv = "generated,accepted,best_cost,current_cost,T_accept,max_param_T\n";
    for (auto const& row : report.trace)
    {
        csv += std::to_string(row.generated) + ',' + std::to_string(row.accepted) + ','
               + fmt17(row.best_cost) + ',' + fmt17(row.current_cost) + ','
               + fmt17(row.accept_temperature) + ','
               + fmt17(row.max_parameter_temperature) + '\n';
    }
    return csv;
}

std::string samples_to_csv(RunReport const& report)
{
    std::string csv = "generated_index";
    for (auto const& p : report.parameters) csv += ',' + p.name;
    csv += ",cost,g,p_accept,accepted\n";
    for (auto const& s : report.samples)
    {
        csv += std::to_string(s.generated_index);
        for (Eigen::Index i = 0; i < s.point.size(); ++i) csv += ',' + fmt17(s.point[i]);
        csv += ',' + fmt17(s.cost) + ',' + fmt17(s.generation_density) + ','
               + fmt17(s.acceptance_probability) + ',' + (s.accepted ? "1" : "0") + '\n';
    }
    return csv;
}

std::string summary_to_csv(BenchSummary const& summary)
{
    std::string csv = "seed,generated_to_target,best_cost,wall_seconds\n";
    for (std::size_t i = 0; i < summary.seeds.size(); ++i)
    {
        csv += std::to_string(summary.seeds[i]) + ',';
        if (summary.generated_to_target[i])
            csv += std::to_string(*summary.generated_to_target[i]);
        csv += ',' + fmt17(summary.best_costs[i]) + ',' + fmt17(summary.wall_seconds[i])
               + '\n';
    }
    return csv;
}

std::string emit_report(RunReport const& report, ReportFormat format)
{
    return format == ReportFormat::Json ? report_to_json(report).dump(2) + "\n"
                                        : trace_to_csv(report);
}

std::string emit_report(BenchSummary const& summary, ReportFormat format)
{
    return format == ReportFormat::Json ? summary_to_json(summary).dump(2) + "\n"
                                        : summary_to_csv(summary);
}

void write_text(std::string const& path, std::string const& content)
{
    if (path == "-")
    {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace anneal
