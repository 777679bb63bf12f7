// Command-line driver: run / bench / sample / selfopt / diag.
//
// Exit codes: 0 success, 1 target not attained (bench: zero successes),
// 2 configuration error, 3 runtime failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anneal/bench.hpp"
#include "anneal/config_file.hpp"
#include "anneal/names.hpp"
#include "anneal/report.hpp"
#include "anneal/schedules.hpp"
#include "anneal/testfns.hpp"

namespace {

using namespace anneal;

struct CommonArgs {
    std::string config_path;
    std::string problem;
    std::string algorithm;
    std::optional<int> dim;
    std::optional<std::uint64_t> seed;
    std::optional<long> max_generated;
    std::optional<double> quench;
    std::optional<double> target;
    std::optional<double> tolerance;
    std::optional<int> batch;
    std::optional<int> workers;
    std::string out = "-";
    std::string format = "json";
    std::string trace_path;
};

void add_common(CLI::App* cmd, CommonArgs& args)
{
    cmd->add_option("--config", args.config_path, "configuration file (JSON)");
    cmd->add_option("--problem", args.problem, "catalog problem name");
    cmd->add_option("--algorithm", args.algorithm, "asa|ba|fa");
    cmd->add_option("--dim", args.dim, "dimension for dimension-flexible problems");
    cmd->add_option("--seed", args.seed, "random seed");
    cmd->add_option("--max-generated", args.max_generated, "generated-states budget");
    cmd->add_option("--quench", args.quench, "parameter quench factor Q");
    cmd->add_option("--target", args.target, "target cost");
    cmd->add_option("--tol", args.tolerance, "target tolerance");
    cmd->add_option("--batch", args.batch, "candidates per batch");
    cmd->add_option("--workers", args.workers, "worker threads");
    cmd->add_option("--out", args.out, "output path ('-' = stdout)");
    cmd->add_option("--format", args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--trace", args.trace_path, "write best-update trace CSV here");
}

std::vector<std::uint64_t> parse_seed_list(std::string const& spec)
{
    std::vector<std::uint64_t> seeds;
    auto const range_pos = spec.find("..");
    if (range_pos != std::string::npos)
    {
        std::uint64_t const lo = std::stoull(spec.substr(0, range_pos));
        std::uint64_t const hi = std::stoull(spec.substr(range_pos + 2));
        if (hi < lo) throw ConfigError("seed range '" + spec + "' is inverted");
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty()) seeds.push_back(std::stoull(item));
    if (seeds.empty()) throw ConfigError("empty seed list '" + spec + "'");
    return seeds;
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Resolves the configuration document (if any) and applies flag overrides.
ParsedConfig resolve(CommonArgs const& args)
{
    ParsedConfig parsed;
    if (!args.config_path.empty())
    {
        parsed = parse_config(read_file(args.config_path));
        if (!args.problem.empty() && args.problem != parsed.problem_name)
            throw ConfigError("--problem conflicts with the config file's problem");
    }
    else
    {
        if (args.problem.empty())
            throw ConfigError("either --config or --problem is required");
        BenchmarkProblem bench_problem = catalog(args.problem, args.dim);
        parsed.problem_name = bench_problem.name;
        parsed.problem = bench_problem.problem;
        parsed.target = bench_problem.global_minimum;
        parsed.tolerance = bench_problem.target_tolerance;
    }
    if (!args.algorithm.empty())
        parsed.config.algorithm = parse_algorithm(args.algorithm);
    if (args.seed) parsed.config.seed = *args.seed;
    if (args.max_generated) parsed.config.termination.max_generated = *args.max_generated;
    if (args.quench)
    {
        if (parsed.config.parameter_schedules.empty())
            parsed.config.parameter_schedules.resize(1);
        for (auto& s : parsed.config.parameter_schedules) s.quench = *args.quench;
    }
    if (args.batch) parsed.config.batch_size = *args.batch;
    if (args.workers) parsed.config.workers = *args.workers;
    if (args.target) parsed.target = *args.target;
    if (args.tolerance) parsed.tolerance = *args.tolerance;
    parsed.config.validate();
    parsed.problem.validate();
    return parsed;
}

ReportFormat format_of(CommonArgs const& args)
{
    return args.format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
}

int cmd_run(CommonArgs const& args)
{
    ParsedConfig parsed = resolve(args);
    bool const want_target = args.target.has_value()
                             || parsed.config.termination.target_cost.has_value();
    if (args.target)
        parsed.config.termination.target_cost =
            *args.target + args.tolerance.value_or(0.0);
    parsed.config.record_trace = true;
    RunReport const report = run(parsed.problem, parsed.config);
    write_text(args.out, emit_report(report, format_of(args)));
    if (!args.trace_path.empty()) write_text(args.trace_path, trace_to_csv(report));
    if (want_target && !report.generated_at_target) return 1;
    return 0;
}

int cmd_bench(CommonArgs const& args, std::string const& seed_spec, int bench_workers)
{
    ParsedConfig parsed = resolve(args);
    std::vector<std::uint64_t> const seeds = parse_seed_list(seed_spec);
    if (!parsed.target)
        throw ConfigError("bench needs a target (catalog problem or --target)");
    BenchSummary const summary =
        bench(parsed.problem, parsed.config, seeds, *parsed.target,
              parsed.tolerance.value_or(0.0), bench_workers);
    write_text(args.out, emit_report(summary, format_of(args)));
    return summary.successes > 0 ? 0 : 1;
}

int cmd_sample(CommonArgs const& args)
{
    ParsedConfig parsed = resolve(args);
    // Integration-quality sampling wants slower-than-proof cooling; default
    // to inverse quenching unless the user chose a quench factor.
    if (!args.quench)
    {
        if (parsed.config.parameter_schedules.empty())
            parsed.config.parameter_schedules.resize(1);
        for (auto& s : parsed.config.parameter_schedules)
            s.quench = std::min(s.quench, 0.5);
    }
    parsed.config.record_samples = true;
    RunReport const report = run(parsed.problem, parsed.config);
    write_text(args.out, samples_to_csv(report));
    return 0;
}

int cmd_selfopt(CommonArgs const& args,
                std::vector<std::string> const& tune,
                std::optional<long> meta_budget,
                std::string const& inner_seed_spec,
                std::string const& objective,
                std::optional<std::uint64_t> meta_seed)
{
    ParsedConfig parsed = resolve(args);
    MetaConfig meta;
    if (parsed.meta) meta = *parsed.meta;
    for (auto const& knob : tune)
    {
        if (knob == "m") meta.m = MetaRange{1.0, 30.0};
        else if (knob == "n") meta.n = MetaRange{0.5, 10.0};
        else if (knob == "quench") meta.quench = MetaRange{0.5, 4.0};
        else if (knob == "cadence") meta.cadence = MetaRange{10.0, 1000.0};
        else throw ConfigError("unknown tunable '" + knob
                               + "'; expected m, n, quench, or cadence");
    }
    if (meta_budget) meta.meta_budget = *meta_budget;
    if (!inner_seed_spec.empty()) meta.inner_seeds = parse_seed_list(inner_seed_spec);
    if (!objective.empty())
    {
        if (objective == "generated-to-target")
            meta.objective = MetaObjective::GeneratedToTarget;
        else if (objective == "best-at-budget")
            meta.objective = MetaObjective::BestAtBudget;
        else
            throw ConfigError("unknown objective '" + objective + "'");
    }
    if (meta_seed) meta.meta_seed = *meta_seed;
    meta.target = parsed.target.value_or(0.0);
    meta.tolerance = parsed.tolerance.value_or(0.0);
    try
    {
        meta.validate();
    }
    catch (std::invalid_argument const& e)
    {
        throw ConfigError(e.what());
    }

    SelfOptimizeResult const result = self_optimize(parsed.problem, parsed.config, meta);
    nlohmann::json out = {{"default_score", result.default_score},
                          {"tuned_score", result.tuned_score},
                          {"meta_generated", result.meta_report.counters.generated}};
    nlohmann::json tuned = nlohmann::json::object();
    if (!result.tuned.parameter_schedules.empty())
    {
        auto const& s = result.tuned.parameter_schedules.front();
        tuned["m"] = s.m;
        tuned["n"] = s.n;
        tuned["quench"] = s.quench;
    }
    tuned["reanneal_every"] = result.tuned.reanneal_every;
    out["tuned"] = tuned;
    write_text(args.out, out.dump(2) + "\n");
    return 0;
}

int cmd_diag(CommonArgs const& args)
{
    double const quench = args.quench.value_or(2.0);
    std::vector<long> const horizons = {1000, 10000, 100000, 1000000};
    struct Family {
        char const* name;
        ProofFamily family;
    };
    std::vector<Family> const families = {{"ba-log", ProofFamily::BoltzmannLog},
                                          {"fa", ProofFamily::FastReciprocal},
                                          {"asa", ProofFamily::Asa},
                                          {"asa-quenched", ProofFamily::AsaQuenched}};

    ScheduleParams schedule;
    schedule.dimension = args.dim.value_or(4);
    if (args.quench) schedule.quench = *args.quench;

    if (format_of(args) == ReportFormat::Csv)
    {
        std::string csv = "family,quench,horizon,partial_sum\n";
        for (auto const& f : families)
            for (long h : horizons)
            {
                double const q = f.family == ProofFamily::AsaQuenched ? quench : 1.0;
                csv += std::string(f.name) + ',' + std::to_string(q) + ','
                       + std::to_string(h) + ','
                       + std::to_string(proof_sum_diagnostic(f.family, h, q)) + '\n';
            }
        write_text(args.out, csv);
        return 0;
    }
    nlohmann::json sums = nlohmann::json::object();
    for (auto const& f : families)
    {
        nlohmann::json per_horizon = nlohmann::json::object();
        double const q = f.family == ProofFamily::AsaQuenched ? quench : 1.0;
        for (long h : horizons)
            per_horizon[std::to_string(h)] = proof_sum_diagnostic(f.family, h, q);
        sums[f.name] = per_horizon;
    }
    nlohmann::json temperatures = nlohmann::json::array();
    for (double k : {0.0, 1.0, 10.0, 100.0, 1000.0, 10000.0, 100000.0})
        temperatures.push_back({{"k", k}, {"T", asa_temperature(k, schedule)}});
    nlohmann::json out = {{"proof_sums", sums},
                          {"quench", quench},
                          {"schedule", {{"dimension", schedule.dimension},
                                        {"quench", schedule.quench},
                                        {"temperatures", temperatures}}}};
    write_text(args.out, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Adaptive simulated annealing toolkit"};
    app.require_subcommand(1);

    CommonArgs run_args, bench_args, sample_args, selfopt_args, diag_args;
    std::string bench_seeds = "0..99";
    int bench_workers = 1;
    std::vector<std::string> tune;
    std::optional<long> meta_budget;
    std::string inner_seeds;
    std::string objective;
    std::optional<std::uint64_t> meta_seed;

    auto* c_run = app.add_subcommand("run", "single optimization run");
    add_common(c_run, run_args);
    auto* c_bench = app.add_subcommand("bench", "multi-seed benchmark statistics");
    add_common(c_bench, bench_args);
    c_bench->add_option("--seeds", bench_seeds, "seed list: A..B or comma separated");
    c_bench->add_option("--bench-workers", bench_workers, "concurrent seeds");
    auto* c_sample = app.add_subcommand("sample", "run with sampling-record export");
    add_common(c_sample, sample_args);
    auto* c_selfopt = app.add_subcommand("selfopt", "meta-tune the run configuration");
    add_common(c_selfopt, selfopt_args);
    c_selfopt->add_option("--tune", tune, "knobs to tune: m n quench cadence");
    c_selfopt->add_option("--meta-budget", meta_budget, "outer generated states");
    c_selfopt->add_option("--inner-seeds", inner_seeds, "inner seed list");
    c_selfopt->add_option("--objective", objective,
                          "generated-to-target|best-at-budget");
    c_selfopt->add_option("--meta-seed", meta_seed, "outer seed");
    auto* c_diag = app.add_subcommand("diag", "schedule and proof-sum diagnostics");
    add_common(c_diag, diag_args);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (c_run->parsed()) return cmd_run(run_args);
        if (c_bench->parsed()) return cmd_bench(bench_args, bench_seeds, bench_workers);
        if (c_sample->parsed()) return cmd_sample(sample_args);
        if (c_selfopt->parsed())
            return cmd_selfopt(selfopt_args, tune, meta_budget, inner_seeds, objective,
                               meta_seed);
        if (c_diag->parsed()) return cmd_diag(diag_args);
    }
    catch (ConfigError const& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (std::invalid_argument const& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
