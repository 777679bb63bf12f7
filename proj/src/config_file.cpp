#include "anneal/config_file.hpp"

#include <json.hpp>

#include "anneal/names.hpp"
#include "anneal/testfns.hpp"

namespace anneal {

namespace {

using nlohmann::json;

void check_keys(json const& j, std::string const& section,
                std::initializer_list<char const*> allowed)
{
    if (!j.is_object())
        throw ConfigError("'" + section + "' must be an object");
    for (auto const& [key, value] : j.items())
    {
        (void)value;
        bool known = false;
        for (char const* a : allowed)
            if (key == a) { known = true; break; }
        if (!known)
            throw ConfigError("unknown key '" + key + "' in " + section);
    }
}

double number(json const& j, std::string const& where)
{
    if (!j.is_number()) throw ConfigError("'" + where + "' must be a number");
    return j.get<double>();
}

long integer(json const& j, std::string const& where)
{
    if (!j.is_number_integer()) throw ConfigError("'" + where + "' must be an integer");
    return j.get<long>();
}

std::string text(json const& j, std::string const& where)
{
    if (!j.is_string()) throw ConfigError("'" + where + "' must be a string");
    return j.get<std::string>();
}

void apply_schedule_keys(json const& j, ScheduleParams& s, char const* section)
{
    if (j.contains("m")) s.m = number(j["m"], std::string(section) + ".m");
    if (j.contains("n")) s.n = number(j["n"], std::string(section) + ".n");
    if (j.contains("quench")) s.quench = number(j["quench"], std::string(section) + ".quench");
}

MetaRange meta_range(json const& j, std::string const& where)
{
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("'" + where + "' must be a [lower, upper] pair");
    return {number(j[0], where), number(j[1], where)};
}

}  // namespace

ParsedConfig parse_config(std::string const& document)
{
    json j;
    try
    {
        j = json::parse(document);
    }
    catch (json::parse_error const& e)
    {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(j, "config",
               {"problem", "dim", "parameters", "algorithm", "seed", "generation",
                "fa_mode", "schedule", "acceptance", "reanneal", "termination",
                "fd_step", "batch", "trace", "samples", "target", "tolerance", "meta"});
    if (!j.contains("problem")) throw ConfigError("missing required key 'problem'");

    ParsedConfig parsed;
    parsed.problem_name = text(j["problem"], "problem");
    std::optional<int> dim;
    if (j.contains("dim")) dim = static_cast<int>(integer(j["dim"], "dim"));

    BenchmarkProblem bench_problem;
    try
    {
        bench_problem = catalog(parsed.problem_name, dim);
    }
    catch (std::invalid_argument const& e)
    {
        throw ConfigError(e.what());
    }
    parsed.problem = bench_problem.problem;
    parsed.target = bench_problem.global_minimum;
    parsed.tolerance = bench_problem.target_tolerance;

    if (j.contains("parameters"))
    {
        json const& params = j["parameters"];
        if (!params.is_array())
            throw ConfigError("'parameters' must be an array");
        if (params.size() != parsed.problem.parameters.size())
            throw ConfigError("'parameters' must list all "
                              + std::to_string(parsed.problem.parameters.size())
                              + " parameters of '" + parsed.problem_name + "'");
        for (std::size_t i = 0; i < params.size(); ++i)
        {
            json const& p = params[i];
            check_keys(p, "parameters[" + std::to_string(i) + "]",
                       {"name", "lower", "upper", "kind", "initial"});
            auto& spec = parsed.problem.parameters[i];
            if (p.contains("name")) spec.name = text(p["name"], "name");
            if (p.contains("lower")) spec.lower = number(p["lower"], spec.name + ".lower");
            if (p.contains("upper")) spec.upper = number(p["upper"], spec.name + ".upper");
            if (p.contains("kind"))
            {
                std::string const kind = text(p["kind"], spec.name + ".kind");
                if (kind == "real") spec.kind = ParameterKind::Real;
                else if (kind == "integer") spec.kind = ParameterKind::Integer;
                else throw ConfigError("parameter '" + spec.name + "': unknown kind '" + kind + "'");
            }
            if (p.contains("initial"))
                spec.initial = number(p["initial"], spec.name + ".initial");
            else if (p.contains("lower") || p.contains("upper"))
                spec.initial = 0.5 * (spec.lower + spec.upper);
            try
            {
                spec.validate();
            }
            catch (std::invalid_argument const& e)
            {
                throw ConfigError(e.what());
            }
        }
    }

    RunConfig& config = parsed.config;
    if (j.contains("algorithm"))
    {
        try
        {
            config.algorithm = parse_algorithm(text(j["algorithm"], "algorithm"));
        }
        catch (std::invalid_argument const& e)
        {
            throw ConfigError(e.what());
        }
    }
    if (j.contains("seed")) config.seed = static_cast<std::uint64_t>(integer(j["seed"], "seed"));
    if (j.contains("generation"))
    {
        std::string const mode = text(j["generation"], "generation");
        if (mode == "all") config.generation_mode = GenerationMode::AllCoordinates;
        else if (mode == "sequential") config.generation_mode = GenerationMode::SequentialCoordinate;
        else throw ConfigError("unknown generation mode '" + mode + "'; expected all or sequential");
    }
    if (j.contains("fa_mode"))
    {
        std::string const mode = text(j["fa_mode"], "fa_mode");
        if (mode == "product") config.fa_mode = CauchyMode::Product;
        else if (mode == "isotropic") config.fa_mode = CauchyMode::Isotropic;
        else throw ConfigError("unknown fa_mode '" + mode + "'; expected product or isotropic");
    }
    if (j.contains("schedule"))
    {
        check_keys(j["schedule"], "schedule", {"m", "n", "quench"});
        ScheduleParams s;
        apply_schedule_keys(j["schedule"], s, "schedule");
        config.parameter_schedules = {s};
    }
    if (j.contains("acceptance"))
    {
        check_keys(j["acceptance"], "acceptance", {"form", "q", "m", "n", "quench"});
        json const& a = j["acceptance"];
        if (a.contains("form"))
        {
            std::string const form = text(a["form"], "acceptance.form");
            if (form == "metropolis") config.acceptance_form = AcceptanceForm::metropolis();
            else if (form == "logistic") config.acceptance_form = AcceptanceForm::logistic();
            else if (form == "tsallis")
            {
                double const q = a.contains("q") ? number(a["q"], "acceptance.q") : 1.5;
                try
                {
                    config.acceptance_form = AcceptanceForm::tsallis(q);
                }
                catch (std::invalid_argument const& e)
                {
                    throw ConfigError(e.what());
                }
            }
            else
                throw ConfigError("unknown acceptance form '" + form
                                  + "'; expected metropolis, logistic, or tsallis");
        }
        else if (a.contains("q"))
        {
            throw ConfigError("'acceptance.q' is only valid with form tsallis");
        }
        apply_schedule_keys(a, config.acceptance_schedule, "acceptance");
    }
    if (j.contains("reanneal"))
    {
        check_keys(j["reanneal"], "reanneal", {"every", "trigger"});
        json const& r = j["reanneal"];
        if (r.contains("every")) config.reanneal_every = integer(r["every"], "reanneal.every");
        if (r.contains("trigger"))
        {
            std::string const trigger = text(r["trigger"], "reanneal.trigger");
            if (trigger == "accepted") config.reanneal_trigger = ReannealTrigger::AcceptedEvents;
            else if (trigger == "generated") config.reanneal_trigger = ReannealTrigger::GeneratedEvents;
            else throw ConfigError("unknown reanneal trigger '" + trigger
                                   + "'; expected accepted or generated");
        }
    }
    if (j.contains("termination"))
    {
        check_keys(j["termination"], "termination",
                   {"max_generated", "target", "stall_epsilon", "stall_cycles"});
        json const& t = j["termination"];
        if (t.contains("max_generated"))
            config.termination.max_generated = integer(t["max_generated"], "termination.max_generated");
        if (t.contains("target"))
            config.termination.target_cost = number(t["target"], "termination.target");
        if (t.contains("stall_epsilon"))
            config.termination.stall_epsilon = number(t["stall_epsilon"], "termination.stall_epsilon");
        if (t.contains("stall_cycles"))
            config.termination.stall_cycles =
                static_cast<int>(integer(t["stall_cycles"], "termination.stall_cycles"));
    }
    if (j.contains("fd_step")) config.fd_step = number(j["fd_step"], "fd_step");
    if (j.contains("batch"))
    {
        check_keys(j["batch"], "batch", {"size", "workers"});
        json const& b = j["batch"];
        if (b.contains("size")) config.batch_size = static_cast<int>(integer(b["size"], "batch.size"));
        if (b.contains("workers"))
            config.workers = static_cast<int>(integer(b["workers"], "batch.workers"));
    }
    if (j.contains("trace"))
    {
        if (!j["trace"].is_boolean()) throw ConfigError("'trace' must be a boolean");
        config.record_trace = j["trace"].get<bool>();
    }
    if (j.contains("samples"))
    {
        if (!j["samples"].is_boolean()) throw ConfigError("'samples' must be a boolean");
        config.record_samples = j["samples"].get<bool>();
    }
    if (j.contains("target")) parsed.target = number(j["target"], "target");
    if (j.contains("tolerance")) parsed.tolerance = number(j["tolerance"], "tolerance");

    if (j.contains("meta"))
    {
        // Exactly one meta level: the meta section tunes this config and
        // cannot itself contain another meta section.
        check_keys(j["meta"], "meta",
                   {"tune", "objective", "budget", "inner_seeds", "seed"});
        json const& m = j["meta"];
        MetaConfig meta;
        if (m.contains("tune"))
        {
            check_keys(m["tune"], "meta.tune", {"m", "n", "quench", "cadence"});
            json const& tune = m["tune"];
            if (tune.contains("m")) meta.m = meta_range(tune["m"], "meta.tune.m");
            if (tune.contains("n")) meta.n = meta_range(tune["n"], "meta.tune.n");
            if (tune.contains("quench"))
                meta.quench = meta_range(tune["quench"], "meta.tune.quench");
            if (tune.contains("cadence"))
                meta.cadence = meta_range(tune["cadence"], "meta.tune.cadence");
        }
        if (m.contains("objective"))
        {
            std::string const objective = text(m["objective"], "meta.objective");
            if (objective == "generated-to-target")
                meta.objective = MetaObjective::GeneratedToTarget;
            else if (objective == "best-at-budget")
                meta.objective = MetaObjective::BestAtBudget;
            else
                throw ConfigError("unknown meta objective '" + objective
                                  + "'; expected generated-to-target or best-at-budget");
        }
        if (m.contains("budget")) meta.meta_budget = integer(m["budget"], "meta.budget");
        if (m.contains("inner_seeds"))
        {
            if (!m["inner_seeds"].is_array())
                throw ConfigError("'meta.inner_seeds' must be an array");
            meta.inner_seeds.clear();
            for (auto const& s : m["inner_seeds"])
                meta.inner_seeds.push_back(
                    static_cast<std::uint64_t>(integer(s, "meta.inner_seeds")));
        }
        if (m.contains("seed"))
            meta.meta_seed = static_cast<std::uint64_t>(integer(m["seed"], "meta.seed"));
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
        parsed.meta = meta;
    }

    try
    {
        parsed.problem.validate();
        config.validate();
    }
    catch (std::invalid_argument const& e)
    {
        throw ConfigError(e.what());
    }
    return parsed;
}

}  // namespace anneal
