#pragma once

#include <stdexcept>
#include <string>

#include "anneal/config.hpp"

namespace anneal {

inline std::string algorithm_name(Algorithm a)
{
    switch (a)
    {
        case Algorithm::Asa: return "asa";
        case Algorithm::Ba: return "ba";
        case Algorithm::Fa: return "fa";
    }
    throw std::logic_error("unknown algorithm");
}

inline Algorithm parse_algorithm(std::string const& s)
{
    if (s == "asa") return Algorithm::Asa;
    if (s == "ba") return Algorithm::Ba;
    if (s == "fa") return Algorithm::Fa;
    throw std::invalid_argument("unknown algorithm '" + s + "'; expected asa, ba, or fa");
}

inline std::string acceptance_form_name(AcceptanceForm::Kind k)
{
    switch (k)
    {
        case AcceptanceForm::Kind::MetropolisExp: return "metropolis";
        case AcceptanceForm::Kind::Logistic: return "logistic";
        case AcceptanceForm::Kind::Tsallis: return "tsallis";
    }
    throw std::logic_error("unknown acceptance form");
}

inline std::string generation_mode_name(GenerationMode m)
{
    return m == GenerationMode::AllCoordinates ? "all" : "sequential";
}

inline std::string parameter_kind_name(ParameterKind k)
{
    return k == ParameterKind::Real ? "real" : "integer";
}

inline std::string cauchy_mode_name(CauchyMode m)
{
    return m == CauchyMode::Product ? "product" : "isotropic";
}

inline std::string reanneal_trigger_name(ReannealTrigger t)
{
    return t == ReannealTrigger::AcceptedEvents ? "accepted" : "generated";
}

}  // namespace anneal
