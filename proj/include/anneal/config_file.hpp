#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "anneal/bench.hpp"
#include "anneal/config.hpp"
#include "anneal/problem.hpp"

namespace anneal {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A fully resolved configuration document: the problem (from the catalog,
/// with optional parameter overrides), the run configuration with defaults
/// filled in, and the optional target/meta sections.
struct ParsedConfig {
    std::string problem_name;
    Problem problem;
    RunConfig config;
    std::optional<double> target;
    std::optional<double> tolerance;
    std::optional<MetaConfig> meta;
};

/// Parses a JSON configuration document. Unknown keys anywhere are hard
/// errors, as are inverted parameter ranges (named in the message) and
/// unknown algorithm/problem selectors. See docs/config-schema.md.
ParsedConfig parse_config(std::string const& text);

}  // namespace anneal
