#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopftwist/parse.hpp"
#include "hopftwist/submanifold.hpp"

namespace hopftwist {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TwistSpec {
    std::string kind = "jordanian";  // trivial, abelian or jordanian
    std::string h = "H", e = "E";
    /// Pairs of PBW expressions x_i, y_i of an abelian twist.
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string scale = "i";
};

/// Declarative setup read from a text file of `key = value` lines grouped in
/// [algebra], [realization], [twist], [metric] and [quadric] sections; '#'
/// starts a comment. Unset parts fall back to the built-in hyperboloid setup.
struct Config {
    std::optional<unsigned> order;
    LiePtr algebra;
    RealizationPtr realization;
    std::optional<TwistSpec> twist;
    std::optional<Metric> metric;
    std::optional<QuadricIdeal> quadric;
    std::vector<std::string> parameters{"a", "c"};

    ParseContext context() const;
};

/// Throws ConfigError naming the offending line.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

/// Builds the twist on `alg`; throws ConfigError for unknown kinds or symbols.
Twist build_twist(const LiePtr& alg, const TwistSpec& spec, const std::vector<std::string>& parameters = {"a", "c"});

}  // namespace hopftwist
