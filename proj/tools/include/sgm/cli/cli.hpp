#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgm/io/json_io.hpp"

namespace sgm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

const std::vector<std::string>& verbs();

/// One invocation. `options` holds verb-specific values keyed by flag name
/// without dashes ("m", "ring", "holes", ...); `args` the positionals.
struct Command {
    std::string verb;
    std::vector<std::string> args;
    std::map<std::string, std::string> options;
    std::string coeff;  // empty: the verb default (Z, or all four rings for oracle)
    std::string index_mode = "literal";
    std::optional<int> max_factors;
    std::optional<std::string> atoms;
    bool json = false;
};

struct RunResult {
    int exit_code = kExitOk;
    Json report;
    /// report rendered as text or JSON per Command::json
    std::string output;
};

RunResult run(const Command& c);

/// Aligned text view of a report. Every key, string and number of the JSON
/// is printed; nothing else carrying digits is added.
std::string render_text(const Json& report);

/// Report fragments shared with the tests.
Json check_json(const std::string& name, const std::string& status, const std::string& detail);

}  // namespace sgm::cli
