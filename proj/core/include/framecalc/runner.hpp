#pragma once

#include "framecalc/builtins.hpp"
#include "framecalc/report.hpp"

#include <map>
#include <optional>
#include <string>

namespace framecalc {

/// Commands accepted by run().
const std::vector<std::string>& known_commands();

struct RunOptions {
    std::string command = "all";
    std::string field; // classify target; empty means every field
    std::optional<std::string> preset_override;
    std::map<std::string, Rational> bindings;
};

struct RunResult {
    Report report;
    int exit_code = 0; // 0 ok, 1 failed assertions or error sections
};

/// Executes a command pipeline over a manifest and assembles the report.
/// Sections are deterministic: identical manifest and options yield
/// byte-identical reports. Claimed-identity mismatches are annotations and do
/// not fail the run; failed manifest checks and evaluation errors do.
RunResult run(const Manifest& manifest, const RunOptions& opts);

} // namespace framecalc
