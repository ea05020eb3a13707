#ifndef GOLOMB_RUNNER_HPP
#define GOLOMB_RUNNER_HPP

#include <string>
#include <vector>

#include "golomb/config.hpp"
#include "golomb/json_io.hpp"

namespace golomb {

inline constexpr const char* kToolkitVersion = "golomb-lab 0.1.0";

/// Executes one experiment entry; returns {op, line, inputs, result, finding}.
json run_entry(const ConfigEntry& entry, std::uint64_t seed);

/// Executes a whole config (entries may run concurrently, the report is
/// assembled in entry order) and wraps the outcome in a self-contained
/// report: config echo, verdicts, certificates, toolkit version.
json run_config(const Config& cfg);

struct ClaimCheck {
    std::size_t index;
    std::string op;
    bool pass;
    std::string message;
};

/// Replays every certificate in a report through the core modules; a report
/// is trustworthy only if every claim checks out.
std::vector<ClaimCheck> verify_report(const json& report);

/// One row per entry; sweep entries expand to one row per case.
std::string report_to_csv(const json& report);

/// 0 for a clean run, 2 when any entry carries a verdict-level finding.
int findings_exit_code(const json& report);

}  // namespace golomb

#endif
