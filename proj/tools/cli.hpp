#ifndef LEVELING_TOOLS_CLI_HPP
#define LEVELING_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "leveling/oracle.hpp"
#include "leveling/solver.hpp"

namespace leveling::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,     // parse or validation failure, bad flags
  kInfeasible = 2,  // oracle found nothing, or the guard tripped
};

/// Table-2 style block: a Day header and one load row per labelled profile.
std::string render_profile_table(
    const std::vector<std::pair<std::string, ResourceProfile>>& rows);

std::string render_solve_report(const ProjectInstance& instance,
                                const PenaltyParams& params,
                                const SolverConfig& config,
                                const TrialResult& result);

/// Table-1 style block: one row per trial plus the averages row.
std::string render_batch_report(const BatchSummary& summary);

std::string render_oracle_report(const ProjectInstance& instance,
                                 const OracleReport& report);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace leveling::cli

#endif  // LEVELING_TOOLS_CLI_HPP
