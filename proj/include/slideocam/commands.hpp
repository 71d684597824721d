#pragma once

#include <ostream>
#include <vector>

#include "slideocam/config.hpp"

namespace slideocam {

enum ExitCode : int {
    exit_success = 0,
    exit_usage = 1,
    exit_invalid_design = 2,
    exit_no_feasible = 3,
};

struct LengthVerdict {
    double L;
    double P_h_max;
    double psi_crit;
    bool hertz_ok;
};

/// Single-design evaluation behind `analyze`, computed directly from the
/// module operations (not through the optimizer).
struct AnalysisReport {
    ValidityReport validity;
    double mu_max = 0.0;
    double tau_c = 0.0;
    double tau_b = 0.0;
    double psi_predicted = 0.0;
    double hertz_allowable = 0.0;
    FeasibilityFlags flags_without_hertz;
    std::vector<LengthVerdict> lengths;
};

AnalysisReport analyze_design(const DesignParams& params, const RunConfig& config);

int cmd_profile(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_optimize(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table2(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace slideocam
