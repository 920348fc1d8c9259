#pragma once

#include "salemkit/grid.hpp"
#include "salemkit/kernel.hpp"
#include "salemkit/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace salemkit {

inline constexpr const char* tool_version = "0.1.0";

enum class OutputFormat { json, csv };

struct ScenarioConfig {
    double sigma = 0.75;
    double m = 1.0;
    std::string f_kind = "gaussian";
    Grid grid;
    std::vector<std::string> suites{"all"};
    std::string output_path;  // empty: standard output
    OutputFormat format = OutputFormat::json;
    unsigned threads = 0;     // 0: one per suite
    ContourSpec contour;

    /// Throws ErrorKind::config.
    void validate() const;
};

/// Suite names accepted by verify.
const std::vector<std::string>& suite_names();

/// Runs one suite (not "all"). Entries are sorted by check_id.
VerificationReport run_suite(const std::string& suite, const ScenarioConfig& cfg);

/// Runs cfg.suites, expanding "all", at most cfg.threads at a time.
VerificationReport run_suites(const ScenarioConfig& cfg);

/// Entry point behind the salemkit executable. Exit codes: 0 all checks
/// pass, 1 some check failed, 2 configuration error, 3 numerical error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace salemkit
