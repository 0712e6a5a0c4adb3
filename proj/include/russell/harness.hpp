#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "russell/identities.hpp"

namespace russell {

enum ExitStatus : int {
    kExitPass = 0,
    kExitVerificationFailure = 1,
    kExitBadSelection = 2,
    kExitIoError = 3,
};

struct RunOptions {
    std::string selection = "*";  // comma-separated glob list over identity ids
    unsigned samples = 5;
    std::optional<double> tol_override;
    std::optional<std::string> output_path;  // standard output when empty
    std::uint64_t seed = kDefaultSeed;
    bool include_timestamp = true;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::map<std::string, double> max_rel_diff;  // per identity id
};

struct Report {
    std::string timestamp;  // empty when not requested
    RunOptions options;
    std::vector<std::string> identities;  // selected ids in registry order
    std::vector<VerificationRecord> records;
    ReportSummary summary;
};

struct RunOutcome {
    Report report;
    int exit_status = kExitPass;
    std::string error;  // set for exit statuses 2 and 3
};

/// Registry entries whose id matches any glob of the comma-separated list.
std::vector<const IdentitySpec*> select_identities(const std::string& selection);

/// Builds the report without writing it anywhere.
RunOutcome execute(const RunOptions& options);

/// execute() followed by writing the report to options.output_path or `out`.
RunOutcome run(const RunOptions& options, std::ostream& out);

/// Serialized report: {"metadata": ..., "records": [...], "summary": ...}.
std::string report_to_json(const Report& report);

/// The "records" array alone; byte-identical across runs with equal options.
std::string records_to_json(const std::vector<VerificationRecord>& records);

/// One line per registry entry: id, tolerance class, domain, formula.
void print_registry(std::ostream& out);

}  // namespace russell
