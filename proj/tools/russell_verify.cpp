// Command-line front end for the identity registry.
//
//   russell_verify --list
//   russell_verify --select "R*" --samples 5 --out report.json
//
// Exit codes: 0 all records pass, 1 a record failed, 2 bad selection,
// 3 I/O error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "russell/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Verify definite-integral identities by quadrature against closed forms"};

    russell::RunOptions options;
    double tol = 0.0;
    std::string out_path;
    bool list = false;
    bool no_timestamp = false;

    app.add_option("--select", options.selection, "Comma-separated glob(s) over identity ids")
        ->capture_default_str();
    app.add_option("--samples", options.samples, "Samples per continuous parameter")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    auto* tol_opt = app.add_option("--tol", tol, "Override every tolerance class")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "Write the report here instead of standard output");
    app.add_option("--seed", options.seed, "Sampling seed")->capture_default_str();
    app.add_flag("--list", list, "Print the registry and exit");
    app.add_flag("--no-timestamp", no_timestamp, "Omit the run timestamp from the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : russell::kExitBadSelection;
    }

    if (list) {
        russell::print_registry(std::cout);
        return russell::kExitPass;
    }

    if (*tol_opt) options.tol_override = tol;
    if (!out_path.empty()) options.output_path = out_path;
    options.include_timestamp = !no_timestamp;

    const russell::RunOutcome outcome = russell::run(options, std::cout);
    if (!outcome.error.empty()) std::cerr << "russell_verify: " << outcome.error << '\n';
    const auto& s = outcome.report.summary;
    if (outcome.exit_status == russell::kExitPass || outcome.exit_status == russell::kExitVerificationFailure) {
        std::cerr << s.passed << "/" << s.total << " records passed";
        if (s.failed > 0) std::cerr << ", " << s.failed << " failed";
        std::cerr << '\n';
    }
    return outcome.exit_status;
}
