#include "russell/harness.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace russell {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_globs(const std::string& selection) {
    std::vector<std::string> globs;
    std::stringstream ss(selection);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = item.find_last_not_of(" \t");
        globs.push_back(item.substr(first, last - first + 1));
    }
    return globs;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

json record_to_json(const VerificationRecord& rec) {
    json params = json::object();
    for (const auto& [name, value] : rec.point.values()) params[name] = value;
    json out;
    out["id"] = rec.id;
    out["params"] = std::move(params);
    out["lhs"] = rec.lhs;
    out["lhs_error"] = rec.lhs_error;
    out["rhs"] = rec.rhs;
    out["rhs_error"] = rec.rhs_error;
    out["abs_diff"] = rec.abs_diff;
    out["rel_diff"] = rec.rel_diff;
    out["tol"] = rec.tol;
    out["pass"] = rec.pass;
    out["note"] = rec.note;
    return out;
}

json records_array(const std::vector<VerificationRecord>& records) {
    json arr = json::array();
    for (const auto& rec : records) arr.push_back(record_to_json(rec));
    return arr;
}

ReportSummary summarize(const std::vector<VerificationRecord>& records) {
    ReportSummary s;
    s.total = records.size();
    for (const auto& rec : records) {
        if (rec.pass) ++s.passed;
        auto [it, inserted] = s.max_rel_diff.try_emplace(rec.id, rec.rel_diff);
        if (!inserted) it->second = std::max(it->second, rec.rel_diff);
    }
    s.failed = s.total - s.passed;
    return s;
}

}  // namespace

std::vector<const IdentitySpec*> select_identities(const std::string& selection) {
    const auto globs = split_globs(selection);
    std::vector<const IdentitySpec*> out;
    for (const auto& spec : registry()) {
        const bool match = std::any_of(globs.begin(), globs.end(), [&](const std::string& g) {
            return fnmatch(g.c_str(), spec.id.c_str(), 0) == 0;
        });
        if (match) out.push_back(&spec);
    }
    return out;
}

RunOutcome execute(const RunOptions& options) {
    RunOutcome outcome;
    Report& report = outcome.report;
    report.options = options;
    if (options.include_timestamp) report.timestamp = utc_timestamp();

    if (options.samples == 0) {
        outcome.exit_status = kExitBadSelection;
        outcome.error = "--samples must be at least 1";
        return outcome;
    }
    const auto selected = select_identities(options.selection);
    if (selected.empty()) {
        outcome.exit_status = kExitBadSelection;
        outcome.error = "no identity matches '" + options.selection + "'";
        return outcome;
    }
    for (const IdentitySpec* spec : selected) {
        report.identities.push_back(spec->id);
        auto records = sweep(*spec, options.samples, options.seed, options.tol_override);
        report.records.insert(report.records.end(), std::make_move_iterator(records.begin()),
                              std::make_move_iterator(records.end()));
    }
    report.summary = summarize(report.records);
    outcome.exit_status = report.summary.failed == 0 ? kExitPass : kExitVerificationFailure;
    return outcome;
}

RunOutcome run(const RunOptions& options, std::ostream& out) {
    RunOutcome outcome = execute(options);
    if (outcome.exit_status == kExitBadSelection) return outcome;

    const std::string text = report_to_json(outcome.report);
    if (options.output_path && !options.output_path->empty()) {
        std::ofstream file(*options.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            outcome.exit_status = kExitIoError;
            outcome.error = "cannot open " + *options.output_path + " for writing";
            return outcome;
        }
        file << text;
        file.flush();
        if (!file) {
            outcome.exit_status = kExitIoError;
            outcome.error = "failed writing " + *options.output_path;
        }
        return outcome;
    }
    out << text;
    return outcome;
}

std::string records_to_json(const std::vector<VerificationRecord>& records) {
    return records_array(records).dump(2);
}

std::string report_to_json(const Report& report) {
    json meta;
    if (!report.timestamp.empty()) meta["timestamp"] = report.timestamp;
    meta["selection"] = report.options.selection;
    meta["samples"] = report.options.samples;
    meta["seed"] = report.options.seed;
    if (report.options.tol_override) {
        meta["tol_override"] = *report.options.tol_override;
    } else {
        meta["tol_override"] = nullptr;
    }
    json classes;
    for (auto cls : {ToleranceClass::Smooth, ToleranceClass::NearSingular, ToleranceClass::Elliptic,
                     ToleranceClass::Transform}) {
        classes[std::string(to_string(cls))] = tolerance_value(cls);
    }
    meta["tolerance_classes"] = std::move(classes);
    meta["identities"] = report.identities;

    json summary;
    summary["total"] = report.summary.total;
    summary["passed"] = report.summary.passed;
    summary["failed"] = report.summary.failed;
    json max_rel = json::object();
    for (const auto& id : report.identities) {
        if (auto it = report.summary.max_rel_diff.find(id); it != report.summary.max_rel_diff.end()) {
            max_rel[id] = it->second;
        }
    }
    summary["max_rel_diff"] = std::move(max_rel);

    json doc;
    doc["metadata"] = std::move(meta);
    doc["records"] = records_array(report.records);
    doc["summary"] = std::move(summary);
    return doc.dump(2) + "\n";
}

void print_registry(std::ostream& out) {
    for (const auto& spec : registry()) {
        out << std::left << std::setw(18) << spec.id << ' ' << std::setw(14)
            << to_string(spec.tolerance_class) << ' ';
        std::string domain;
        for (const auto& p : spec.domain.parameters) {
            if (!domain.empty()) domain += ' ';
            std::ostringstream d;
            if (p.kind == ParameterKind::Discrete) {
                d << p.name << "={";
                for (std::size_t i = 0; i < p.values.size(); ++i) d << (i ? "," : "") << p.values[i];
                d << '}';
            } else {
                d << p.name << "=[" << p.lo << ',' << p.hi << ']';
            }
            domain += d.str();
        }
        out << std::setw(28) << (domain.empty() ? "-" : domain) << ' ' << spec.formula << '\n';
    }
}

}  // namespace russell
