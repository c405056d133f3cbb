#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xtp/cli/plan.hpp"

namespace xtp::cli {

inline constexpr int kReportSchemaVersion = 1;
const char* tool_version();

enum class Status { Pass, Fail, Error };
const char* status_name(Status s);

struct CheckResult {
    std::string type;
    std::size_t line = 0;
    Status status = Status::Pass;
    std::string detail;
    nlohmann::json witness;     // null when absent
    nlohmann::json truncation;  // null when absent
    double time_ms = 0;
};

struct PlanResult {
    std::string plan;  // path as given
    std::string spec;
    Status status = Status::Pass;
    std::string error;  // load or check error message
    std::vector<CheckResult> checks;
    double time_ms = 0;
};

struct RunReport {
    std::vector<PlanResult> plans;
    [[nodiscard]] Status status() const;
};

struct RunOptions {
    Overrides overrides;
    unsigned jobs = 1;
    // When set, triangle-build goldens are written here instead of compared.
    std::optional<std::filesystem::path> golden_dir;
};

// Executes the checks in order. A check that errors aborts the rest of the
// plan; a failing check does not.
PlanResult run_plan(const Plan& plan, const RunOptions& opts);
// Loads and runs every plan; plans run concurrently, results keep input order.
RunReport run_batch(const std::vector<std::filesystem::path>& plans, const RunOptions& opts);

nlohmann::json report_json(const RunReport& r, bool timings = true);
std::string report_text(const RunReport& r, bool timings = true);

}  // namespace xtp::cli
