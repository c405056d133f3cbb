// xtp: batch verification front end.
//
//   xtp verify [options] PLAN...
//
// Exit status is 0 iff every check of every plan passes, 1 if any check
// fails or errors, 2 on a command-line error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "xtp/cli/run.hpp"

namespace {

xtp::Assignment parse_specializations(const std::vector<std::string>& items) {
    xtp::Assignment out;
    for (const std::string& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--specialize", "expected var=rational, got '" + item + "'");
        try {
            out[item.substr(0, eq)] = xtp::Rational::parse(item.substr(eq + 1));
        } catch (const std::exception& e) {
            throw CLI::ValidationError("--specialize", item + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of triangle recurrences, continued fractions and total positivity"};
    app.set_version_flag("--version", std::string(xtp::cli::tool_version()));
    app.require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "Run verification plans");
    std::vector<std::string> plans;
    std::size_t depth = 0, hankel_size = 0, tp_order = 0;
    std::vector<std::string> specialize;
    std::string format = "text";
    unsigned jobs = 1;
    std::string golden_dir;
    bool no_timings = false;

    verify->add_option("plans", plans, "Plan files")->required()->check(CLI::ExistingFile);
    verify->add_option("--depth", depth, "Override every plan's triangle depth")->check(CLI::PositiveNumber);
    verify->add_option("--hankel-size", hankel_size, "Override Hankel truncation sizes")->check(CLI::PositiveNumber);
    verify->add_option("--tp-order", tp_order, "Override the minor order of TP checks")->check(CLI::PositiveNumber);
    verify->add_option("--specialize", specialize, "Specialize an indeterminate, var=rational (repeatable)");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--jobs", jobs, "Worker threads for plans and minor enumeration")->check(CLI::PositiveNumber);
    verify->add_option("--golden-dir", golden_dir, "Write triangle goldens here instead of comparing");
    verify->add_flag("--no-timings", no_timings, "Omit timings so reports are byte-identical across runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    xtp::cli::RunOptions opts;
    try {
        opts.overrides.specialize = parse_specializations(specialize);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (depth) opts.overrides.depth = depth;
    if (hankel_size) opts.overrides.hankel_size = hankel_size;
    if (tp_order) opts.overrides.tp_order = tp_order;
    opts.jobs = jobs;
    if (!golden_dir.empty()) opts.golden_dir = golden_dir;

    std::vector<std::filesystem::path> paths(plans.begin(), plans.end());
    const xtp::cli::RunReport report = xtp::cli::run_batch(paths, opts);
    if (format == "json") {
        std::cout << xtp::cli::report_json(report, !no_timings).dump(2) << "\n";
    } else {
        std::cout << xtp::cli::report_text(report, !no_timings);
    }
    return report.status() == xtp::cli::Status::Pass ? 0 : 1;
}
