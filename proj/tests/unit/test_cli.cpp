#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "xtp/cli/run.hpp"
#include "xtp/polyring/errors.hpp"

using namespace xtp;
using namespace xtp::cli;

namespace {

const std::filesystem::path kRoot = XTP_SOURCE_DIR;

ParseError toml_error(std::string_view text) {
    try {
        (void)parse_toml(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error for: " << text;
    return ParseError("none", 0, 0);
}

PlanResult run_file(const std::filesystem::path& p, const RunOptions& opts = {}) {
    return run_plan(load_plan(p, opts.overrides), opts);
}

const CheckResult* find_check(const PlanResult& r, const std::string& type) {
    for (const CheckResult& c : r.checks) {
        if (c.type == type) return &c;
    }
    return nullptr;
}

constexpr const char* kInlinePlan = R"(depth = 6

[spec]
name = "pascal"
kind = "row-shift"
c0 = "1"
c1 = "1"

[[check]]
type = "hankel-tp"
size = 4
order = 3
)";

}  // namespace

// ---------------------------------------------------------------------------
// TOML subset

TEST(Toml, ParsesScalarsArraysAndTables) {
    const Value v = parse_toml(R"(
# comment
name = "x"   # trailing
big = 1_000
flag = true
list = [1, "two",
        [3]]
inline = { a = 1, b = 'lit\n' }

[table]
key = "v"

[[items]]
id = 1
[[items]]
id = 2
[items.sub]
deep = true
)");
    EXPECT_EQ(v.find("name")->as_string(), "x");
    EXPECT_EQ(v.find("big")->as_integer(), 1000);
    EXPECT_TRUE(v.find("flag")->as_boolean());
    ASSERT_EQ(v.find("list")->as_array().size(), 3u);
    EXPECT_EQ(v.find("inline")->find("b")->as_string(), "lit\\n");
    EXPECT_EQ(v.find("table")->find("key")->as_string(), "v");
    const auto& items = v.find("items")->as_array();
    ASSERT_EQ(items.size(), 2u);
    EXPECT_EQ(items[1].find("id")->as_integer(), 2);
    EXPECT_TRUE(items[1].find("sub")->find("deep")->as_boolean());
}

TEST(Toml, ValuesRememberPositions) {
    const Value v = parse_toml("a = 1\n  b = \"text\"\n");
    EXPECT_EQ(v.find("b")->line(), 2u);
    EXPECT_EQ(v.find("b")->column(), 7u);
    EXPECT_EQ(v.find("b")->content_column(), 8u);
}

TEST(Toml, ErrorsCarryLineAndColumn) {
    const ParseError unterminated = toml_error("a = 1\nb = \"open\n");
    EXPECT_EQ(unterminated.line(), 2u);

    const ParseError dup = toml_error("a = 1\na = 2\n");
    EXPECT_EQ(dup.line(), 2u);
    EXPECT_EQ(dup.column(), 1u);

    const ParseError flt = toml_error("x = 1.5\n");
    EXPECT_EQ(flt.line(), 1u);

    const ParseError dotted = toml_error("\n\na.b = 1\n");
    EXPECT_EQ(dotted.line(), 3u);

    EXPECT_EQ(toml_error("[t]\n[t]\n").line(), 2u);
}

TEST(Toml, TypeMismatchPointsAtValue) {
    const Value v = parse_toml("depth = \"eight\"\n");
    try {
        (void)v.find("depth")->as_integer();
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 9u);
    }
}

// ---------------------------------------------------------------------------
// Plan loading

TEST(Plan, InlineSpecAndInferredContext) {
    const Plan p = parse_plan(kInlinePlan, "inline.toml");
    EXPECT_EQ(p.depth, 6u);
    EXPECT_EQ(p.spec.recurrence.name, "pascal");
    ASSERT_EQ(p.checks.size(), 1u);
    EXPECT_EQ(p.checks[0].type, CheckType::HankelTp);
    EXPECT_EQ(p.checks[0].line, 9u);
    const auto& names = p.spec.recurrence.ctx->names();
    EXPECT_NE(std::find(names.begin(), names.end(), "q"), names.end());
}

TEST(Plan, SpecFileRelativeToPlan) {
    const Plan p = load_plan(kRoot / "plans/factorial.toml");
    EXPECT_EQ(p.spec.recurrence.name, "family1");
    EXPECT_TRUE(p.spec.fraction.has_value());
    EXPECT_EQ(p.specialize.size(), 4u);
    EXPECT_EQ(p.specialize.at("a0"), Rational(1));
}

TEST(Plan, OverridesApply) {
    Overrides o;
    o.depth = 10;
    o.hankel_size = 3;
    o.tp_order = 2;
    o.specialize["q"] = Rational(2);
    const Plan p = parse_plan(kInlinePlan, "inline.toml", o);
    EXPECT_EQ(p.depth, 10u);
    EXPECT_EQ(p.checks[0].size, 3u);
    EXPECT_EQ(p.checks[0].order, 2u);
    EXPECT_EQ(p.specialize.at("q"), Rational(2));
}

TEST(Plan, DepthInconsistencyIsRejected) {
    EXPECT_THROW(load_plan(kRoot / "tests/fixtures/depth-too-small.toml"), std::invalid_argument);
    Overrides o;
    o.hankel_size = 9;
    EXPECT_THROW(parse_plan(kInlinePlan, "inline.toml", o), std::invalid_argument);
}

TEST(Plan, MalformedPolynomialIsLocated) {
    try {
        (void)load_plan(kRoot / "tests/fixtures/malformed-poly.toml");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 6u);
        EXPECT_EQ(e.column(), 20u);
        EXPECT_NE(std::string(e.what()).find("malformed-poly.toml:6:20"), std::string::npos);
    }
}

TEST(Plan, UnknownCheckTypeIsLocated) {
    const std::string text = std::string(kInlinePlan) + "\n[[check]]\ntype = \"bogus\"\n";
    try {
        (void)parse_plan(text, "inline.toml");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 15u);
        EXPECT_EQ(e.column(), 8u);
    }
}

TEST(Plan, UnknownSpecializationIsRejected) {
    Overrides o;
    o.specialize["zz"] = Rational(1);
    EXPECT_THROW(parse_plan(kInlinePlan, "inline.toml", o), std::invalid_argument);
}

TEST(Plan, MissingSpecIsAnError) { EXPECT_THROW(parse_plan("depth = 3\n", "x.toml"), ParseError); }

TEST(Plan, CheckNamesRoundTrip) {
    for (int i = 0; i <= static_cast<int>(CheckType::FundamentalIdentity); ++i) {
        const auto t = static_cast<CheckType>(i);
        EXPECT_EQ(parse_check_name(check_name(t)), t);
    }
    EXPECT_FALSE(parse_check_name("nope"));
}

// ---------------------------------------------------------------------------
// Running plans

TEST(Run, EmptyPlanPasses) {
    const PlanResult r = run_file(kRoot / "tests/fixtures/empty.toml");
    EXPECT_EQ(r.status, Status::Pass);
    EXPECT_TRUE(r.checks.empty());
    RunReport rep;
    rep.plans.push_back(r);
    EXPECT_EQ(report_json(rep, false)["status"], "pass");
}

TEST(Run, FactorialPlanPasses) {
    const PlanResult r = run_file(kRoot / "plans/factorial.toml");
    EXPECT_EQ(r.status, Status::Pass) << r.error;
    ASSERT_EQ(r.checks.size(), 6u);
    for (const CheckResult& c : r.checks) EXPECT_EQ(c.status, Status::Pass) << c.type << ": " << c.detail;
    EXPECT_EQ(r.checks[4].truncation["rows"], 5);
    EXPECT_EQ(r.checks[4].truncation["order"], 4);
}

TEST(Run, PeakPlanFailsWithNegativeWitness) {
    const PlanResult r = run_file(kRoot / "plans/peaks.toml");
    EXPECT_EQ(r.status, Status::Fail);
    const CheckResult* lcx = find_check(r, "k-lcx");
    ASSERT_NE(lcx, nullptr);
    EXPECT_EQ(lcx->status, Status::Fail);
    EXPECT_EQ(lcx->witness["negative_term"], "-4*q^2");
    EXPECT_EQ(lcx->witness["level"], 1);
    EXPECT_EQ(lcx->witness["center"], 2);
    EXPECT_EQ(find_check(r, "oracle-match")->status, Status::Pass);
}

TEST(Run, ErrorAbortsRemainingChecksOnly) {
    const RunReport rep = run_batch({kRoot / "tests/fixtures/error-aborts.toml", kRoot / "plans/factorial.toml"}, {});
    ASSERT_EQ(rep.plans.size(), 2u);
    EXPECT_EQ(rep.plans[0].status, Status::Error);
    ASSERT_EQ(rep.plans[0].checks.size(), 2u);
    EXPECT_EQ(rep.plans[0].checks[0].status, Status::Pass);
    EXPECT_EQ(rep.plans[0].checks[1].status, Status::Error);
    EXPECT_EQ(rep.plans[1].status, Status::Pass);
    EXPECT_EQ(rep.status(), Status::Error);
}

TEST(Run, LoadErrorsStayInTheirPlan) {
    const RunReport rep = run_batch({kRoot / "tests/fixtures/malformed-poly.toml", kRoot / "tests/fixtures/empty.toml"}, {});
    EXPECT_EQ(rep.plans[0].status, Status::Error);
    EXPECT_NE(rep.plans[0].error.find(":6:20:"), std::string::npos);
    EXPECT_EQ(rep.plans[1].status, Status::Pass);
}

TEST(Run, OverallStatusIsFailIffACheckFails) {
    RunReport rep;
    rep.plans.push_back(run_file(kRoot / "plans/factorial.toml"));
    EXPECT_EQ(rep.status(), Status::Pass);
    rep.plans.push_back(run_file(kRoot / "plans/peaks.toml"));
    EXPECT_EQ(rep.status(), Status::Fail);
}

TEST(Run, CommandLineSpecializationReachesChecks) {
    RunOptions opts;
    opts.overrides.specialize["q"] = Rational(1);
    const PlanResult r = run_file(kRoot / "plans/peaks.toml", opts);
    // At q = 1 the rows are plain integers and the failure disappears.
    EXPECT_EQ(find_check(r, "k-lcx")->status, Status::Pass);
}

TEST(Run, GoldenWriteThenCompare) {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "xtp_cli_golden_test";
    std::filesystem::remove_all(dir);
    RunOptions write;
    write.golden_dir = dir;
    const PlanResult w = run_file(kRoot / "plans/factorial.toml", write);
    EXPECT_EQ(w.checks[0].status, Status::Pass);
    std::ifstream a(dir / "factorial.tsv"), b(kRoot / "tests/golden/factorial.tsv");
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str());
    std::filesystem::remove_all(dir);
}

// ---------------------------------------------------------------------------
// Reports

TEST(Report, JsonWithoutTimingsIsDeterministic) {
    const std::vector<std::filesystem::path> plans{kRoot / "plans/factorial.toml", kRoot / "plans/peaks.toml"};
    RunOptions serial;
    RunOptions parallel;
    parallel.jobs = 4;
    const std::string a = report_json(run_batch(plans, serial), false).dump(2);
    const std::string b = report_json(run_batch(plans, parallel), false).dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("time_ms"), std::string::npos);
    EXPECT_NE(report_json(run_batch(plans, serial), true).dump().find("time_ms"), std::string::npos);
}

TEST(Report, JsonSchema) {
    RunReport rep;
    rep.plans.push_back(run_file(kRoot / "plans/peaks.toml"));
    const nlohmann::json j = report_json(rep, false);
    EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
    EXPECT_EQ(j["tool_version"], tool_version());
    EXPECT_EQ(j["status"], "fail");
    const auto& checks = j["plans"][0]["checks"];
    ASSERT_EQ(checks.size(), 3u);
    EXPECT_EQ(checks[2]["type"], "k-lcx");
    EXPECT_EQ(checks[2]["status"], "fail");
    EXPECT_TRUE(checks[2].contains("witness"));
    EXPECT_FALSE(checks[0].contains("witness"));
}

TEST(Report, TextHasSummaryTable) {
    RunReport rep;
    rep.plans.push_back(run_file(kRoot / "plans/factorial.toml"));
    rep.plans.push_back(run_file(kRoot / "plans/peaks.toml"));
    const std::string text = report_text(rep, false);
    EXPECT_NE(text.find("checks  pass  fail  error  status"), std::string::npos);
    EXPECT_NE(text.find("2 plan(s), 9 check(s): 8 pass, 1 fail, 0 error; overall fail"), std::string::npos);
    EXPECT_EQ(text.find(" ms"), std::string::npos);
}
