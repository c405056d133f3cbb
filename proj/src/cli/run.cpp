#include "xtp/cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "xtp/oracles/enumerate.hpp"
#include "xtp/totalpos/identities.hpp"
#include "xtp/totalpos/tp.hpp"

#ifndef XTP_VERSION
#define XTP_VERSION "0.0.0"
#endif

namespace xtp::cli {

const char* tool_version() { return XTP_VERSION; }

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "?";
}

Status RunReport::status() const {
    Status out = Status::Pass;
    for (const PlanResult& p : plans) {
        if (p.status == Status::Error) return Status::Error;
        if (p.status == Status::Fail) out = Status::Fail;
    }
    return out;
}

namespace {

using nlohmann::json;
using tri::PolySeq;
using tri::Triangle;

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Poly> spec_opt(const std::optional<Poly>& p, const Assignment& a) {
    return p ? std::optional<Poly>(p->specialize(a)) : std::nullopt;
}

PolySeq spec_seq(const PolySeq& seq, const Assignment& a) {
    PolySeq out;
    out.reserve(seq.size());
    for (const Poly& p : seq) out.push_back(p.specialize(a));
    return out;
}

// Everything a plan needs after plan-level specialization.
struct Prepared {
    tri::RecurrenceSpec rec;
    std::optional<tri::FourTermParams> four_term;
    std::optional<cf::JFraction> fraction;
    std::vector<CheckSpec> checks;
};

Prepared prepare(const Plan& plan) {
    const Assignment& a = plan.specialize;
    Prepared p;
    p.rec = plan.spec.recurrence.specialize(a);
    if (plan.spec.four_term) {
        tri::FourTermParams f = *plan.spec.four_term;
        for (Poly* x : {&f.a0, &f.a1, &f.a2, &f.b0, &f.b1, &f.b2, &f.d, &f.lambda}) *x = x->specialize(a);
        p.four_term = f;
    }
    if (plan.spec.fraction) p.fraction = cf::JFraction{plan.spec.fraction->s.specialize(a), plan.spec.fraction->r.specialize(a)};
    for (CheckSpec c : plan.checks) {
        c.gamma = spec_opt(c.gamma, a);
        c.evaluate = spec_opt(c.evaluate, a);
        c.shift = spec_opt(c.shift, a);
        c.shift_denominator = spec_opt(c.shift_denominator, a);
        c.factor = spec_opt(c.factor, a);
        c.expect = spec_seq(c.expect, a);
        c.x = spec_seq(c.x, a);
        c.y = spec_seq(c.y, a);
        p.checks.push_back(std::move(c));
    }
    return p;
}

class PlanRunner {
public:
    PlanRunner(const Plan& plan, const RunOptions& opts) : plan_(plan), opts_(opts), prep_(prepare(plan)) {}

    PlanResult run() {
        PlanResult out;
        out.plan = plan_.source.string();
        out.spec = plan_.spec.source.string();
        for (const CheckSpec& c : prep_.checks) {
            CheckResult r;
            r.type = check_name(c.type);
            r.line = c.line;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                run_check(c, r);
            } catch (const std::exception& e) {
                r.status = Status::Error;
                r.detail = e.what();
            }
            r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            out.checks.push_back(std::move(r));
            if (out.checks.back().status == Status::Error) {
                out.error = "check at line " + std::to_string(c.line) + " (" + check_name(c.type) +
                            "): " + out.checks.back().detail;
                break;
            }
        }
        for (const CheckResult& r : out.checks) {
            if (r.status == Status::Error) out.status = Status::Error;
            else if (r.status == Status::Fail && out.status == Status::Pass) out.status = Status::Fail;
        }
        return out;
    }

private:
    const Triangle& triangle() {
        if (!triangle_) triangle_ = tri::build_triangle(prep_.rec, plan_.depth);
        return *triangle_;
    }

    std::size_t depth_of(const CheckSpec& c) const { return c.depth == 0 ? plan_.depth : c.depth; }
    const ContextPtr& ctx() const { return prep_.rec.ctx; }
    bool is_walk() const { return prep_.rec.kind == tri::Kind::ColumnWalk; }

    const tri::RecurrenceSpec& require_walk(const CheckSpec& c) const {
        if (!is_walk()) throw std::invalid_argument(std::string(check_name(c.type)) + " needs a column-walk spec");
        return prep_.rec;
    }

    // The sequence a check acts on, after the check's transforms.
    PolySeq sequence(const CheckSpec& c) {
        const std::string which = c.sequence.empty() ? (is_walk() ? "first-column" : "rows") : c.sequence;
        Triangle t = triangle();
        if (c.reciprocal) t = tri::reciprocal(t);
        if (c.gamma) t = tri::gamma_binomial_transform(t, *c.gamma);
        if (c.shift && !c.shift_denominator) t = tri::shift_row_gf(t, *c.shift);
        PolySeq seq;
        if (which == "first-column") {
            seq = t.column(0);
        } else if (c.shift && c.shift_denominator) {
            // sum_k T(n,k) (D q + shift)^k D^(n-k)
            const Poly& den = *c.shift_denominator;
            const Poly arg = den * Poly::variable(ctx(), t.row_var) + *c.shift;
            for (std::size_t n = 0; n < t.rows.size(); ++n) {
                Poly acc(ctx());
                for (std::size_t k = 0; k <= n; ++k) {
                    const Poly& e = t.rows[n][k];
                    if (!e.is_zero()) acc += e * arg.pow(static_cast<unsigned>(k)) * den.pow(static_cast<unsigned>(n - k));
                }
                seq.push_back(std::move(acc));
            }
        } else {
            seq = tri::row_gfs(t);
        }
        if (c.evaluate) {
            const VarId v = ctx()->index(t.row_var);
            for (Poly& p : seq) p = p.substitute(v, *c.evaluate);
        }
        // Row polynomials reintroduce the row variable, which may itself be
        // specialized.
        for (Poly& p : seq) p = p.specialize(plan_.specialize);
        const std::size_t d = depth_of(c);
        if (seq.size() > d + 1) seq.resize(d + 1);
        return seq;
    }

    tp::TPOptions tp_options(const CheckSpec& c) const {
        tp::TPOptions o;
        o.jobs = opts_.jobs;
        o.contiguous_only = c.contiguous;
        return o;
    }

    void tp_result(const tp::TPReport& rep, CheckResult& r, const std::string& what) {
        r.truncation = {{"rows", rep.rows},
                        {"cols", rep.cols},
                        {"order", rep.order},
                        {"contiguous_only", rep.contiguous_only},
                        {"minors_checked", rep.minors_checked}};
        if (rep.passed) {
            r.detail = what + ": " + std::to_string(rep.minors_checked) + " minors nonnegative";
        } else {
            r.status = Status::Fail;
            r.detail = what + ": " + rep.summary();
            r.witness = rep.to_json()["witness"];
        }
    }

    void hankel_tp(const PolySeq& seq, const CheckSpec& c, CheckResult& r, const std::string& what) {
        if (seq.size() + 1 < 2 * c.size) {
            throw std::invalid_argument("Hankel size " + std::to_string(c.size) + " needs " +
                                        std::to_string(2 * c.size - 1) + " terms, have " + std::to_string(seq.size()));
        }
        tp_result(tp::is_x_tp_r(tp::hankel(seq, c.size), c.order, tp_options(c)), r, what);
    }

    void run_check(const CheckSpec& c, CheckResult& r) {
        switch (c.type) {
            case CheckType::TriangleBuild: return triangle_build(c, r);
            case CheckType::RowGf: return row_gf(c, r);
            case CheckType::CfMatch: return cf_match(c, r);
            case CheckType::HankelTp: return hankel_tp(sequence(c), c, r, "Hankel");
            case CheckType::KLcx: return k_lcx(c, r);
            case CheckType::CompanionRelation: return companion(c, r);
            case CheckType::ProductFormula: return product_formula(c, r);
            case CheckType::ConvolutionSm: return convolution(c, r);
            case CheckType::OracleMatch: return oracle_match(c, r);
            case CheckType::TridiagCriteria: return tridiag_criteria(c, r);
            case CheckType::FundamentalIdentity: return fundamental(c, r);
        }
    }

    void triangle_build(const CheckSpec& c, CheckResult& r) {
        const Triangle& t = triangle();
        r.truncation = {{"depth", t.depth()}};
        if (const auto bad = tri::recurrence_residual(prep_.rec, t)) {
            r.status = Status::Fail;
            r.detail = "recurrence residual at (" + std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")";
            r.witness = {{"n", bad->first}, {"k", bad->second}};
            return;
        }
        r.detail = "rows 0.." + std::to_string(t.depth()) + " built";
        if (c.golden.empty()) return;
        const std::string text = tri::to_golden(t);
        if (opts_.golden_dir) {
            const std::filesystem::path out = *opts_.golden_dir / std::filesystem::path(c.golden).filename();
            if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
            std::ofstream f(out, std::ios::binary);
            if (!(f << text)) throw std::runtime_error("cannot write golden " + out.string());
            r.detail += "; golden written to " + out.string();
            return;
        }
        const std::filesystem::path in = plan_.source.parent_path() / c.golden;
        std::ifstream f(in, std::ios::binary);
        if (!f) throw std::invalid_argument("golden file " + in.string() + " not found");
        std::stringstream ss;
        ss << f.rdbuf();
        const Triangle g = tri::from_golden(ctx(), ss.str());
        for (std::size_t n = 0; n < std::max(g.rows.size(), t.rows.size()); ++n) {
            if (n >= g.rows.size() || n >= t.rows.size() || !(g.rows[n] == t.rows[n])) {
                r.status = Status::Fail;
                r.detail = "row " + std::to_string(n) + " differs from golden " + in.string();
                r.witness = {{"row", n}};
                return;
            }
        }
        r.detail += "; matches golden";
    }

    void row_gf(const CheckSpec& c, CheckResult& r) {
        const Triangle& t = triangle();
        r.truncation = {{"rows", c.expect.size()}};
        for (std::size_t n = 0; n < c.expect.size(); ++n) {
            const Poly got = tri::row_gf(t, n).specialize(plan_.specialize);
            if (!(got == c.expect[n])) {
                r.status = Status::Fail;
                r.detail = "row " + std::to_string(n) + " generating function differs";
                r.witness = {{"row", n}, {"expected", c.expect[n].str()}, {"got", got.str()}};
                return;
            }
        }
        r.detail = std::to_string(c.expect.size()) + " row polynomials match";
    }

    void cf_match(const CheckSpec& c, CheckResult& r) {
        const std::size_t d = depth_of(c);
        cf::JFraction j;
        if (prep_.fraction) j = *prep_.fraction;
        else if (is_walk()) j = cf::triangle_jfraction(prep_.rec);
        else throw std::invalid_argument("cf-match needs a [fraction] table in the spec");
        const PolySeq seq = sequence(c);
        const SeriesPoly expanded = cf::j_expand(j, d, ctx());
        r.truncation = {{"depth", d}};
        for (std::size_t n = 0; n <= d; ++n) {
            if (!(seq[n] == expanded[n])) {
                r.status = Status::Fail;
                r.detail = "coefficient of z^" + std::to_string(n) + " differs";
                r.witness = {{"n", n}, {"triangle", seq[n].str()}, {"fraction", expanded[n].str()}};
                return;
            }
        }
        r.detail = "series agree through z^" + std::to_string(d);
    }

    void k_lcx(const CheckSpec& c, CheckResult& r) {
        const PolySeq seq = sequence(c);
        const tp::LcxResult res = tp::check_k_lcx(seq, c.k);
        r.truncation = {{"terms", seq.size()}, {"k", c.k}};
        if (res.holds) {
            r.detail = std::to_string(c.k) + "-log-convex on " + std::to_string(seq.size()) + " terms";
        } else {
            r.status = Status::Fail;
            r.detail = "iteration " + std::to_string(res.failed_level) + " at index " + std::to_string(res.failed_center) +
                       " has term " + res.negative_term;
            r.witness = {{"level", res.failed_level},
                         {"center", res.failed_center},
                         {"value", res.failed_value.str()},
                         {"negative_term", res.negative_term}};
        }
        if (!res.identities_agree) {
            r.status = Status::Fail;
            r.detail += "; Hankel-window identities disagree with direct iteration";
        }
    }

    void companion(const CheckSpec& c, CheckResult& r) {
        if (!prep_.four_term) throw std::invalid_argument("companion-relation needs a four-term spec");
        const std::size_t d = depth_of(c);
        const tri::FourTermParams& p = *prep_.four_term;
        const Triangle a = tri::build_triangle(tri::companion_spec(ctx(), p, prep_.rec.name + "-companion"), d);
        r.truncation = {{"depth", d}};
        if (const auto bad = tri::companion_relation_mismatch(triangle(), a, p.lambda, p.d, d)) {
            r.status = Status::Fail;
            r.detail = "relation fails at row " + std::to_string(*bad);
            r.witness = {{"row", *bad}};
        } else {
            r.detail = "relation holds for rows 0.." + std::to_string(d);
        }
    }

    void product_formula(const CheckSpec& c, CheckResult& r) {
        const std::size_t d = depth_of(c);
        const PolySeq seq = sequence(c);
        r.truncation = {{"depth", d}};
        const auto bad = tri::product_formula_mismatch(seq, *c.factor, ctx()->index(c.level_var),
                                                       prep_.rec.denominator, std::min(d, seq.size() - 1));
        if (bad) {
            r.status = Status::Fail;
            r.detail = "product formula fails at row " + std::to_string(*bad);
            r.witness = {{"row", *bad}, {"value", seq[*bad].str()}};
        } else {
            r.detail = "product formula holds for rows 0.." + std::to_string(d);
        }
    }

    void convolution(const CheckSpec& c, CheckResult& r) {
        const std::size_t upto = std::min(c.x.size(), c.y.size()) - 1;
        const PolySeq z = tri::convolution(triangle(), c.x, c.y, upto);
        hankel_tp(z, c, r, "convolution Hankel");
    }

    void oracle_match(const CheckSpec& c, CheckResult& r) {
        using Enum = oracle::CountVector (*)(unsigned);
        struct Entry {
            const char* name;
            Enum fn;
            unsigned limit;
        };
        static constexpr Entry table[] = {
            {"descents", oracle::perms_by_descents, 7},
            {"cycles", oracle::perms_by_cycles, 7},
            {"set-partitions", oracle::set_partitions_by_blocks, 8},
            {"singleton-free-partitions", oracle::set_partitions_without_singletons, 8},
            {"stirling-permutations", oracle::stirling_perms_by_ascent_plateau, 5},
            {"matchings", oracle::matchings_by_odd_smaller, 5},
            {"interior-peaks", oracle::perms_by_interior_peaks, 7},
            {"left-peaks", oracle::perms_by_left_peaks, 7},
        };
        const Entry* e = nullptr;
        for (const Entry& x : table) {
            if (c.oracle == x.name) e = &x;
        }
        if (!e) throw std::invalid_argument("unknown oracle '" + c.oracle + "'");
        const Triangle& t = triangle();
        const long last_row = static_cast<long>(std::min<std::size_t>(depth_of(c), t.depth()));
        const long first = std::max(0L, c.offset);
        const long last = std::min<long>(e->limit, last_row + c.offset);
        std::size_t compared = 0;
        for (long n = first; n <= last; ++n) {
            const long row = n - c.offset;
            if (row < 0) continue;
            std::vector<mpz_class> ints;
            for (const Poly& p : t.rows[static_cast<std::size_t>(row)]) {
                const Rational v = p.constant_value();
                ints.push_back(v.to_mpq().get_num());
                if (v.to_mpq().get_den() != 1) ints.back() = -1;  // never equals a count
            }
            const oracle::CountVector counts = e->fn(static_cast<unsigned>(n));
            ++compared;
            if (!counts.matches(ints)) {
                r.status = Status::Fail;
                r.detail = "row " + std::to_string(row) + " differs from the " + c.oracle + " enumeration of size " +
                           std::to_string(n);
                json cs = json::array();
                for (const auto& x : counts.counts) cs.push_back(x.get_str());
                r.witness = {{"row", row}, {"size", n}, {"counts", cs}};
                break;
            }
        }
        r.truncation = {{"sizes", {first, last}}};
        if (r.status == Status::Pass) r.detail = std::to_string(compared) + " rows match the " + c.oracle + " enumeration";
    }

    void tridiag_criteria(const CheckSpec& c, CheckResult& r) {
        const tri::RecurrenceSpec& w = require_walk(c);
        const std::size_t size = c.size == 0 ? plan_.depth : c.size;
        PolySeq s, rr, t{Poly(ctx())};
        for (std::size_t i = 0; i < size; ++i) {
            s.push_back(w.s.at(static_cast<long>(i)));
            rr.push_back(w.r.at(static_cast<long>(i)));
        }
        for (std::size_t i = 1; i <= size; ++i) t.push_back(w.t.at(static_cast<long>(i)));
        const tp::TridiagCriteria res = tp::check_tridiag_criteria(s, rr, t, size - 1);
        static const char* names[] = {"i", "ii", "iii", "iv"};
        json held = json::array();
        for (int i = 0; i < 4; ++i) {
            if (res.criterion[i]) held.push_back(names[i]);
        }
        r.truncation = {{"size", size}};
        if (!res.any()) {
            r.status = Status::Fail;
            r.detail = "no criterion holds";
            json firsts = json::object();
            for (int i = 0; i < 4; ++i) firsts[names[i]] = *res.first_failure[i];
            r.witness = {{"first_failure", firsts}};
            return;
        }
        r.detail = "criteria holding: " + held.dump();
        if (c.order > 0) {
            CheckResult sub;
            tp_result(tp::is_x_tp_r(tp::tridiag(s, rr, t, size), c.order, tp_options(c)), sub, "tridiagonal");
            r.status = sub.status;
            r.detail += "; " + sub.detail;
            r.witness = sub.witness;
            r.truncation.update(sub.truncation);
        }
    }

    void fundamental(const CheckSpec& c, CheckResult& r) {
        const tri::RecurrenceSpec& w = require_walk(c);
        const std::size_t size = c.size == 0 ? 4 : c.size;
        const tp::FactorizationResult res = tp::fundamental_identity_check(w, size);
        r.truncation = {{"size", size}};
        if (res.holds) {
            r.detail = "factorization holds at size " + std::to_string(size);
        } else {
            r.status = Status::Fail;
            r.detail = "factorization differs from the Hankel matrix";
            if (res.mismatch) r.witness = {{"row", res.mismatch->first}, {"col", res.mismatch->second}};
        }
    }

    const Plan& plan_;
    const RunOptions& opts_;
    Prepared prep_;
    std::optional<Triangle> triangle_;
};

std::string fmt_ms(double ms) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(1);
    ss << ms << " ms";
    return ss.str();
}

}  // namespace

PlanResult run_plan(const Plan& plan, const RunOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    PlanResult out;
    try {
        out = PlanRunner(plan, opts).run();
    } catch (const std::exception& e) {
        out.plan = plan.source.string();
        out.spec = plan.spec.source.string();
        out.status = Status::Error;
        out.error = e.what();
    }
    out.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

RunReport run_batch(const std::vector<std::filesystem::path>& plans, const RunOptions& opts) {
    RunReport report;
    report.plans.resize(plans.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < plans.size(); i = next++) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                report.plans[i] = run_plan(load_plan(plans[i], opts.overrides), opts);
            } catch (const std::exception& e) {
                PlanResult& p = report.plans[i];
                p.plan = plans[i].string();
                p.status = Status::Error;
                p.error = e.what();
                p.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(plans.size())));
    std::vector<std::thread> threads;
    for (unsigned i = 1; i < n; ++i) threads.emplace_back(worker);
    worker();
    for (std::thread& t : threads) t.join();
    return report;
}

nlohmann::json report_json(const RunReport& r, bool timings) {
    json plans = json::array();
    for (const PlanResult& p : r.plans) {
        json checks = json::array();
        for (const CheckResult& c : p.checks) {
            json jc{{"type", c.type}, {"line", c.line}, {"status", status_name(c.status)}, {"detail", c.detail}};
            if (!c.witness.is_null()) jc["witness"] = c.witness;
            if (!c.truncation.is_null()) jc["truncation"] = c.truncation;
            if (timings) jc["time_ms"] = c.time_ms;
            checks.push_back(std::move(jc));
        }
        json jp{{"plan", p.plan}, {"spec", p.spec}, {"status", status_name(p.status)}, {"checks", std::move(checks)}};
        if (!p.error.empty()) jp["error"] = p.error;
        if (timings) jp["time_ms"] = p.time_ms;
        plans.push_back(std::move(jp));
    }
    return json{{"schema_version", kReportSchemaVersion},
                {"tool", "xtp"},
                {"tool_version", tool_version()},
                {"status", status_name(r.status())},
                {"plans", std::move(plans)}};
}

std::string report_text(const RunReport& r, bool timings) {
    std::ostringstream out;
    for (const PlanResult& p : r.plans) {
        out << p.plan << ": " << status_name(p.status);
        if (timings) out << " (" << fmt_ms(p.time_ms) << ")";
        out << "\n";
        for (const CheckResult& c : p.checks) {
            out << "  " << c.type;
            for (std::size_t i = c.type.size(); i < 22; ++i) out << ' ';
            out << status_name(c.status) << "  " << c.detail;
            if (timings) out << "  [" << fmt_ms(c.time_ms) << "]";
            out << "\n";
        }
        if (!p.error.empty()) out << "  error: " << p.error << "\n";
    }
    // Summary table.
    std::size_t width = 4;
    for (const PlanResult& p : r.plans) width = std::max(width, p.plan.size());
    out << "\n" << "plan" << std::string(width - 4 + 2, ' ') << "checks  pass  fail  error  status\n";
    std::size_t total[4] = {0, 0, 0, 0};
    for (const PlanResult& p : r.plans) {
        std::size_t counts[3] = {0, 0, 0};
        for (const CheckResult& c : p.checks) ++counts[static_cast<int>(c.status)];
        char line[96];
        std::snprintf(line, sizeof line, "%6zu  %4zu  %4zu  %5zu  %s\n", p.checks.size(), counts[0], counts[1], counts[2],
                      status_name(p.status));
        out << p.plan << std::string(width - p.plan.size() + 2, ' ') << line;
        total[0] += p.checks.size();
        for (int i = 0; i < 3; ++i) total[i + 1] += counts[i];
    }
    out << r.plans.size() << " plan(s), " << total[0] << " check(s): " << total[1] << " pass, " << total[2] << " fail, "
        << total[3] << " error; overall " << status_name(r.status()) << "\n";
    return out.str();
}

}  // namespace xtp::cli
