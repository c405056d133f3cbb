#include "xtp/cli/plan.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "xtp/polyring/errors.hpp"
#include "xtp/polyring/poly_text.hpp"

namespace xtp::cli {
namespace {

struct Names {
    CheckType type;
    const char* name;
};

constexpr Names kCheckNames[] = {
    {CheckType::TriangleBuild, "triangle-build"},
    {CheckType::RowGf, "row-gf"},
    {CheckType::CfMatch, "cf-match"},
    {CheckType::HankelTp, "hankel-tp"},
    {CheckType::KLcx, "k-lcx"},
    {CheckType::CompanionRelation, "companion-relation"},
    {CheckType::ProductFormula, "product-formula"},
    {CheckType::ConvolutionSm, "convolution-sm"},
    {CheckType::OracleMatch, "oracle-match"},
    {CheckType::TridiagCriteria, "tridiag-criteria"},
    {CheckType::FundamentalIdentity, "fundamental-identity"},
};

// Keys whose string values are names rather than polynomials.
const std::set<std::string, std::less<>> kNonPolyKeys = {"name", "kind", "type", "sequence", "oracle", "golden", "spec"};

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

void collect_identifiers(const std::string& text, std::vector<std::string>& out) {
    for (std::size_t i = 0; i < text.size();) {
        if (ident_start(text[i])) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            std::string id = text.substr(i, j - i);
            if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
            i = j;
        } else if (text[i] >= '0' && text[i] <= '9') {
            while (i < text.size() && ident_char(text[i])) ++i;  // skip numbers like 2e
        } else {
            ++i;
        }
    }
}

void collect_from(const Value& v, const std::string& key, std::vector<std::string>& out) {
    switch (v.kind()) {
        case Value::Kind::String:
            if (!kNonPolyKeys.contains(key)) collect_identifiers(v.as_string(), out);
            break;
        case Value::Kind::Array:
            for (const Value& item : v.as_array()) collect_from(item, key, out);
            break;
        case Value::Kind::Table:
            for (const auto& [k, item] : v.as_table()) {
                if (k == "variables" || k == "specialize") continue;
                collect_from(item, k, out);
            }
            break;
        default:
            break;
    }
}

struct Reader {
    ContextPtr ctx;

    Poly poly(const Value& v) const {
        if (v.is(Value::Kind::Integer)) return Poly(ctx, Rational(static_cast<long long>(v.as_integer())));
        const std::string& s = v.as_string();
        return parse_poly(ctx, s, v.line(), v.content_column());
    }

    std::optional<Poly> opt_poly(const Value& table, std::string_view key) const {
        const Value* v = table.find(key);
        if (!v) return std::nullopt;
        return poly(*v);
    }

    std::vector<Poly> poly_list(const Value& v) const {
        std::vector<Poly> out;
        for (const Value& item : v.as_array()) out.push_back(poly(item));
        return out;
    }
};

std::string opt_string(const Value& t, std::string_view key, std::string dflt = {}) {
    const Value* v = t.find(key);
    return v ? v->as_string() : dflt;
}

std::size_t opt_size(const Value& t, std::string_view key, std::size_t dflt) {
    const Value* v = t.find(key);
    if (!v) return dflt;
    const std::int64_t x = v->as_integer();
    if (x < 0) throw ParseError("expected a nonnegative integer", v->line(), v->column());
    return static_cast<std::size_t>(x);
}

const Value& required(const Value& t, std::string_view key, const char* where) {
    const Value* v = t.find(key);
    if (!v) throw ParseError(std::string(where) + ": missing key '" + std::string(key) + "'", t.line(), t.column());
    return *v;
}

// A sequence given as a closed form in `level` or as an explicit list
// starting at `first`; lists are zero past their end.
CoeffSeq sequence(const Reader& rd, const Value& v, const char* level, long first) {
    if (v.is(Value::Kind::Array)) {
        std::vector<Poly> items = rd.poly_list(v);
        return CoeffSeq::generator(
            [items, first](long i) {
                const long j = i - first;
                return j >= 0 && j < static_cast<long>(items.size()) ? items[static_cast<std::size_t>(j)] : Poly(0);
            },
            "list");
    }
    return CoeffSeq::closed_form(rd.poly(v), level);
}

ContextPtr make_context(const Value& spec_root, const Value* plan_root) {
    std::vector<std::string> names;
    if (const Value* vars = spec_root.find("variables")) {
        for (const Value& v : vars->as_array()) {
            const std::string& n = v.as_string();
            if (!is_identifier(n)) throw ParseError("'" + n + "' is not an identifier", v.line(), v.column());
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
        }
    }
    collect_from(spec_root, "", names);
    if (plan_root) collect_from(*plan_root, "", names);
    std::string row_var = "q";
    if (const Value* rv = spec_root.find("row_var")) row_var = rv->as_string();
    for (const char* n : {row_var.c_str(), "n", "k"}) {
        if (std::find(names.begin(), names.end(), n) == names.end()) names.emplace_back(n);
    }
    return VarContext::make(names);
}

SpecDoc parse_spec_in(const Value& root, const std::filesystem::path& source, const ContextPtr& ctx) {
    const Reader rd{ctx};
    SpecDoc doc;
    doc.source = source;
    const std::string name = opt_string(root, "name", source.stem().string());
    const Value& kind_v = required(root, "kind", "spec");
    const std::string kind = kind_v.as_string();
    const std::string row_var = opt_string(root, "row_var", "q");
    doc.depth = opt_size(root, "depth", 0);

    if (kind == "row-shift") {
        doc.recurrence = tri::RecurrenceSpec::row_shift(ctx, name, rd.poly(required(root, "c0", "row-shift spec")),
                                                        rd.poly(required(root, "c1", "row-shift spec")),
                                                        rd.opt_poly(root, "c2").value_or(Poly(ctx)));
    } else if (kind == "column-walk") {
        doc.recurrence = tri::RecurrenceSpec::column_walk(ctx, name, sequence(rd, required(root, "r", "walk"), "k", 0),
                                                          sequence(rd, required(root, "s", "walk"), "k", 0),
                                                          sequence(rd, required(root, "t", "walk"), "k", 1));
    } else if (kind == "four-term") {
        tri::FourTermParams p;
        p.a0 = rd.opt_poly(root, "a0").value_or(Poly(0));
        p.a1 = rd.opt_poly(root, "a1").value_or(Poly(0));
        p.a2 = rd.opt_poly(root, "a2").value_or(Poly(0));
        p.b0 = rd.opt_poly(root, "b0").value_or(Poly(0));
        p.b1 = rd.opt_poly(root, "b1").value_or(Poly(0));
        p.b2 = rd.opt_poly(root, "b2").value_or(Poly(0));
        p.d = rd.opt_poly(root, "d").value_or(Poly(0));
        p.lambda = rd.opt_poly(root, "lambda").value_or(Poly(1));
        doc.recurrence = tri::four_term_spec(ctx, p, name);
        doc.four_term = p;
    } else {
        throw ParseError("unknown kind '" + kind + "' (expected row-shift, column-walk or four-term)", kind_v.line(),
                         kind_v.column());
    }
    doc.recurrence.row_var = row_var;
    if (const Value* d = root.find("denominator")) doc.recurrence.denominator = rd.poly(*d);
    try {
        doc.recurrence.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), kind_v.line(), kind_v.column());
    }

    if (const Value* f = root.find("fraction")) {
        const Value& type_v = required(*f, "type", "fraction");
        const std::string type = type_v.as_string();
        cf::JFraction j;
        if (type == "S") {
            if (const Value* list = f->find("alphas")) {
                j = cf::contract(cf::sfraction(rd.poly_list(*list)));
            } else {
                const Poly even = rd.poly(required(*f, "alpha_even", "S-fraction"));
                const Poly odd = rd.poly(required(*f, "alpha_odd", "S-fraction"));
                const VarId n = ctx->index("n");
                j = cf::contract(cf::sfraction([even, n](long i) { return even.specialize(n, Rational(i)); },
                                               [odd, n](long i) { return odd.specialize(n, Rational(i)); }, name));
            }
            if (const Value* beta = f->find("beta")) {
                const CoeffSeq b = sequence(rd, *beta, "n", 0);
                const CoeffSeq base = j.s;
                j.s = CoeffSeq::generator([b, base](long i) { return base.at(i) + b.at(i); }, "s + beta");
            }
        } else if (type == "J") {
            j.s = sequence(rd, required(*f, "s", "J-fraction"), "n", 0);
            j.r = sequence(rd, required(*f, "r", "J-fraction"), "n", 1);
        } else {
            throw ParseError("fraction type must be \"S\" or \"J\"", type_v.line(), type_v.column());
        }
        if (const Value* sc = f->find("scale")) j = cf::scaled(j, rd.poly(*sc));
        doc.fraction = j;
        doc.fraction_kind = type;
    }
    return doc;
}

CheckSpec parse_check(const Reader& rd, const Value& t) {
    CheckSpec c;
    c.line = t.line();
    const Value& type_v = required(t, "type", "check");
    const auto type = parse_check_name(type_v.as_string());
    if (!type) throw ParseError("unknown check type '" + type_v.as_string() + "'", type_v.line(), type_v.column());
    c.type = *type;
    c.depth = opt_size(t, "depth", 0);
    c.size = opt_size(t, "size", 0);
    c.order = opt_size(t, "order", 0);
    c.k = static_cast<unsigned>(opt_size(t, "k", 1));
    c.sequence = opt_string(t, "sequence");
    if (!c.sequence.empty() && c.sequence != "rows" && c.sequence != "first-column") {
        const Value* v = t.find("sequence");
        throw ParseError("sequence must be \"rows\" or \"first-column\"", v->line(), v->column());
    }
    if (const Value* v = t.find("reciprocal")) c.reciprocal = v->as_boolean();
    if (const Value* v = t.find("contiguous")) c.contiguous = v->as_boolean();
    c.gamma = rd.opt_poly(t, "gamma");
    c.evaluate = rd.opt_poly(t, "evaluate");
    c.shift = rd.opt_poly(t, "shift");
    c.shift_denominator = rd.opt_poly(t, "shift_denominator");
    c.factor = rd.opt_poly(t, "factor");
    c.level_var = opt_string(t, "level_var", "k");
    if (const Value* v = t.find("expect")) c.expect = rd.poly_list(*v);
    if (const Value* v = t.find("x")) c.x = rd.poly_list(*v);
    if (const Value* v = t.find("y")) c.y = rd.poly_list(*v);
    c.oracle = opt_string(t, "oracle");
    if (const Value* v = t.find("offset")) c.offset = static_cast<long>(v->as_integer());
    c.golden = opt_string(t, "golden");

    auto need = [&](bool ok, const char* what) {
        if (!ok) throw ParseError(std::string(check_name(c.type)) + ": " + what, t.line(), t.column());
    };
    switch (c.type) {
        case CheckType::ProductFormula: need(c.factor.has_value(), "missing 'factor'"); break;
        case CheckType::ConvolutionSm: need(!c.x.empty() && !c.y.empty(), "missing 'x' or 'y'"); break;
        case CheckType::OracleMatch: need(!c.oracle.empty(), "missing 'oracle'"); break;
        case CheckType::RowGf: need(!c.expect.empty(), "missing 'expect'"); break;
        default: break;
    }
    return c;
}

void apply_overrides(Plan& plan, const Overrides& o) {
    if (o.depth) plan.depth = *o.depth;
    for (CheckSpec& c : plan.checks) {
        if (c.type == CheckType::HankelTp || c.type == CheckType::ConvolutionSm ||
            c.type == CheckType::FundamentalIdentity || c.type == CheckType::TridiagCriteria) {
            if (o.hankel_size) c.size = *o.hankel_size;
        }
        if (c.type == CheckType::HankelTp || c.type == CheckType::ConvolutionSm || c.type == CheckType::TridiagCriteria) {
            if (o.tp_order) c.order = *o.tp_order;
        }
    }
    for (const auto& [k, v] : o.specialize) plan.specialize[k] = v;
    for (const auto& [k, v] : plan.specialize) {
        if (!plan.spec.recurrence.ctx->find(k)) throw std::invalid_argument("specialize: unknown indeterminate '" + k + "'");
    }
}

// Depth each check needs from the materialized triangle.
void check_depths(const Plan& plan) {
    for (const CheckSpec& c : plan.checks) {
        std::size_t need = 0;
        switch (c.type) {
            case CheckType::CfMatch:
            case CheckType::CompanionRelation:
            case CheckType::ProductFormula:
            case CheckType::OracleMatch:
            case CheckType::RowGf:
                need = c.depth;
                break;
            case CheckType::HankelTp:
                need = c.size == 0 ? 0 : 2 * c.size - 2;
                if (c.size == 0 || c.order == 0) {
                    throw std::invalid_argument("check at line " + std::to_string(c.line) +
                                                ": hankel-tp needs positive size and order");
                }
                break;
            case CheckType::KLcx:
                if (c.k < 1 || c.k > 3) {
                    throw std::invalid_argument("check at line " + std::to_string(c.line) + ": k must be 1, 2 or 3");
                }
                need = std::max<std::size_t>(c.depth, 2 * c.k);
                break;
            case CheckType::ConvolutionSm:
                need = std::max(c.x.size(), c.y.size()) - 1;
                break;
            default:
                break;
        }
        if (c.type == CheckType::RowGf) need = std::max(need, c.expect.size() - 1);
        if (need > plan.depth) {
            throw std::invalid_argument("check at line " + std::to_string(c.line) + " (" + check_name(c.type) +
                                        ") needs triangle depth " + std::to_string(need) + " but the plan declares " +
                                        std::to_string(plan.depth));
        }
    }
}

}  // namespace

const char* check_name(CheckType t) {
    for (const auto& n : kCheckNames) {
        if (n.type == t) return n.name;
    }
    return "?";
}

std::optional<CheckType> parse_check_name(std::string_view s) {
    for (const auto& n : kCheckNames) {
        if (s == n.name) return n.type;
    }
    return std::nullopt;
}

SpecDoc parse_spec(const Value& root, const std::filesystem::path& source) {
    return parse_spec_in(root, source, make_context(root, nullptr));
}

Plan parse_plan(std::string_view text, const std::filesystem::path& source, const Overrides& o) {
    const Value root = parse_toml(text);
    Plan plan;
    plan.source = source;

    Value spec_root;
    std::filesystem::path spec_source = source;
    std::string spec_text;
    if (const Value* inline_spec = root.find("spec"); inline_spec && inline_spec->is(Value::Kind::Table)) {
        spec_root = *inline_spec;
    } else if (inline_spec) {
        spec_source = source.parent_path() / inline_spec->as_string();
        spec_text = read_file(spec_source);
        try {
            spec_root = parse_toml(spec_text);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), e.line(), e.column(), spec_source.string());
        }
    } else {
        throw ParseError("plan: missing 'spec' (a file path or a [spec] table)", 1, 1);
    }

    const ContextPtr ctx = make_context(spec_root, &root);
    try {
        plan.spec = parse_spec_in(spec_root, spec_source, ctx);
    } catch (const ParseError& e) {
        if (spec_source == source || !e.file().empty()) throw;
        throw ParseError(e.message(), e.line(), e.column(), spec_source.string());
    }
    plan.depth = opt_size(root, "depth", plan.spec.depth == 0 ? 8 : plan.spec.depth);
    if (const Value* sp = root.find("specialize")) {
        for (const auto& [k, v] : sp->as_table()) {
            try {
                plan.specialize[k] = v.is(Value::Kind::Integer) ? Rational(static_cast<long long>(v.as_integer()))
                                                                : Rational::parse(v.as_string());
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("specialize: ") + e.what(), v.line(), v.column());
            }
        }
    }
    const Reader rd{ctx};
    if (const Value* checks = root.find("check")) {
        for (const Value& c : checks->as_array()) plan.checks.push_back(parse_check(rd, c));
    }
    apply_overrides(plan, o);
    check_depths(plan);
    return plan;
}

Plan load_plan(const std::filesystem::path& path, const Overrides& o) {
    const std::string text = read_file(path);
    try {
        return parse_plan(text, path, o);
    } catch (const ParseError& e) {
        if (!e.file().empty()) throw;
        throw ParseError(e.message(), e.line(), e.column(), path.string());
    }
}

}  // namespace xtp::cli
