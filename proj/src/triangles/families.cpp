#include "xtp/triangles/families.hpp"

#include <stdexcept>

#include "xtp/polyring/poly_text.hpp"

namespace xtp::tri {

const ContextPtr& family_context() {
    static const ContextPtr ctx = VarContext::make(
        {"a0", "a1", "a2", "b0", "b1", "b2", "d", "lambda", "mu", "gamma", "m", "r", "p", "x", "q", "n", "k"});
    return ctx;
}

namespace {

Poly P(std::string_view s) { return parse_poly(family_context(), s); }

RecurrenceSpec two(std::string name, std::string_view c0, std::string_view c1) {
    return RecurrenceSpec::row_shift(family_context(), std::move(name), P(c0), P(c1));
}

}  // namespace

RecurrenceSpec pascal_spec() { return two("pascal", "1", "1"); }
RecurrenceSpec eulerian_spec() { return two("eulerian", "k", "n - k + 1"); }
RecurrenceSpec stirling2_spec() { return two("stirling2", "k", "1"); }
RecurrenceSpec stirling1_spec() { return two("stirling1", "n - 1", "1"); }
RecurrenceSpec whitney_spec() { return two("whitney", "m*(n - 1) + r", "1"); }

RecurrenceSpec two_term_family(int which) {
    switch (which) {
        case 1:
            return two("family1", "a0*(n - 1) + a2", "b0*(n - 1) + b2");
        case 2:
            return two("family2", "a0*(b0 + b1)*(n - 1) + a0*b1*k + a0*b2", "b0*(n - 1) + b1*(k - 1) + b2");
        case 3:
            return two("family3", "a1*k + a2", "b1*(k - 1) + b2");
        case 4:
            return two("family4", "a0*(n - k - 1) + a2", "b0*(n - k) + b2");
        case 5:
            return two("family5", "a1*k + a2", "b0*n - b0*k + b2");
        case 6: {
            RecurrenceSpec s = two("family6", "b0*(a1*n - 2*a1*k + 2*a2 - a1)", "a1*(a1*(n - k) + a2)");
            s.denominator = P("a1");
            return s;
        }
        case 7: {
            RecurrenceSpec s = two("family7", "a1*(a1*k + a2)", "b0*(a1*(2*k - n) + 2*a2 - a1)");
            s.denominator = P("a1");
            return s;
        }
        default:
            throw std::invalid_argument("two-term family index must be 1..7");
    }
}

FourTermParams four_term_family_params(int which) {
    FourTermParams p;
    p.d = P("d");
    p.lambda = P("lambda");
    switch (which) {
        case 1:
            p.a1 = P("a1");
            p.a2 = P("a2");
            p.b0 = P("-d*a1");
            p.b1 = P("b1 + 2*d*a1");
            p.b2 = P("b2 - b1 - d*(a1 - a2)");
            return p;
        case 2:
            p.a0 = P("a0");
            p.a1 = P("-a0");
            p.a2 = P("a2 - a0");
            p.b0 = P("b0 + 2*d*a0");
            p.b1 = P("-(b0 + 2*d*a0)");
            p.b2 = P("b2 + d*a2");
            return p;
        case 3:
            p.a1 = P("a1");
            p.a2 = P("a2");
            p.b0 = P("b0 - d*a1");
            p.b1 = P("-(b0 - 2*d*a1)");
            p.b2 = P("b2 - d*(a1 - a2)");
            return p;
        default:
            throw std::invalid_argument("four-term family index must be 1..3");
    }
}

RecurrenceSpec four_term_family(int which) {
    return four_term_spec(family_context(), four_term_family_params(which), "fourterm" + std::to_string(which));
}

RecurrenceSpec evaluated_product_spec() { return two("evaluated-product", "a0*n - mu*b1*k + a2", "b0*n + b1*k + b2"); }
Poly evaluated_product_factor() { return P("(a0 + mu*b0)*k + a2 + mu*(b1 + b2)"); }

Poly family1_product_factor() { return P("(a0 + b0*q)*k + a2 - a0 + (b2 - b0)*q"); }
Poly family2_product_factor() { return P("(q + a0)*(b2 + (b0 + b1)*(k - 1))"); }

RecurrenceSpec shift_source_spec() { return two("shift-source", "a0*n - lambda*b1*k + a2", "b0*n + b1*k + b2"); }
RecurrenceSpec shift_target_spec() {
    return two("shift-target", "(a0 + lambda*b0)*n + lambda*b1*k + a2 + lambda*(b1 + b2)", "b0*n + b1*k + b2");
}

RecurrenceSpec substitution_s_spec() {
    RecurrenceSpec s = two("substitution-s", "a1*k + a2", "b0*(n - 2*k + 1)");
    s.row_var = "x";
    return s;
}
RecurrenceSpec substitution_e_spec() {
    RecurrenceSpec s = two("substitution-e", "a1*k + a2", "a1*(n - k) + a2");
    s.row_var = "x";
    return s;
}

RecurrenceSpec stirling_permutation_spec() { return two("stirling-permutations", "2*k", "2*n - 2*k + 1"); }
RecurrenceSpec interior_peak_spec() { return two("interior-peaks", "2*k + 2", "n + 1 - 2*k"); }
RecurrenceSpec left_peak_spec() { return two("left-peaks", "2*k + 1", "n - 2*k + 1"); }

RecurrenceSpec minimax_spec() {
    RecurrenceSpec s = two("minimax", "(1 + p)*(1 + q)*(k + 1)", "n - 2*k + 1");
    s.row_var = "x";
    return s;
}

RecurrenceSpec bell_walk_spec() {
    const auto& ctx = family_context();
    return RecurrenceSpec::column_walk(ctx, "bell-walk", CoeffSeq::constant(Poly(ctx, Rational(1))),
                                       CoeffSeq::closed_form(P("k + 1"), "k"), CoeffSeq::closed_form(P("k"), "k"));
}

RecurrenceSpec symbolic_walk_spec(std::size_t levels) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < levels; ++i) names.push_back("r" + std::to_string(i));
    for (std::size_t i = 0; i < levels; ++i) names.push_back("s" + std::to_string(i));
    for (std::size_t i = 1; i <= levels; ++i) names.push_back("t" + std::to_string(i));
    names.emplace_back("q");
    const ContextPtr ctx = VarContext::make(names);
    const auto seq = [ctx, levels](std::string prefix, long first) {
        return CoeffSeq::generator(
            [ctx, levels, prefix, first](long i) {
                if (i < first || i >= first + static_cast<long>(levels)) return Poly(ctx);
                return Poly::variable(ctx, prefix + std::to_string(i));
            },
            prefix + "_i");
    };
    return RecurrenceSpec::column_walk(ctx, "symbolic-walk", seq("r", 0), seq("s", 0), seq("t", 1));
}

}  // namespace xtp::tri
