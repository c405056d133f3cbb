#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "xtp/cli/toml.hpp"
#include "xtp/contfrac/contfrac.hpp"
#include "xtp/triangles/transforms.hpp"
#include "xtp/triangles/triangle.hpp"

namespace xtp::cli {

enum class CheckType {
    TriangleBuild,
    RowGf,
    CfMatch,
    HankelTp,
    KLcx,
    CompanionRelation,
    ProductFormula,
    ConvolutionSm,
    OracleMatch,
    TridiagCriteria,
    FundamentalIdentity,
};

const char* check_name(CheckType t);
std::optional<CheckType> parse_check_name(std::string_view s);

// One [[check]] entry. Unused fields keep their defaults.
struct CheckSpec {
    CheckType type = CheckType::TriangleBuild;
    std::size_t line = 0;

    std::size_t depth = 0;  // 0: the plan's triangle depth
    std::size_t size = 0;
    std::size_t order = 0;
    unsigned k = 1;

    // Sequence selection and transforms for hankel-tp / k-lcx.
    std::string sequence;  // "rows" or "first-column"; empty picks by kind
    bool reciprocal = false;
    std::optional<Poly> gamma;
    std::optional<Poly> evaluate;      // row variable := value
    std::optional<Poly> shift;         // row variable := row variable + shift / shift_denominator,
    std::optional<Poly> shift_denominator;  // with rows scaled by shift_denominator^n
    bool contiguous = false;

    std::optional<Poly> factor;  // product-formula, in the level variable
    std::string level_var = "k";
    std::vector<Poly> expect;    // row-gf
    std::vector<Poly> x, y;      // convolution-sm
    std::string oracle;          // oracle-match
    long offset = 0;
    std::string golden;          // triangle-build
};

// A spec file: a recurrence plus an optional continued fraction.
struct SpecDoc {
    std::filesystem::path source;
    tri::RecurrenceSpec recurrence;
    std::optional<tri::FourTermParams> four_term;  // kind = "four-term"
    std::optional<cf::JFraction> fraction;
    std::string fraction_kind;  // "S" or "J"
    std::size_t depth = 0;
};

struct Plan {
    std::filesystem::path source;
    SpecDoc spec;
    std::size_t depth = 8;
    Assignment specialize;
    std::vector<CheckSpec> checks;
};

// CLI-level overrides applied while loading.
struct Overrides {
    std::optional<std::size_t> depth;
    std::optional<std::size_t> hankel_size;
    std::optional<std::size_t> tp_order;
    Assignment specialize;
};

// Throws ParseError (with the offending file's line/column) or
// std::invalid_argument for semantic errors such as inconsistent depths.
Plan load_plan(const std::filesystem::path& path, const Overrides& o = {});
Plan parse_plan(std::string_view text, const std::filesystem::path& source, const Overrides& o = {});
SpecDoc parse_spec(const Value& root, const std::filesystem::path& source);

}  // namespace xtp::cli
