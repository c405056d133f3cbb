#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xtp/totalpos/matrix.hpp"

namespace xtp::tp {

struct TPWitness {
    std::size_t order = 0;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Poly minor;
    std::string negative_term;  // the largest term with a negative coefficient
};

// Result of a finite x-TP_r check. The certificate covers only the given
// truncation: rows x cols and minors of order <= order.
struct TPReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t order = 0;
    bool contiguous_only = false;
    bool passed = true;
    std::size_t minors_checked = 0;
    std::optional<TPWitness> witness;  // present iff !passed

    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string summary() const;
};

struct TPOptions {
    unsigned jobs = 1;
    // Only minors with consecutive rows and consecutive columns. A fast
    // pre-filter: passing it does not certify x-TP_r.
    bool contiguous_only = false;
};

// Every minor of order <= r must have nonnegative coefficients. On failure
// the witness is the first failing minor by (order, row set, column set) in
// lexicographic order, independent of opts.jobs.
TPReport is_x_tp_r(const PolyMatrix& m, std::size_t r, const TPOptions& opts = {});

// Coefficientwise sufficient criteria for the tridiagonal matrix with s_n
// on the diagonal, r_n above and t_n below (see tridiag), checked for
// n <= upto. t is indexed from 1; t[0] is ignored.
struct TridiagCriteria {
    bool criterion[4] = {false, false, false, false};
    // First index at which each criterion fails, when it fails.
    std::optional<std::size_t> first_failure[4];

    [[nodiscard]] bool any() const { return criterion[0] || criterion[1] || criterion[2] || criterion[3]; }
};
// Needs s[0..upto], r[0..upto], t[1..upto+1].
TridiagCriteria check_tridiag_criteria(const PolySeq& s, const PolySeq& r, const PolySeq& t, std::size_t upto);

// Hypothesis failure of the perturbation check, reported apart from the
// conclusion.
struct HypothesisViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tridiagonal with diagonal a_n + a'_n, superdiagonal b_n - b'_n and
// subdiagonal c_n - c'_n (a, a' indexed from 0; b, b', c, c' from 0 for
// positions (n, n+1) and (n+1, n)). Verifies the hypotheses (a', b', c',
// b - b', c - c' nonnegative and the base x-TP_order at this size; throws
// HypothesisViolation otherwise) and returns the report of the perturbed
// matrix.
TPReport check_perturbation(const PolySeq& a, const PolySeq& b, const PolySeq& c, const PolySeq& da,
                            const PolySeq& db, const PolySeq& dc, std::size_t size, std::size_t order,
                            const TPOptions& opts = {});

// The tridiagonal matrix with unit superdiagonal and subdiagonal r_{n-1} t_n.
PolyMatrix starred_tridiag(const PolySeq& s, const PolySeq& r, const PolySeq& t, std::size_t size);

}  // namespace xtp::tp
