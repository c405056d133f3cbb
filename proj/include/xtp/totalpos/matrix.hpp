#pragma once

#include <cstddef>
#include <vector>

#include "xtp/polyring/poly.hpp"

namespace xtp::tp {

using PolySeq = std::vector<Poly>;

// Dense row-major matrix of polynomials over one context.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, const ContextPtr& ctx = nullptr);
    // Throws std::invalid_argument on ragged input or mixed contexts.
    static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows);
    static PolyMatrix identity(std::size_t n, const ContextPtr& ctx = nullptr);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const ContextPtr& context() const { return ctx_; }
    [[nodiscard]] const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    [[nodiscard]] PolyMatrix transpose() const;
    [[nodiscard]] PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    [[nodiscard]] PolyMatrix specialize(const Assignment& values) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    ContextPtr ctx_;
    std::vector<Poly> data_;
};

// Entry (i, j) = seq[i + j]; throws std::invalid_argument if seq has fewer
// than 2 size - 1 terms.
PolyMatrix hankel(const PolySeq& seq, std::size_t size);
// Leading size x size block of the tridiagonal matrix with s_n on the
// diagonal, r_n at (n, n+1) and t_n at (n, n-1). s and r are indexed from 0,
// t from 1 (t[0] is ignored).
PolyMatrix tridiag(const PolySeq& s, const PolySeq& r, const PolySeq& t, std::size_t size);

// Cofactor expansion along the first row.
Poly det_cofactor(const PolyMatrix& m);
// Fraction-free elimination with exact polynomial division.
Poly det_bareiss(const PolyMatrix& m);
// Cofactor expansion up to order 4, elimination above.
Poly det(const PolyMatrix& m);

// Determinant of the rows x cols submatrix; throws std::invalid_argument on
// size mismatch or an index out of range.
Poly minor(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

}  // namespace xtp::tp
