#include "xtp/totalpos/matrix.hpp"

#include <stdexcept>
#include <string>

namespace xtp::tp {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const ContextPtr& ctx)
    : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, Poly(ctx)) {}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Poly>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    ContextPtr ctx;
    for (const auto& row : rows) {
        if (row.size() != nc) throw std::invalid_argument("PolyMatrix: ragged rows");
        for (const Poly& p : row) ctx = unify_context(ctx, p.context());
    }
    PolyMatrix m(rows.size(), nc, ctx);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

PolyMatrix PolyMatrix::identity(std::size_t n, const ContextPtr& ctx) {
    PolyMatrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(ctx, Rational(1));
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_, ctx_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    PolyMatrix s(rows.size(), cols.size(), ctx_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= rows_ || cols[j] >= cols_) throw std::invalid_argument("submatrix: index out of range");
            s(i, j) = (*this)(rows[i], cols[j]);
        }
    }
    return s;
}

PolyMatrix PolyMatrix::specialize(const Assignment& values) const {
    PolyMatrix s = *this;
    for (Poly& p : s.data_) p = p.specialize(values);
    return s;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: dimension mismatch in product");
    PolyMatrix out(a.rows_, b.cols_, unify_context(a.ctx_, b.ctx_));
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
            }
        }
    }
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix hankel(const PolySeq& seq, std::size_t size) {
    if (size > 0 && seq.size() < 2 * size - 1) {
        throw std::invalid_argument("hankel: need " + std::to_string(2 * size - 1) + " terms, have " +
                                    std::to_string(seq.size()));
    }
    ContextPtr ctx;
    for (const Poly& p : seq) ctx = unify_context(ctx, p.context());
    PolyMatrix m(size, size, ctx);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) m(i, j) = seq[i + j];
    }
    return m;
}

PolyMatrix tridiag(const PolySeq& s, const PolySeq& r, const PolySeq& t, std::size_t size) {
    if (s.size() < size || (size > 1 && (r.size() < size - 1 || t.size() < size))) {
        throw std::invalid_argument("tridiag: sequences too short for size " + std::to_string(size));
    }
    ContextPtr ctx;
    for (const auto* seq : {&s, &r, &t}) {
        for (const Poly& p : *seq) ctx = unify_context(ctx, p.context());
    }
    PolyMatrix m(size, size, ctx);
    for (std::size_t n = 0; n < size; ++n) {
        m(n, n) = s[n];
        if (n + 1 < size) m(n, n + 1) = r[n];
        if (n >= 1) m(n, n - 1) = t[n];
    }
    return m;
}

namespace {

void require_square(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
}

Poly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return Poly(m.context(), Rational(1));
    if (n == 1) return m(rows[0], cols[0]);
    if (n == 2) return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
    const std::size_t r0 = rows.front();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    Poly acc(m.context());
    for (std::size_t j = 0; j < n; ++j) {
        const Poly& e = m(r0, cols[j]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c) {
            if (c != j) sub_cols.push_back(cols[c]);
        }
        Poly term = e * cofactor_rec(m, sub_rows, sub_cols);
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

}  // namespace

Poly det_cofactor(const PolyMatrix& m) {
    require_square(m);
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::size_t> cols = idx;
    return cofactor_rec(m, idx, cols);
}

Poly det_bareiss(const PolyMatrix& in) {
    require_square(in);
    const std::size_t n = in.rows();
    if (n == 0) return Poly(in.context(), Rational(1));
    PolyMatrix a = in;
    Poly prev(in.context(), Rational(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return Poly(in.context());
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = v.divide_exact(prev);
            }
            a(i, k) = Poly(in.context());
        }
        prev = a(k, k);
    }
    Poly d = a(n - 1, n - 1);
    return negate ? -d : d;
}

Poly det(const PolyMatrix& m) { return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m); }

Poly minor(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor: row and column sets differ in size");
    return det(m.submatrix(rows, cols));
}

}  // namespace xtp::tp
