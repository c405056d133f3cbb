#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "xtp/polyring/errors.hpp"
#include "xtp/polyring/poly.hpp"
#include "xtp/polyring/ratfunc.hpp"

namespace xtp {

// Inverse of a series constant term. Poly coefficients must be nonzero
// rational constants; RatFunc coefficients must be nonzero.
inline Poly inverse_unit(const Poly& c) {
    if (c.is_zero() || !c.is_constant()) {
        throw NotPolynomial("series constant term " + c.str() + " is not a unit");
    }
    return Poly(c.context(), Rational(1) / c.constant_value());
}

inline RatFunc inverse_unit(const RatFunc& c) {
    if (c.is_zero()) throw NotPolynomial("series constant term is zero");
    return RatFunc(c.den(), c.num());
}

// Power series truncated modulo z^(depth+1).
template <class T>
class Series {
public:
    explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: at least one coefficient required");
    }

    static Series zero(std::size_t depth) { return Series(std::vector<T>(depth + 1, T(0))); }
    static Series one(std::size_t depth) {
        Series s = zero(depth);
        s.c_[0] = T(1);
        return s;
    }

    [[nodiscard]] std::size_t depth() const { return c_.size() - 1; }
    [[nodiscard]] const T& operator[](std::size_t i) const { return c_.at(i); }
    T& operator[](std::size_t i) { return c_.at(i); }
    [[nodiscard]] const std::vector<T>& coeffs() const { return c_; }

    // Drops coefficients above the new depth.
    [[nodiscard]] Series truncated(std::size_t depth) const {
        if (depth > this->depth()) throw std::invalid_argument("Series: cannot extend truncation");
        return Series(std::vector<T>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(depth + 1)));
    }

    Series& operator+=(const Series& o) {
        check_depth(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_depth(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_depth(b);
        Series out = zero(a.depth());
        for (std::size_t n = 0; n < a.c_.size(); ++n) {
            if (is_zero_value(a.c_[n])) continue;
            for (std::size_t m = 0; n + m < a.c_.size(); ++m) {
                if (is_zero_value(b.c_[m])) continue;
                out.c_[n + m] += a.c_[n] * b.c_[m];
            }
        }
        return out;
    }

    // 1/a; the constant term must be a unit (see inverse_unit).
    [[nodiscard]] Series reciprocal() const {
        const T inv = inverse_unit(c_[0]);
        Series out = zero(depth());
        out.c_[0] = inv;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            T acc(0);
            for (std::size_t k = 1; k <= n; ++k) {
                if (is_zero_value(c_[k])) continue;
                acc += c_[k] * out.c_[n - k];
            }
            out.c_[n] = -(acc * inv);
        }
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    static bool is_zero_value(const T& v) { return v.is_zero(); }

    void check_depth(const Series& o) const {
        if (o.c_.size() != c_.size()) {
            throw std::invalid_argument("Series: depth mismatch (" + std::to_string(depth()) + " vs " +
                                        std::to_string(o.depth()) + ")");
        }
    }

    std::vector<T> c_;
};

using SeriesPoly = Series<Poly>;
using SeriesRat = Series<RatFunc>;

}  // namespace xtp
