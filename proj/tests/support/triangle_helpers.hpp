#pragma once

#include <gmpxx.h>

#include <ostream>
#include <vector>

#include "xtp/triangles/triangle.hpp"

namespace xtp::testing {

// Row n of a numeric triangle as integers.
inline std::vector<mpz_class> int_row(const tri::Triangle& t, std::size_t n) {
    std::vector<mpz_class> out;
    for (const Poly& p : t.rows.at(n)) {
        const mpq_class q = p.constant_value().to_mpq();
        out.push_back(q.get_num());
    }
    return out;
}

inline std::vector<mpz_class> ints(std::initializer_list<long> v) {
    std::vector<mpz_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace xtp::testing

namespace xtp {
// Readable gtest failure output.
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }
}  // namespace xtp
