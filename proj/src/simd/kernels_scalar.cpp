#include "xtp/simd/monomial_kernels.hpp"

#include <cstring>

namespace xtp::simd {
namespace {

bool add_row_scalar(const Monomial& a, const Monomial* b, Monomial* out, std::size_t n) {
    unsigned overflow = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t v = 0; v < kMaxVars; ++v) {
            const unsigned s = unsigned{a.e[v]} + unsigned{b[i].e[v]};
            overflow |= s >> 8;
            out[i].e[v] = static_cast<std::uint8_t>(s);
        }
    }
    return overflow == 0;
}

void degrees_scalar(const Monomial* m, std::uint32_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t d = 0;
        for (auto x : m[i].e) d += x;
        out[i] = d;
    }
}

int compare_lex_scalar(const Monomial& a, const Monomial& b) {
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
}

bool divides_scalar(const Monomial& a, const Monomial& b) {
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (a.e[v] > b.e[v]) return false;
    }
    return true;
}

void quotient_scalar(const Monomial& a, const Monomial& b, Monomial& out) {
    for (std::size_t v = 0; v < kMaxVars; ++v) out.e[v] = static_cast<std::uint8_t>(b.e[v] - a.e[v]);
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", add_row_scalar, degrees_scalar, compare_lex_scalar,
                                   divides_scalar, quotient_scalar};
    return table;
}

}  // namespace xtp::simd
