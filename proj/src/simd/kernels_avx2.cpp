// Compiled with -mavx2; only reached through the dispatch table after a CPU
// feature check.

#include "xtp/simd/monomial_kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace xtp::simd {
namespace {

inline __m256i load(const Monomial& m) {
    return _mm256_load_si256(reinterpret_cast<const __m256i*>(m.e.data()));
}

inline void store(Monomial& m, __m256i v) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(m.e.data()), v);
}

bool add_row_avx2(const Monomial& a, const Monomial* b, Monomial* out, std::size_t n) {
    const __m256i va = load(a);
    __m256i bad = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; ++i) {
        const __m256i vb = load(b[i]);
        const __m256i wrapped = _mm256_add_epi8(va, vb);
        const __m256i saturated = _mm256_adds_epu8(va, vb);
        bad = _mm256_or_si256(bad, _mm256_xor_si256(wrapped, saturated));
        store(out[i], wrapped);
    }
    return _mm256_testz_si256(bad, bad) != 0;
}

void degrees_avx2(const Monomial* m, std::uint32_t* out, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; ++i) {
        const __m256i sums = _mm256_sad_epu8(load(m[i]), zero);
        const __m128i lo = _mm256_castsi256_si128(sums);
        const __m128i hi = _mm256_extracti128_si256(sums, 1);
        const __m128i s = _mm_add_epi64(lo, hi);
        out[i] = static_cast<std::uint32_t>(_mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1));
    }
}

int compare_lex_avx2(const Monomial& a, const Monomial& b) {
    const __m256i eq = _mm256_cmpeq_epi8(load(a), load(b));
    const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
    if (mask == 0xFFFFFFFFu) return 0;
    const int v = __builtin_ctz(~mask);
    return a.e[v] < b.e[v] ? -1 : 1;
}

bool divides_avx2(const Monomial& a, const Monomial& b) {
    const __m256i vb = load(b);
    const __m256i mx = _mm256_max_epu8(load(a), vb);
    const __m256i eq = _mm256_cmpeq_epi8(mx, vb);
    return static_cast<std::uint32_t>(_mm256_movemask_epi8(eq)) == 0xFFFFFFFFu;
}

void quotient_avx2(const Monomial& a, const Monomial& b, Monomial& out) {
    store(out, _mm256_sub_epi8(load(b), load(a)));
}

}  // namespace

const KernelTable* avx2_kernels_impl() {
    static const KernelTable table{"avx2", add_row_avx2, degrees_avx2, compare_lex_avx2, divides_avx2,
                                   quotient_avx2};
    return &table;
}

}  // namespace xtp::simd

#else

namespace xtp::simd {
const KernelTable* avx2_kernels_impl() { return nullptr; }
}  // namespace xtp::simd

#endif
