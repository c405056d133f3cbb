#pragma once

// Packed exponent-vector kernels.
//
// A monomial is stored as 32 unsigned 8-bit exponents, one per indeterminate,
// which is exactly one AVX2 register. The inner loop of sparse polynomial
// multiplication adds a fixed monomial to every monomial of the other operand;
// that loop and the handful of comparisons the merge step needs are provided
// here as a scalar reference implementation and an AVX2 variant. The variant
// is picked once at runtime from the CPU feature bits.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace xtp::simd {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr unsigned kMaxExponent = 255;

struct alignas(32) Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct KernelTable {
    std::string_view name;

    // out[i] = a + b[i] for i < n. Returns false if any exponent exceeds
    // kMaxExponent; out is unspecified in that case.
    bool (*add_row)(const Monomial& a, const Monomial* b, Monomial* out, std::size_t n);

    // out[i] = total degree of m[i].
    void (*degrees)(const Monomial* m, std::uint32_t* out, std::size_t n);

    // Lexicographic comparison on the exponent vector, variable 0 most
    // significant. Returns <0, 0, >0.
    int (*compare_lex)(const Monomial& a, const Monomial& b);

    // True iff a[i] <= b[i] for every variable.
    bool (*divides)(const Monomial& a, const Monomial& b);

    // out = b - a. Caller guarantees divides(a, b).
    void (*quotient)(const Monomial& a, const Monomial& b, Monomial& out);
};

const KernelTable& scalar_kernels();

// nullptr when the binary was built without AVX2 support or the running CPU
// lacks it.
const KernelTable* avx2_kernels();

// The table used by the polynomial code. Chosen on first use: AVX2 when
// available, unless the environment variable XTP_KERNELS=scalar is set.
const KernelTable& active_kernels();

// Testing hook. Accepts "scalar" or "avx2"; returns false if the requested
// table is unavailable.
bool select_kernels(std::string_view name);

}  // namespace xtp::simd
