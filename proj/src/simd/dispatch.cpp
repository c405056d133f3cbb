#include <atomic>
#include <cstdlib>
#include <string_view>

#include "xtp/simd/monomial_kernels.hpp"

namespace xtp::simd {

const KernelTable* avx2_kernels_impl();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable* initial_table() {
    const char* env = std::getenv("XTP_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const auto* t = avx2_kernels()) return t;
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& active_slot() {
    static std::atomic<const KernelTable*> slot{initial_table()};
    return slot;
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable* table = cpu_has_avx2() ? avx2_kernels_impl() : nullptr;
    return table;
}

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

bool select_kernels(std::string_view name) {
    if (name == "scalar") {
        active_slot().store(&scalar_kernels());
        return true;
    }
    if (name == "avx2") {
        if (const auto* t = avx2_kernels()) {
            active_slot().store(t);
            return true;
        }
    }
    return false;
}

}  // namespace xtp::simd
