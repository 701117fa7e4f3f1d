#include "qk/kernels.hpp"

#include <atomic>

namespace qk::kern {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(QK_HAVE_AVX2_TU)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const std::vector<const Kernels*>& available() {
    static const std::vector<const Kernels*> v = [] {
        std::vector<const Kernels*> t{&scalar()};
#if (defined(__x86_64__) || defined(_M_X64)) && defined(QK_HAVE_AVX2_TU)
        if (cpu_has_avx2()) t.push_back(&avx2());
#endif
        return t;
    }();
    return v;
}

namespace {
std::atomic<const Kernels*> g_active{nullptr};
}

const Kernels& active() {
    const Kernels* k = g_active.load(std::memory_order_acquire);
    if (!k) {
        k = available().back(); // best available
        g_active.store(k, std::memory_order_release);
    }
    return *k;
}

void set_active(const Kernels& k) {
    g_active.store(&k, std::memory_order_release);
}

} // namespace qk::kern
