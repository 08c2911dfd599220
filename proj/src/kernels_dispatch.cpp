#include "redqaoa/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace redqaoa::kernels {

const Ops* avx2_ops_impl(); // defined in kernels_avx2.cpp

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
    static const Ops* ops = [] {
        if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
            return avx2_ops_impl();
        return static_cast<const Ops*>(nullptr);
    }();
    return ops;
#else
    return nullptr;
#endif
}

const Ops* ops_by_name(const char* name) {
    if (std::strcmp(name, "scalar") == 0) return &scalar_ops();
    if (std::strcmp(name, "avx2") == 0) return avx2_ops();
    return nullptr;
}

const Ops& active_ops() {
    static const Ops* chosen = [] {
        if (const char* env = std::getenv("RED_QAOA_KERNEL")) {
            if (const Ops* forced = ops_by_name(env)) return forced;
        }
        if (const Ops* v = avx2_ops()) return v;
        return &scalar_ops();
    }();
    return *chosen;
}

} // namespace redqaoa::kernels
