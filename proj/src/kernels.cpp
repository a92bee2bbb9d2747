#include "polyjis/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace polyjis::kernels {

namespace {

const KernelTable kScalarTable{scalar::sejis, scalar::ejis, scalar::sajis, scalar::skajis,
                               scalar::simjis};

#if defined(__x86_64__) || defined(_M_X64)
const KernelTable kAvx2Table{avx2::sejis, avx2::ejis, avx2::sajis, avx2::skajis, avx2::simjis};
#endif

#if defined(__aarch64__)
const KernelTable kNeonTable{neon::sejis, neon::ejis, neon::sajis, neon::skajis, neon::simjis};
#endif

Impl detect() {
    if (const char* env = std::getenv("POLYJIS_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Impl::scalar;
        if (std::strcmp(env, "avx2") == 0 && impl_available(Impl::avx2)) return Impl::avx2;
        if (std::strcmp(env, "neon") == 0 && impl_available(Impl::neon)) return Impl::neon;
        if (std::strcmp(env, "auto") != 0) return Impl::scalar;
    }
    if (impl_available(Impl::avx2)) return Impl::avx2;
    if (impl_available(Impl::neon)) return Impl::neon;
    return Impl::scalar;
}

Impl& current() {
    static Impl impl = detect();
    return impl;
}

}  // namespace

const char* impl_name(Impl impl) {
    switch (impl) {
        case Impl::scalar: return "scalar";
        case Impl::avx2: return "avx2";
        case Impl::neon: return "neon";
    }
    return "?";
}

bool impl_available(Impl impl) {
    switch (impl) {
        case Impl::scalar: return true;
        case Impl::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Impl::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Impl active_impl() { return current(); }

void set_impl(Impl impl) {
    if (!impl_available(impl))
        throw std::runtime_error(std::string("kernel implementation unavailable: ") +
                                 impl_name(impl));
    current() = impl;
}

const KernelTable& table(Impl impl) {
    switch (impl) {
#if defined(__x86_64__) || defined(_M_X64)
        case Impl::avx2: return kAvx2Table;
#endif
#if defined(__aarch64__)
        case Impl::neon: return kNeonTable;
#endif
        default: return kScalarTable;
    }
}

}  // namespace polyjis::kernels
