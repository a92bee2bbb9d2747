#pragma once

#include <cstddef>
#include <string>

namespace polyjis::kernels {

/// Batch evaluation of one window-invariant family over consecutive windows.
/// x and y hold the vertex coordinates with the cyclic wrap already appended:
/// window i reads entries i .. i+w-1 where w is the family's window size, so
/// the arrays must hold count + w - 1 entries. Outputs are the two invariant
/// components per window.
using BatchFn = void (*)(const double* x, const double* y, std::size_t count, double* c1,
                         double* c2);

struct KernelTable {
    BatchFn sejis;
    BatchFn ejis;
    BatchFn sajis;
    BatchFn skajis;
    BatchFn simjis;
};

enum class Impl { scalar, avx2, neon };

const char* impl_name(Impl impl);
bool impl_available(Impl impl);

/// Implementation selected at startup: the widest available SIMD variant,
/// overridable with POLYJIS_KERNELS={scalar|avx2|neon}.
Impl active_impl();

/// Force a specific implementation (equivalence tests); throws if unavailable.
void set_impl(Impl impl);

const KernelTable& table(Impl impl);

inline const KernelTable& active_table() { return table(active_impl()); }

namespace scalar {
void sejis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void ejis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void sajis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void skajis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void simjis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void sejis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void ejis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void sajis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void skajis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void simjis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void sejis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void ejis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void sajis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void skajis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
void simjis(const double* x, const double* y, std::size_t count, double* c1, double* c2);
}  // namespace neon
#endif

}  // namespace polyjis::kernels
