#include "polyjis/kernels.hpp"

#include "kernels_common.hpp"

namespace polyjis::kernels::scalar {

void sejis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    for (std::size_t i = 0; i < count; ++i) detail::sejis_one(x, y, i, c1[i], c2[i]);
}

void ejis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    for (std::size_t i = 0; i < count; ++i) detail::ejis_one(x, y, i, c1[i], c2[i]);
}

void sajis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    for (std::size_t i = 0; i < count; ++i) detail::sajis_one(x, y, i, c1[i], c2[i]);
}

void skajis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    for (std::size_t i = 0; i < count; ++i) detail::skajis_one(x, y, i, c1[i], c2[i]);
}

void simjis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    for (std::size_t i = 0; i < count; ++i) detail::simjis_one(x, y, i, c1[i], c2[i]);
}

}  // namespace polyjis::kernels::scalar
