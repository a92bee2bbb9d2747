#pragma once

#include <cmath>
#include <cstddef>

// Per-window reference arithmetic shared by the scalar kernels and the SIMD
// tail loops. The SIMD variants replicate these exact operation sequences
// (no FMA contraction anywhere in this library), so results are bit-identical
// across implementations.

namespace polyjis::kernels::detail {

inline double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

inline void sejis_one(const double* x, const double* y, std::size_t i, double& c1, double& c2) {
    const double ex = x[i + 2] - x[i + 1];
    const double ey = y[i + 2] - y[i + 1];
    c1 = std::sqrt(ex * ex + ey * ey);
    c2 = 0.5 * ((x[i + 2] - x[i]) * (y[i + 1] - y[i]) - (y[i + 2] - y[i]) * (x[i + 1] - x[i]));
}

inline void ejis_one(const double* x, const double* y, std::size_t i, double& c1, double& c2) {
    const double ex = x[i + 3] - x[i + 2];
    const double ey = y[i + 3] - y[i + 2];
    c1 = std::sqrt(ex * ex + ey * ey);
    const double fx = x[i + 3] - x[i + 1];
    const double fy = y[i + 3] - y[i + 1];
    const double d42 = std::sqrt(fx * fx + fy * fy);
    const double t123 =
        0.5 * ((x[i + 2] - x[i]) * (y[i + 1] - y[i]) - (y[i + 2] - y[i]) * (x[i + 1] - x[i]));
    const double t234 = 0.5 * ((x[i + 3] - x[i + 1]) * (y[i + 2] - y[i + 1]) -
                               (y[i + 3] - y[i + 1]) * (x[i + 2] - x[i + 1]));
    c2 = sign_of(t123 * t234) * d42;
}

inline double area234(const double* x, const double* y, std::size_t i) {
    return 0.5 * ((x[i + 2] - x[i + 1]) * (y[i + 2] - y[i + 3]) -
                  (y[i + 2] - y[i + 1]) * (x[i + 2] - x[i + 3]));
}

inline double area124(const double* x, const double* y, std::size_t i) {
    return 0.5 * ((x[i + 1] - x[i]) * (y[i + 1] - y[i + 3]) -
                  (y[i + 1] - y[i]) * (x[i + 1] - x[i + 3]));
}

inline double area123(const double* x, const double* y, std::size_t i) {
    return 0.5 * ((x[i + 1] - x[i]) * (y[i + 1] - y[i + 2]) -
                  (y[i + 1] - y[i]) * (x[i + 1] - x[i + 2]));
}

inline void sajis_one(const double* x, const double* y, std::size_t i, double& c1, double& c2) {
    c1 = area234(x, y, i);
    c2 = area124(x, y, i);
}

inline void skajis_one(const double* x, const double* y, std::size_t i, double& c1, double& c2) {
    const double s = sign_of(area123(x, y, i));
    c1 = s * area234(x, y, i);
    c2 = s * area124(x, y, i);
}

inline void simjis_one(const double* x, const double* y, std::size_t i, double& c1, double& c2) {
    const double ux = x[i + 1] - x[i];
    const double uy = y[i + 1] - y[i];
    const double len2 = ux * ux + uy * uy;
    c1 = area123(x, y, i) / len2;
    c2 = (ux * (x[i + 2] - x[i]) + uy * (y[i + 2] - y[i])) / len2;
}

}  // namespace polyjis::kernels::detail
