#if defined(__aarch64__)

#include <arm_neon.h>

#include "polyjis/kernels.hpp"

#include "kernels_common.hpp"

// Two windows per iteration. Same operation order as kernels_common.hpp.

namespace polyjis::kernels::neon {

namespace {

inline float64x2_t sign_of(float64x2_t v) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    const uint64x2_t gt = vcgtq_f64(v, zero);
    const uint64x2_t lt = vcltq_f64(v, zero);
    return vbslq_f64(gt, vdupq_n_f64(1.0), vbslq_f64(lt, vdupq_n_f64(-1.0), zero));
}

inline float64x2_t half_wedge(float64x2_t ax, float64x2_t ay, float64x2_t bx, float64x2_t by) {
    return vmulq_n_f64(vsubq_f64(vmulq_f64(ax, by), vmulq_f64(ay, bx)), 0.5);
}

inline float64x2_t length(float64x2_t dx, float64x2_t dy) {
    return vsqrtq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)));
}

inline float64x2_t tri_delta(float64x2_t ax, float64x2_t ay, float64x2_t bx, float64x2_t by,
                             float64x2_t cx, float64x2_t cy) {
    return vmulq_n_f64(vsubq_f64(vmulq_f64(vsubq_f64(cx, ax), vsubq_f64(by, ay)),
                                 vmulq_f64(vsubq_f64(cy, ay), vsubq_f64(bx, ax))),
                       0.5);
}

}  // namespace

void sejis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const float64x2_t x0 = vld1q_f64(x + i), x1 = vld1q_f64(x + i + 1),
                          x2 = vld1q_f64(x + i + 2);
        const float64x2_t y0 = vld1q_f64(y + i), y1 = vld1q_f64(y + i + 1),
                          y2 = vld1q_f64(y + i + 2);
        vst1q_f64(c1 + i, length(vsubq_f64(x2, x1), vsubq_f64(y2, y1)));
        vst1q_f64(c2 + i, tri_delta(x0, y0, x1, y1, x2, y2));
    }
    for (; i < count; ++i) detail::sejis_one(x, y, i, c1[i], c2[i]);
}

void ejis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const float64x2_t x0 = vld1q_f64(x + i), x1 = vld1q_f64(x + i + 1),
                          x2 = vld1q_f64(x + i + 2), x3 = vld1q_f64(x + i + 3);
        const float64x2_t y0 = vld1q_f64(y + i), y1 = vld1q_f64(y + i + 1),
                          y2 = vld1q_f64(y + i + 2), y3 = vld1q_f64(y + i + 3);
        vst1q_f64(c1 + i, length(vsubq_f64(x3, x2), vsubq_f64(y3, y2)));
        const float64x2_t d42 = length(vsubq_f64(x3, x1), vsubq_f64(y3, y1));
        const float64x2_t t123 = tri_delta(x0, y0, x1, y1, x2, y2);
        const float64x2_t t234 = tri_delta(x1, y1, x2, y2, x3, y3);
        vst1q_f64(c2 + i, vmulq_f64(sign_of(vmulq_f64(t123, t234)), d42));
    }
    for (; i < count; ++i) detail::ejis_one(x, y, i, c1[i], c2[i]);
}

void sajis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const float64x2_t x0 = vld1q_f64(x + i), x1 = vld1q_f64(x + i + 1),
                          x2 = vld1q_f64(x + i + 2), x3 = vld1q_f64(x + i + 3);
        const float64x2_t y0 = vld1q_f64(y + i), y1 = vld1q_f64(y + i + 1),
                          y2 = vld1q_f64(y + i + 2), y3 = vld1q_f64(y + i + 3);
        vst1q_f64(c1 + i, half_wedge(vsubq_f64(x2, x1), vsubq_f64(y2, y1), vsubq_f64(x2, x3),
                                     vsubq_f64(y2, y3)));
        vst1q_f64(c2 + i, half_wedge(vsubq_f64(x1, x0), vsubq_f64(y1, y0), vsubq_f64(x1, x3),
                                     vsubq_f64(y1, y3)));
    }
    for (; i < count; ++i) detail::sajis_one(x, y, i, c1[i], c2[i]);
}

void skajis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const float64x2_t x0 = vld1q_f64(x + i), x1 = vld1q_f64(x + i + 1),
                          x2 = vld1q_f64(x + i + 2), x3 = vld1q_f64(x + i + 3);
        const float64x2_t y0 = vld1q_f64(y + i), y1 = vld1q_f64(y + i + 1),
                          y2 = vld1q_f64(y + i + 2), y3 = vld1q_f64(y + i + 3);
        const float64x2_t s = sign_of(half_wedge(vsubq_f64(x1, x0), vsubq_f64(y1, y0),
                                                 vsubq_f64(x1, x2), vsubq_f64(y1, y2)));
        vst1q_f64(c1 + i, vmulq_f64(s, half_wedge(vsubq_f64(x2, x1), vsubq_f64(y2, y1),
                                                  vsubq_f64(x2, x3), vsubq_f64(y2, y3))));
        vst1q_f64(c2 + i, vmulq_f64(s, half_wedge(vsubq_f64(x1, x0), vsubq_f64(y1, y0),
                                                  vsubq_f64(x1, x3), vsubq_f64(y1, y3))));
    }
    for (; i < count; ++i) detail::skajis_one(x, y, i, c1[i], c2[i]);
}

void simjis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const float64x2_t x0 = vld1q_f64(x + i), x1 = vld1q_f64(x + i + 1),
                          x2 = vld1q_f64(x + i + 2);
        const float64x2_t y0 = vld1q_f64(y + i), y1 = vld1q_f64(y + i + 1),
                          y2 = vld1q_f64(y + i + 2);
        const float64x2_t ux = vsubq_f64(x1, x0);
        const float64x2_t uy = vsubq_f64(y1, y0);
        const float64x2_t len2 = vaddq_f64(vmulq_f64(ux, ux), vmulq_f64(uy, uy));
        const float64x2_t a = half_wedge(ux, uy, vsubq_f64(x1, x2), vsubq_f64(y1, y2));
        vst1q_f64(c1 + i, vdivq_f64(a, len2));
        const float64x2_t d = vaddq_f64(vmulq_f64(ux, vsubq_f64(x2, x0)),
                                        vmulq_f64(uy, vsubq_f64(y2, y0)));
        vst1q_f64(c2 + i, vdivq_f64(d, len2));
    }
    for (; i < count; ++i) detail::simjis_one(x, y, i, c1[i], c2[i]);
}

}  // namespace polyjis::kernels::neon

#endif  // aarch64
