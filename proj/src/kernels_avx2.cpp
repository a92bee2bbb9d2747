#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "polyjis/kernels.hpp"

#include "kernels_common.hpp"

// Four windows per iteration via unaligned loads at the window offsets.
// Operation order mirrors kernels_common.hpp exactly; together with the
// disabled FP contraction this keeps AVX2 output bit-identical to scalar.

namespace polyjis::kernels::avx2 {

namespace {

const __m256d kHalf = _mm256_set1_pd(0.5);
const __m256d kZero = _mm256_setzero_pd();
const __m256d kOne = _mm256_set1_pd(1.0);
const __m256d kMinusOne = _mm256_set1_pd(-1.0);

inline __m256d sign_of(__m256d v) {
    const __m256d gt = _mm256_cmp_pd(v, kZero, _CMP_GT_OQ);
    const __m256d lt = _mm256_cmp_pd(v, kZero, _CMP_LT_OQ);
    return _mm256_or_pd(_mm256_and_pd(gt, kOne), _mm256_and_pd(lt, kMinusOne));
}

struct Pts {
    __m256d x0, x1, x2, x3, y0, y1, y2, y3;
};

inline Pts load3(const double* x, const double* y, std::size_t i) {
    Pts p;
    p.x0 = _mm256_loadu_pd(x + i);
    p.x1 = _mm256_loadu_pd(x + i + 1);
    p.x2 = _mm256_loadu_pd(x + i + 2);
    p.y0 = _mm256_loadu_pd(y + i);
    p.y1 = _mm256_loadu_pd(y + i + 1);
    p.y2 = _mm256_loadu_pd(y + i + 2);
    return p;
}

inline Pts load4(const double* x, const double* y, std::size_t i) {
    Pts p = load3(x, y, i);
    p.x3 = _mm256_loadu_pd(x + i + 3);
    p.y3 = _mm256_loadu_pd(y + i + 3);
    return p;
}

inline __m256d half_wedge(__m256d ax, __m256d ay, __m256d bx, __m256d by) {
    return _mm256_mul_pd(kHalf,
                         _mm256_sub_pd(_mm256_mul_pd(ax, by), _mm256_mul_pd(ay, bx)));
}

inline __m256d area123(const Pts& p) {
    return half_wedge(_mm256_sub_pd(p.x1, p.x0), _mm256_sub_pd(p.y1, p.y0),
                      _mm256_sub_pd(p.x1, p.x2), _mm256_sub_pd(p.y1, p.y2));
}

inline __m256d area234(const Pts& p) {
    return half_wedge(_mm256_sub_pd(p.x2, p.x1), _mm256_sub_pd(p.y2, p.y1),
                      _mm256_sub_pd(p.x2, p.x3), _mm256_sub_pd(p.y2, p.y3));
}

inline __m256d area124(const Pts& p) {
    return half_wedge(_mm256_sub_pd(p.x1, p.x0), _mm256_sub_pd(p.y1, p.y0),
                      _mm256_sub_pd(p.x1, p.x3), _mm256_sub_pd(p.y1, p.y3));
}

inline __m256d length(__m256d dx, __m256d dy) {
    return _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
}

// Delta form used by SEJIS/EJIS: 0.5*((x2-x0)*(y1-y0) - (y2-y0)*(x1-x0)),
// indices relative to the triple (a, b, c).
inline __m256d tri_delta(__m256d ax, __m256d ay, __m256d bx, __m256d by, __m256d cx, __m256d cy) {
    return _mm256_mul_pd(
        kHalf, _mm256_sub_pd(_mm256_mul_pd(_mm256_sub_pd(cx, ax), _mm256_sub_pd(by, ay)),
                             _mm256_mul_pd(_mm256_sub_pd(cy, ay), _mm256_sub_pd(bx, ax))));
}

}  // namespace

void sejis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const Pts p = load3(x, y, i);
        _mm256_storeu_pd(c1 + i, length(_mm256_sub_pd(p.x2, p.x1), _mm256_sub_pd(p.y2, p.y1)));
        _mm256_storeu_pd(c2 + i, tri_delta(p.x0, p.y0, p.x1, p.y1, p.x2, p.y2));
    }
    for (; i < count; ++i) detail::sejis_one(x, y, i, c1[i], c2[i]);
}

void ejis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const Pts p = load4(x, y, i);
        _mm256_storeu_pd(c1 + i, length(_mm256_sub_pd(p.x3, p.x2), _mm256_sub_pd(p.y3, p.y2)));
        const __m256d d42 = length(_mm256_sub_pd(p.x3, p.x1), _mm256_sub_pd(p.y3, p.y1));
        const __m256d t123 = tri_delta(p.x0, p.y0, p.x1, p.y1, p.x2, p.y2);
        const __m256d t234 = tri_delta(p.x1, p.y1, p.x2, p.y2, p.x3, p.y3);
        const __m256d s = sign_of(_mm256_mul_pd(t123, t234));
        _mm256_storeu_pd(c2 + i, _mm256_mul_pd(s, d42));
    }
    for (; i < count; ++i) detail::ejis_one(x, y, i, c1[i], c2[i]);
}

void sajis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const Pts p = load4(x, y, i);
        _mm256_storeu_pd(c1 + i, area234(p));
        _mm256_storeu_pd(c2 + i, area124(p));
    }
    for (; i < count; ++i) detail::sajis_one(x, y, i, c1[i], c2[i]);
}

void skajis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const Pts p = load4(x, y, i);
        const __m256d s = sign_of(area123(p));
        _mm256_storeu_pd(c1 + i, _mm256_mul_pd(s, area234(p)));
        _mm256_storeu_pd(c2 + i, _mm256_mul_pd(s, area124(p)));
    }
    for (; i < count; ++i) detail::skajis_one(x, y, i, c1[i], c2[i]);
}

void simjis(const double* x, const double* y, std::size_t count, double* c1, double* c2) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const Pts p = load3(x, y, i);
        const __m256d ux = _mm256_sub_pd(p.x1, p.x0);
        const __m256d uy = _mm256_sub_pd(p.y1, p.y0);
        const __m256d len2 = _mm256_add_pd(_mm256_mul_pd(ux, ux), _mm256_mul_pd(uy, uy));
        _mm256_storeu_pd(c1 + i, _mm256_div_pd(area123(p), len2));
        const __m256d wx = _mm256_sub_pd(p.x2, p.x0);
        const __m256d wy = _mm256_sub_pd(p.y2, p.y0);
        const __m256d d = _mm256_add_pd(_mm256_mul_pd(ux, wx), _mm256_mul_pd(uy, wy));
        _mm256_storeu_pd(c2 + i, _mm256_div_pd(d, len2));
    }
    for (; i < count; ++i) detail::simjis_one(x, y, i, c1[i], c2[i]);
}

}  // namespace polyjis::kernels::avx2

#endif  // x86-64
