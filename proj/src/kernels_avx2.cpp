// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; it must only be reached through the dispatcher, which
// checks CPU support at runtime.

#include "redqaoa/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace redqaoa::kernels {

namespace {

void phase_mul_avx2(double* re, double* im, const std::int32_t* bins,
                    const double* cos_tab, const double* sin_tab,
                    std::size_t size) {
    std::size_t i = 0;
    for (; i + 4 <= size; i += 4) {
        const __m128i idx =
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(bins + i));
        const __m256d c = _mm256_i32gather_pd(cos_tab, idx, 8);
        const __m256d s = _mm256_i32gather_pd(sin_tab, idx, 8);
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d m = _mm256_loadu_pd(im + i);
        _mm256_storeu_pd(re + i, _mm256_fmsub_pd(r, c, _mm256_mul_pd(m, s)));
        _mm256_storeu_pd(im + i, _mm256_fmadd_pd(r, s, _mm256_mul_pd(m, c)));
    }
    for (; i < size; ++i) {
        const double c = cos_tab[bins[i]];
        const double s = sin_tab[bins[i]];
        const double r = re[i], m = im[i];
        re[i] = r * c - m * s;
        im[i] = r * s + m * c;
    }
}

void mixer_pairs_avx2(double* re, double* im, double c, double s,
                      std::size_t stride, std::size_t size) {
    if (stride < 4) {
        scalar_ops().mixer_pairs(re, im, c, s, stride, size);
        return;
    }
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = _mm256_set1_pd(s);
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; off += 4) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const __m256d r0 = _mm256_loadu_pd(re + i0);
            const __m256d m0 = _mm256_loadu_pd(im + i0);
            const __m256d r1 = _mm256_loadu_pd(re + i1);
            const __m256d m1 = _mm256_loadu_pd(im + i1);
            _mm256_storeu_pd(re + i0, _mm256_fmadd_pd(cv, r0, _mm256_mul_pd(sv, m1)));
            _mm256_storeu_pd(im + i0, _mm256_fmsub_pd(cv, m0, _mm256_mul_pd(sv, r1)));
            _mm256_storeu_pd(re + i1, _mm256_fmadd_pd(cv, r1, _mm256_mul_pd(sv, m0)));
            _mm256_storeu_pd(im + i1, _mm256_fmsub_pd(cv, m1, _mm256_mul_pd(sv, r0)));
        }
    }
}

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d sum2 = _mm_add_pd(lo, hi);
    const __m128d swapped = _mm_unpackhi_pd(sum2, sum2);
    return _mm_cvtsd_f64(_mm_add_sd(sum2, swapped));
}

double weighted_prob_sum_avx2(const double* re, const double* im,
                              const std::int32_t* w, std::size_t size) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= size; i += 4) {
        const __m128i wi =
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(w + i));
        const __m256d wd = _mm256_cvtepi32_pd(wi);
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d m = _mm256_loadu_pd(im + i);
        const __m256d p = _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m));
        acc = _mm256_fmadd_pd(p, wd, acc);
    }
    double tail = hsum(acc);
    for (; i < size; ++i)
        tail += (re[i] * re[i] + im[i] * im[i]) * static_cast<double>(w[i]);
    return tail;
}

double norm_sq_avx2(const double* re, const double* im, std::size_t size) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= size; i += 4) {
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d m = _mm256_loadu_pd(im + i);
        acc = _mm256_fmadd_pd(r, r, acc);
        acc = _mm256_fmadd_pd(m, m, acc);
    }
    double tail = hsum(acc);
    for (; i < size; ++i) tail += re[i] * re[i] + im[i] * im[i];
    return tail;
}

void scale_complex_avx2(double* re, double* im, double cr, double ci,
                        std::size_t size) {
    const __m256d cv = _mm256_set1_pd(cr);
    const __m256d sv = _mm256_set1_pd(ci);
    std::size_t i = 0;
    for (; i + 4 <= size; i += 4) {
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d m = _mm256_loadu_pd(im + i);
        _mm256_storeu_pd(re + i, _mm256_fmsub_pd(r, cv, _mm256_mul_pd(m, sv)));
        _mm256_storeu_pd(im + i, _mm256_fmadd_pd(r, sv, _mm256_mul_pd(m, cv)));
    }
    for (; i < size; ++i) {
        const double r = re[i], m = im[i];
        re[i] = r * cr - m * ci;
        im[i] = r * ci + m * cr;
    }
}

} // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops{"avx2",           phase_mul_avx2,
                         mixer_pairs_avx2, weighted_prob_sum_avx2,
                         norm_sq_avx2,     scale_complex_avx2};
    return &ops;
}

} // namespace redqaoa::kernels

#else // non-x86 build: no AVX2 variant

namespace redqaoa::kernels {
const Ops* avx2_ops_impl() { return nullptr; }
} // namespace redqaoa::kernels

#endif
