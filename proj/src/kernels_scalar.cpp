#include "redqaoa/kernels.hpp"

namespace redqaoa::kernels {

namespace {

void phase_mul_scalar(double* re, double* im, const std::int32_t* bins,
                      const double* cos_tab, const double* sin_tab,
                      std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) {
        const double c = cos_tab[bins[i]];
        const double s = sin_tab[bins[i]];
        const double r = re[i], m = im[i];
        re[i] = r * c - m * s;
        im[i] = r * s + m * c;
    }
}

void mixer_pairs_scalar(double* re, double* im, double c, double s,
                        std::size_t stride, std::size_t size) {
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const double r0 = re[i0], m0 = im[i0];
            const double r1 = re[i1], m1 = im[i1];
            re[i0] = c * r0 + s * m1;
            im[i0] = c * m0 - s * r1;
            re[i1] = c * r1 + s * m0;
            im[i1] = c * m1 - s * r0;
        }
    }
}

double weighted_prob_sum_scalar(const double* re, const double* im,
                                const std::int32_t* w, std::size_t size) {
    double acc = 0.0;
    for (std::size_t i = 0; i < size; ++i)
        acc += (re[i] * re[i] + im[i] * im[i]) * static_cast<double>(w[i]);
    return acc;
}

double norm_sq_scalar(const double* re, const double* im, std::size_t size) {
    double acc = 0.0;
    for (std::size_t i = 0; i < size; ++i)
        acc += re[i] * re[i] + im[i] * im[i];
    return acc;
}

void scale_complex_scalar(double* re, double* im, double cr, double ci,
                          std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) {
        const double r = re[i], m = im[i];
        re[i] = r * cr - m * ci;
        im[i] = r * ci + m * cr;
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar",           phase_mul_scalar,
                         mixer_pairs_scalar, weighted_prob_sum_scalar,
                         norm_sq_scalar,     scale_complex_scalar};
    return ops;
}

} // namespace redqaoa::kernels
