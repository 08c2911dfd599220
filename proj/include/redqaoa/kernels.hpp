#pragma once

#include <cstddef>
#include <cstdint>

namespace redqaoa::kernels {

/// Inner-loop kernels over split-complex arrays (re[i], im[i]). The
/// scalar implementations are the reference; vector variants must match
/// them to floating-point rounding (equivalence-tested). Selection
/// happens once at startup; RED_QAOA_KERNEL=scalar|avx2 forces a variant.
struct Ops {
    const char* name;

    /// (re,im)[i] *= (cos_tab[b], sin_tab[b]) with b = bins[i].
    /// Callers bake the sign of the angle into the tables.
    void (*phase_mul)(double* re, double* im, const std::int32_t* bins,
                      const double* cos_tab, const double* sin_tab,
                      std::size_t size);

    /// For every pair (i0, i1 = i0 + stride), with i0 ranging over the
    /// lower half of each contiguous block of 2*stride elements:
    ///   a0' = c*a0 - i*s*a1
    ///   a1' = -i*s*a0 + c*a1
    /// size must be a multiple of 2*stride. Passing -s applies the
    /// conjugate rotation.
    void (*mixer_pairs)(double* re, double* im, double c, double s,
                        std::size_t stride, std::size_t size);

    /// sum_i (re[i]^2 + im[i]^2) * w[i]
    double (*weighted_prob_sum)(const double* re, const double* im,
                                const std::int32_t* w, std::size_t size);

    /// sum_i (re[i]^2 + im[i]^2)
    double (*norm_sq)(const double* re, const double* im, std::size_t size);

    /// (re,im)[i] *= (cr, ci)
    void (*scale_complex)(double* re, double* im, double cr, double ci,
                          std::size_t size);
};

const Ops& scalar_ops();

/// AVX2+FMA variant; nullptr when the CPU or build lacks support.
const Ops* avx2_ops();

/// The variant in use for this process.
const Ops& active_ops();

/// Lookup by name ("scalar", "avx2"); nullptr if unknown or unavailable.
const Ops* ops_by_name(const char* name);

} // namespace redqaoa::kernels
