#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "redqaoa/kernels.hpp"
#include "redqaoa/rng.hpp"

using namespace redqaoa;

namespace {

struct TestState {
    std::vector<double> re, im;
    std::vector<std::int32_t> bins;
};

TestState random_state(std::size_t size, std::uint64_t seed, int max_bin) {
    TestState s;
    Xoshiro256ss rng(seed);
    s.re.resize(size);
    s.im.resize(size);
    s.bins.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        s.re[i] = rng.uniform(-1.0, 1.0);
        s.im[i] = rng.uniform(-1.0, 1.0);
        s.bins[i] = static_cast<std::int32_t>(rng.uniform_int(max_bin + 1));
    }
    return s;
}

constexpr double kTol = 1e-12;

void check_close(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(kTol));
}

} // namespace

TEST_CASE("kernel dispatch reports a variant") {
    const auto& ops = kernels::active_ops();
    CHECK(ops.name != nullptr);
    CHECK(kernels::ops_by_name("scalar") == &kernels::scalar_ops());
    CHECK(kernels::ops_by_name("no-such-kernel") == nullptr);
    MESSAGE("active kernel: ", std::string(ops.name));
}

TEST_CASE("vector variants match the scalar reference") {
    const kernels::Ops* simd = kernels::avx2_ops();
    if (simd == nullptr) {
        MESSAGE("no SIMD variant on this host; scalar-only");
        return;
    }
    const auto& ref = kernels::scalar_ops();

    for (const std::size_t size : {4ul, 8ul, 32ul, 256ul, 4096ul, 8192ul}) {
        const int max_bin = 17;
        std::vector<double> cos_tab(max_bin + 1), sin_tab(max_bin + 1);
        for (int b = 0; b <= max_bin; ++b) {
            cos_tab[b] = std::cos(0.37 * b);
            sin_tab[b] = -std::sin(0.37 * b);
        }

        SUBCASE("phase_mul") {
            auto a = random_state(size, size, max_bin);
            auto b = a;
            ref.phase_mul(a.re.data(), a.im.data(), a.bins.data(),
                          cos_tab.data(), sin_tab.data(), size);
            simd->phase_mul(b.re.data(), b.im.data(), b.bins.data(),
                            cos_tab.data(), sin_tab.data(), size);
            check_close(a.re, b.re);
            check_close(a.im, b.im);
        }

        SUBCASE("mixer_pairs at every stride") {
            for (std::size_t stride = 1; 2 * stride <= size; stride *= 2) {
                auto a = random_state(size, size + stride, max_bin);
                auto b = a;
                ref.mixer_pairs(a.re.data(), a.im.data(), 0.8, 0.6, stride, size);
                simd->mixer_pairs(b.re.data(), b.im.data(), 0.8, 0.6, stride, size);
                check_close(a.re, b.re);
                check_close(a.im, b.im);
            }
        }

        SUBCASE("reductions and scaling") {
            auto a = random_state(size, 3 * size, max_bin);
            auto b = a;
            CHECK(ref.norm_sq(a.re.data(), a.im.data(), size) ==
                  doctest::Approx(simd->norm_sq(b.re.data(), b.im.data(), size))
                      .epsilon(kTol));
            CHECK(ref.weighted_prob_sum(a.re.data(), a.im.data(), a.bins.data(),
                                        size) ==
                  doctest::Approx(simd->weighted_prob_sum(
                                      b.re.data(), b.im.data(), b.bins.data(), size))
                      .epsilon(kTol));
            ref.scale_complex(a.re.data(), a.im.data(), 0.3, -1.2, size);
            simd->scale_complex(b.re.data(), b.im.data(), 0.3, -1.2, size);
            check_close(a.re, b.re);
            check_close(a.im, b.im);
        }
    }
}

TEST_CASE("mixer pairs preserve the norm") {
    for (const char* name : {"scalar", "avx2"}) {
        const kernels::Ops* ops = kernels::ops_by_name(name);
        if (!ops) continue;
        auto s = random_state(512, 7, 3);
        const double before = ops->norm_sq(s.re.data(), s.im.data(), 512);
        const double theta = 0.9;
        ops->mixer_pairs(s.re.data(), s.im.data(), std::cos(theta),
                         std::sin(theta), 8, 512);
        const double after = ops->norm_sq(s.re.data(), s.im.data(), 512);
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
    }
}

TEST_CASE("phase multiply is norm preserving and invertible") {
    const auto& ops = kernels::active_ops();
    auto s = random_state(1024, 11, 5);
    const auto orig = s;
    std::vector<double> cos_tab(6), sin_tab(6), inv_sin(6);
    for (int b = 0; b <= 5; ++b) {
        cos_tab[b] = std::cos(1.1 * b);
        sin_tab[b] = -std::sin(1.1 * b);
        inv_sin[b] = std::sin(1.1 * b);
    }
    ops.phase_mul(s.re.data(), s.im.data(), s.bins.data(), cos_tab.data(),
                  sin_tab.data(), 1024);
    CHECK(ops.norm_sq(s.re.data(), s.im.data(), 1024) ==
          doctest::Approx(ops.norm_sq(orig.re.data(), orig.im.data(), 1024))
              .epsilon(1e-12));
    ops.phase_mul(s.re.data(), s.im.data(), s.bins.data(), cos_tab.data(),
                  inv_sin.data(), 1024);
    for (std::size_t i = 0; i < 1024; ++i) {
        CHECK(s.re[i] == doctest::Approx(orig.re[i]).epsilon(1e-12));
        CHECK(s.im[i] == doctest::Approx(orig.im[i]).epsilon(1e-12));
    }
}
