#include <doctest.h>

#include <numbers>

#include "redqaoa/common.hpp"
#include "redqaoa/metrics.hpp"

using namespace redqaoa;

namespace {

EnergyLandscape make_landscape(std::vector<double> energies) {
    EnergyLandscape l;
    l.p = 1;
    l.spec = LandscapeSpec::random(static_cast<int>(energies.size()), 7);
    auto pts = landscape_points(l.spec, 1);
    for (std::size_t i = 0; i < energies.size(); ++i)
        l.points.push_back({pts[i], energies[i]});
    return l;
}

} // namespace

TEST_CASE("min-max normalization") {
    const auto n = normalize_landscape(make_landscape({1, 3, 5}));
    CHECK(n.points[0].energy == 0.0);
    CHECK(n.points[1].energy == 0.5);
    CHECK(n.points[2].energy == 1.0);

    // idempotence on an already-[0,1] landscape
    const auto twice = normalize_landscape(n);
    for (std::size_t i = 0; i < n.size(); ++i)
        CHECK(twice.points[i].energy == n.points[i].energy);

    CHECK_THROWS_AS(normalize_landscape(make_landscape({2, 2, 2})), Error);
}

TEST_CASE("mse basics") {
    const auto a = normalize_landscape(make_landscape({0, 1, 2, 5}));
    CHECK(mse(a, a) == 0.0);

    const auto b = normalize_landscape(make_landscape({5, 1, 0, 2}));
    CHECK(mse(a, b) == mse(b, a));
    CHECK(mse(a, b) > 0.0);

    // positive affine transforms cancel under normalization
    const auto scaled = normalize_landscape(make_landscape({0 * 3.7 + 2, 1 * 3.7 + 2,
                                                            2 * 3.7 + 2, 5 * 3.7 + 2}));
    CHECK(mse(a, scaled) < 1e-12);

    // un-normalized inputs are rejected
    CHECK_THROWS_AS(mse(make_landscape({0, 1, 2, 5}), a), Error);

    // mismatched specs are rejected
    auto c = normalize_landscape(make_landscape({0, 1, 2, 5}));
    c.spec = LandscapeSpec::random(4, 99);
    CHECK_THROWS_AS(mse(a, c), Error);
}

TEST_CASE("approximation ratio") {
    CHECK(approximation_ratio(4.0, 4) == 1.0);
    CHECK(approximation_ratio(2.0, 4) == 0.5);
    // C5 at zero angles: 2.5 cut edges in expectation over max cut 4
    CHECK(approximation_ratio(2.5, 4) == doctest::Approx(0.625));
    CHECK_THROWS_AS(approximation_ratio(1.0, 0), Error);
}

TEST_CASE("torus distance wraps both axes") {
    constexpr double pi = std::numbers::pi;
    const ParamVector a({0.1}, {0.1});
    const ParamVector b({2 * pi - 0.1}, {pi - 0.1});
    CHECK(torus_distance(a, a) == 0.0);
    CHECK(torus_distance(a, b) == doctest::Approx(std::sqrt(0.08)).epsilon(1e-9));
    CHECK(torus_distance(a, b) == torus_distance(b, a));
}

TEST_CASE("optimal point distance") {
    const auto a = make_landscape({0.1, 0.9, 0.3, 0.2});
    CHECK(optimal_point_distance(a, a, 1) == 0.0);
    CHECK(optimal_point_distance(a, a, 3) == 0.0);

    auto negated = a;
    for (auto& pt : negated.points) pt.energy = -pt.energy;
    CHECK(optimal_point_distance(a, negated, 1) > 0.0);
}

TEST_CASE("comparison report") {
    const auto a = make_landscape({1, 2, 6, 3});
    const auto b = make_landscape({2, 4, 12, 6}); // exact positive scaling
    const auto report = compare_landscapes(a, b);
    CHECK(report.mse < 1e-12);
    CHECK(report.mse_percent == report.mse * 100.0);
    CHECK(report.optimal_distance == 0.0);
    CHECK(report.point_count == 4);
    CHECK(report.norm_a.min == 1.0);
    CHECK(report.norm_a.max == 6.0);
}

TEST_CASE("spearman correlation") {
    CHECK(spearman_rho({1, 2, 3, 4}, {10, 20, 30, 40}) == doctest::Approx(1.0));
    CHECK(spearman_rho({1, 2, 3, 4}, {9, 7, 5, 3}) == doctest::Approx(-1.0));
    // monotone but nonlinear is still rank-perfect
    CHECK(spearman_rho({1, 2, 3, 4}, {1, 8, 27, 64}) == doctest::Approx(1.0));
    // ties get average ranks
    CHECK(spearman_rho({1, 1, 2, 3}, {4, 4, 5, 9}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(spearman_rho({1, 1}, {2, 3}), Error);
}
