// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the planarnf authors

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "planarnf/planarnf.hpp"

using namespace planarnf;
using planarnf::testing::custom_grid;
using planarnf::testing::random_complex;
using planarnf::testing::shared_grid;

namespace {

FarFieldPattern pattern_from(std::shared_ptr<const SphericalGrid> grid,
                             Eigen::VectorXcd eth, Eigen::VectorXcd eph,
                             const std::string& port = "", double r = 2.0,
                             double frequency = 28e9) {
    FarFieldPattern p;
    p.grid = std::move(grid);
    p.r = r;
    p.frequency = frequency;
    p.e_theta = std::move(eth);
    p.e_phi = std::move(eph);
    p.port = port;
    return p;
}

FarFieldPattern random_pattern(std::shared_ptr<const SphericalGrid> grid,
                               std::mt19937& rng, const std::string& port = "") {
    const int K = grid->size();
    return pattern_from(std::move(grid), random_complex(K, rng),
                        random_complex(K, rng), port);
}

} // namespace

TEST_CASE("port set validation") {
    auto grid = shared_grid(50, deg_to_rad(60.0));
    std::mt19937 rng(3);
    CHECK_THROWS_AS(PortPatternSet({}), std::domain_error);

    auto other = shared_grid(60, deg_to_rad(60.0));
    CHECK_THROWS_AS(PortPatternSet({random_pattern(grid, rng), random_pattern(other, rng)}),
                    std::invalid_argument);

    auto p1 = random_pattern(grid, rng);
    auto p2 = random_pattern(grid, rng);
    p2.frequency = 39e9;
    CHECK_THROWS_AS(PortPatternSet({p1, p2}), std::invalid_argument);

    // same directions in a distinct grid object are accepted
    auto clone = std::make_shared<SphericalGrid>(*grid);
    auto p3 = random_pattern(clone, rng);
    CHECK_NOTHROW(PortPatternSet({p1, p3}));
}

TEST_CASE("equal gain combining") {
    auto grid = shared_grid(80, deg_to_rad(60.0));
    std::mt19937 rng(7);

    SUBCASE("single port keeps its magnitudes") {
        auto p = random_pattern(grid, rng);
        const auto comb = equal_gain_combine(PortPatternSet({p}));
        for (int k = 0; k < grid->size(); ++k) {
            CHECK(comb.e_theta[k].real() == doctest::Approx(std::abs(p.e_theta[k])).epsilon(1e-15));
            CHECK(comb.e_theta[k].imag() == 0.0);
            CHECK(comb.e_phi[k].real() == doctest::Approx(std::abs(p.e_phi[k])).epsilon(1e-15));
        }
    }
    SUBCASE("four identical ports double the amplitude") {
        auto p = random_pattern(grid, rng);
        const auto comb = equal_gain_combine(PortPatternSet({p, p, p, p}));
        for (int k = 0; k < grid->size(); ++k)
            CHECK(comb.e_theta[k].real() ==
                  doctest::Approx(2.0 * std::abs(p.e_theta[k])).epsilon(1e-14));
    }
    SUBCASE("a global port phase does not change the combination") {
        auto p1 = random_pattern(grid, rng);
        std::uniform_real_distribution<double> ad(0.0, 2.0 * pi);
        for (int trial = 0; trial < 5; ++trial) {
            const cdouble rot = std::polar(1.0, ad(rng));
            auto p2 = p1;
            p2.e_theta *= rot;
            p2.e_phi *= rot;
            const auto ref = equal_gain_combine(PortPatternSet({p1, p1}));
            const auto got = equal_gain_combine(PortPatternSet({p1, p2}));
            for (int k = 0; k < grid->size(); ++k) {
                CHECK(std::abs(got.e_theta[k] - ref.e_theta[k]) <=
                      1e-12 * std::abs(ref.e_theta[k]) + 1e-300);
                CHECK(std::abs(got.e_phi[k] - ref.e_phi[k]) <=
                      1e-12 * std::abs(ref.e_phi[k]) + 1e-300);
            }
        }
    }
}

TEST_CASE("coverage is invariant to port order, bit for bit") {
    auto grid = shared_grid(120, deg_to_rad(60.0));
    std::mt19937 rng(13);
    auto a = random_pattern(grid, rng, "a");
    auto b = random_pattern(grid, rng, "b");
    auto c = random_pattern(grid, rng, "c");
    const auto r1 = spherical_coverage(PortPatternSet({a, b, c}));
    const auto r2 = spherical_coverage(PortPatternSet({c, a, b}));
    REQUIRE(r1.g_hat.size() == r2.g_hat.size());
    for (int k = 0; k < r1.g_hat.size(); ++k)
        CHECK(r1.g_hat[k] == r2.g_hat[k]);
    REQUIRE(r1.cdf.size() == r2.cdf.size());
    for (std::size_t i = 0; i < r1.cdf.size(); ++i) {
        CHECK(r1.cdf[i].first == r2.cdf[i].first);
        CHECK(r1.cdf[i].second == r2.cdf[i].second);
    }
}

TEST_CASE("adding a port never lowers the unnormalized magnitude sum") {
    auto grid = shared_grid(60, deg_to_rad(60.0));
    std::mt19937 rng(19);
    auto a = random_pattern(grid, rng);
    auto b = random_pattern(grid, rng);
    auto c = random_pattern(grid, rng);
    const auto two = equal_gain_combine(PortPatternSet({a, b}));
    const auto three = equal_gain_combine(PortPatternSet({a, b, c}));
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    for (int k = 0; k < grid->size(); ++k) {
        CHECK(s3 * three.e_theta[k].real() >=
              s2 * two.e_theta[k].real() * (1.0 - 1e-14));
        CHECK(s3 * three.e_phi[k].real() >= s2 * two.e_phi[k].real() * (1.0 - 1e-14));
    }
}

TEST_CASE("scaling all ports by a positive factor") {
    auto grid = shared_grid(90, deg_to_rad(60.0));
    std::mt19937 rng(29);
    auto a = random_pattern(grid, rng);
    auto b = random_pattern(grid, rng);
    const double s = 2.0; // power of two, exact in floating point
    auto as = a, bs = b;
    as.e_theta *= s; as.e_phi *= s;
    bs.e_theta *= s; bs.e_phi *= s;

    const auto base = spherical_coverage(PortPatternSet({a, b}));
    const auto scaled = spherical_coverage(PortPatternSet({as, bs}));
    for (int k = 0; k < grid->size(); ++k)
        CHECK(scaled.g_hat[k] == doctest::Approx(s * base.g_hat[k]).epsilon(1e-15));

    // dB CDF shifts by 20 log10 s at every percentile, ordering unchanged
    for (double p : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        CHECK(cdf_percentile(scaled, p) ==
              doctest::Approx(s * cdf_percentile(base, p)).epsilon(1e-15));
        CHECK(cdf_percentile_dbi(scaled, p) - cdf_percentile_dbi(base, p) ==
              doctest::Approx(20.0 * std::log10(s)).epsilon(1e-12));
    }
    // the direction attaining the maximum is unchanged
    Eigen::Index kb, ks;
    base.g_hat.maxCoeff(&kb);
    scaled.g_hat.maxCoeff(&ks);
    CHECK(kb == ks);
}

TEST_CASE("coverage CDF on canned cases") {
    SUBCASE("constant gain gives a single step") {
        auto grid = shared_grid(40, deg_to_rad(60.0));
        const int K = grid->size();
        const double c = 0.37;
        auto p = pattern_from(grid, Eigen::VectorXcd::Constant(K, cdouble(c, 0.0)),
                              Eigen::VectorXcd::Zero(K));
        const auto result = spherical_coverage(PortPatternSet({p}));
        for (const auto& [g, prob] : result.cdf)
            CHECK(g == doctest::Approx(c).epsilon(1e-15));
        CHECK(result.cdf_at(c + 1e-9) == 1.0);
        CHECK(result.cdf_at(c - 1e-9) == 0.0);
    }
    SUBCASE("two-direction grid with gains 1 and 2") {
        auto grid = custom_grid({{0.1, 0.0}, {0.2, 0.0}}, deg_to_rad(60.0));
        Eigen::VectorXcd eth(2);
        eth << cdouble(2.0, 0.0), cdouble(1.0, 0.0); // unsorted on purpose
        auto p = pattern_from(grid, eth, Eigen::VectorXcd::Zero(2));
        const auto result = spherical_coverage(PortPatternSet({p}));
        REQUIRE(result.cdf.size() == 2);
        CHECK(result.cdf[0].first == 1.0);
        CHECK(result.cdf[0].second == 0.5);
        CHECK(result.cdf[1].first == 2.0);
        CHECK(result.cdf[1].second == 1.0);
    }
    SUBCASE("cdf pairs are non-decreasing and span [1/K, 1]") {
        auto grid = shared_grid(150, deg_to_rad(60.0));
        std::mt19937 rng(41);
        const auto result = spherical_coverage(
            PortPatternSet({random_pattern(grid, rng), random_pattern(grid, rng)}));
        const int K = grid->size();
        CHECK(result.cdf.front().second == doctest::Approx(1.0 / K).epsilon(1e-15));
        CHECK(result.cdf.back().second == 1.0);
        for (std::size_t i = 1; i < result.cdf.size(); ++i) {
            CHECK(result.cdf[i].first >= result.cdf[i - 1].first);
            CHECK(result.cdf[i].second >= result.cdf[i - 1].second);
        }
    }
    SUBCASE("g_hat is the root-sum-square of the combined components") {
        auto grid = shared_grid(90, deg_to_rad(60.0));
        std::mt19937 rng(43);
        const PortPatternSet ports({random_pattern(grid, rng), random_pattern(grid, rng)});
        const auto comb = equal_gain_combine(ports);
        const auto result = spherical_coverage(ports);
        for (int k = 0; k < grid->size(); ++k)
            CHECK(result.g_hat[k] ==
                  std::hypot(std::abs(comb.e_theta[k]), std::abs(comb.e_phi[k])));
    }
}

TEST_CASE("percentiles follow the step convention") {
    SUBCASE("gains 1..4 at p = 0.5 give 2") {
        auto grid = custom_grid(
            {{0.1, 0.0}, {0.2, 0.0}, {0.3, 0.0}, {0.4, 0.0}}, deg_to_rad(60.0));
        Eigen::VectorXcd eth(4);
        eth << 3.0, 1.0, 4.0, 2.0;
        auto p = pattern_from(grid, eth, Eigen::VectorXcd::Zero(4));
        const auto result = spherical_coverage(PortPatternSet({p}));
        CHECK(cdf_percentile(result, 0.5) == 2.0);
        CHECK(cdf_percentile(result, 0.25) == 1.0);
        CHECK(cdf_percentile(result, 0.75) == 3.0);
        CHECK(cdf_percentile(result, 1.0) == 4.0);
        CHECK(cdf_percentile(result, 0.01) == 1.0);
    }
    SUBCASE("random gains match a full-sort oracle") {
        auto grid = shared_grid(333, deg_to_rad(60.0));
        std::mt19937 rng(53);
        const auto result = spherical_coverage(PortPatternSet({random_pattern(grid, rng)}));
        std::vector<double> sorted(result.g_hat.data(),
                                   result.g_hat.data() + result.g_hat.size());
        std::sort(sorted.begin(), sorted.end());
        const int K = static_cast<int>(sorted.size());
        for (double p : {0.05, 0.1, 0.5, 0.9, 0.99, 1.0}) {
            const int idx = static_cast<int>(std::ceil(p * K)) - 1;
            CHECK(cdf_percentile(result, p) == sorted[static_cast<std::size_t>(idx)]);
        }
    }
    SUBCASE("out-of-range p") {
        auto grid = custom_grid({{0.1, 0.0}}, deg_to_rad(60.0));
        auto p = pattern_from(grid, Eigen::VectorXcd::Ones(1), Eigen::VectorXcd::Zero(1));
        const auto result = spherical_coverage(PortPatternSet({p}));
        CHECK_THROWS_AS(cdf_percentile(result, 0.0), std::domain_error);
        CHECK_THROWS_AS(cdf_percentile(result, -0.1), std::domain_error);
        CHECK_THROWS_AS(cdf_percentile(result, 1.001), std::domain_error);
    }
}

TEST_CASE("realized gain normalization") {
    // 4 pi r^2 |E|^2 / (2 eta0) with 1 W accepted power
    const double g = realized_gain(1.0, 2.0);
    CHECK(g == doctest::Approx(4.0 * pi * 4.0 / (2.0 * eta0)).epsilon(1e-15));
    CHECK(realized_gain_db(1.0, 2.0) == doctest::Approx(10.0 * std::log10(g)).epsilon(1e-15));
}

TEST_CASE("elevation cut") {
    const double k0 = wavenumber(28e9);
    auto grid = shared_grid(300, deg_to_rad(60.0));
    const std::vector<PointSource> src{{{0.0, 0.0, 0.0}, cdouble(1.0), Orientation::y}};
    const auto pattern = analytic_far_field(src, grid, 2.0, k0);

    SUBCASE("phi = 0 returns the exact phi = 0 ring points in theta order") {
        const auto cut = elevation_cut(pattern, 0.0);
        REQUIRE(!cut.empty());
        // one entry per distinct ring, sorted
        std::vector<double> thetas;
        for (const auto& d : grid->directions)
            if (d.phi == 0.0)
                thetas.push_back(d.theta);
        std::sort(thetas.begin(), thetas.end());
        REQUIRE(cut.size() == thetas.size());
        for (std::size_t i = 0; i < cut.size(); ++i)
            CHECK(cut[i].first == thetas[i]);
        for (std::size_t i = 1; i < cut.size(); ++i)
            CHECK(cut[i].first > cut[i - 1].first);
    }
    SUBCASE("cut gains match direct lookups of the pattern") {
        const auto cut = elevation_cut(pattern, 0.0);
        for (const auto& [theta, gain_db] : cut) {
            bool found = false;
            for (int k = 0; k < grid->size(); ++k)
                if (grid->directions[k].theta == theta && grid->directions[k].phi == 0.0) {
                    const double mag = std::hypot(std::abs(pattern.e_theta[k]),
                                                  std::abs(pattern.e_phi[k]));
                    CHECK(gain_db == doctest::Approx(realized_gain_db(mag, 2.0)).epsilon(1e-14));
                    found = true;
                }
            CHECK(found);
        }
    }
    SUBCASE("boresight source peaks at theta = 0") {
        // a y-element under the pole radiates its maximum toward +z
        const auto cut = elevation_cut(pattern, 0.0);
        REQUIRE(!cut.empty());
        CHECK(cut.front().first == 0.0);
        for (const auto& [theta, gain_db] : cut)
            CHECK(cut.front().second >= gain_db - 1e-12);
    }
    SUBCASE("nearest-ring tolerance excludes distant azimuths") {
        // a partial ring far from the cut azimuth qualifies no points
        auto tiny = custom_grid({{0.3, 0.0}, {0.3, 0.1}}, deg_to_rad(60.0));
        auto p = pattern_from(tiny, Eigen::VectorXcd::Ones(2), Eigen::VectorXcd::Zero(2));
        CHECK(elevation_cut(p, 0.0).size() == 1);
        CHECK(elevation_cut(p, pi).empty());
    }
}
