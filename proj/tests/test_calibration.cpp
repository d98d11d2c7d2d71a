// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the planarnf authors

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "planarnf/planarnf.hpp"

using namespace planarnf;
using planarnf::testing::shared_grid;

namespace {

// directive reference beam: the 4-element array pointing at the pole
FarFieldPattern reference_beam(std::shared_ptr<const SphericalGrid> grid,
                               const std::string& port = "ref") {
    const double k0 = wavenumber(28e9);
    std::vector<PointSource> srcs;
    const double lambda = wavelength(28e9);
    for (int m = 0; m < 4; ++m)
        srcs.push_back({{(m - 1.5) * lambda / 2.0, 0.0, 0.0}, cdouble(1.0), Orientation::y});
    FarFieldPattern p = analytic_far_field(srcs, std::move(grid), 2.0, k0);
    p.port = port;
    return p;
}

FarFieldPattern scaled(const FarFieldPattern& p, cdouble factor,
                       const std::string& port) {
    FarFieldPattern out = p;
    out.e_theta *= factor;
    out.e_phi *= factor;
    out.port = port;
    return out;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("loss estimation recovers a pure scale and phase") {
    auto grid = shared_grid(500, deg_to_rad(60.0));
    const auto ref = reference_beam(grid);

    SUBCASE("93 dB attenuation with a phase") {
        const double beta = 0.7;
        const auto measured = scaled(ref, std::polar(db_to_field(-93.0), beta), "1");
        const auto cal = estimate_loss(measured, ref);
        CHECK(cal.loss_db == doctest::Approx(93.0).epsilon(1e-9));
        CHECK(cal.phase_rad == doctest::Approx(beta).epsilon(1e-9));
        CHECK(cal.port == "1");
        CHECK(cal.provenance.reference == "ref");
        CHECK(cal.provenance.points_used > 0);
        CHECK(cal.provenance.points_excluded == 0);
    }
    SUBCASE("identity gives 0 dB, 0 phase") {
        const auto cal = estimate_loss(ref, ref);
        CHECK(cal.loss_db == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(cal.phase_rad == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("arbitrary complex loss round-trips through embed") {
        std::mt19937 rng(61);
        std::uniform_real_distribution<double> mag_db(-100.0, 20.0), ph(-pi, pi);
        for (int t = 0; t < 10; ++t) {
            PortCalibration truth;
            truth.loss_db = -mag_db(rng);
            truth.phase_rad = ph(rng);
            const auto embedded = apply_calibration(ref, truth, CalDirection::embed);
            const auto cal = estimate_loss(embedded, ref);
            CHECK(std::abs(cal.factor() - truth.factor()) <= 1e-10 * std::abs(truth.factor()));
        }
    }
}

TEST_CASE("loss estimation under additive noise stays within 0.1 dB") {
    auto grid = shared_grid(400, deg_to_rad(60.0));
    const auto ref = reference_beam(grid);
    double peak = 0.0;
    for (int k = 0; k < ref.size(); ++k)
        peak = std::max(peak, std::abs(ref.e_theta[k]));
    const double noise_sigma = peak * db_to_field(-40.0); // 40 dB SNR at the beam peak

    std::mt19937 rng(67);
    std::normal_distribution<double> gauss(0.0, noise_sigma / std::sqrt(2.0));
    for (int draw = 0; draw < 100; ++draw) {
        FarFieldPattern measured = ref;
        measured.port = "noisy";
        for (int k = 0; k < measured.size(); ++k) {
            measured.e_theta[k] += cdouble(gauss(rng), gauss(rng));
            measured.e_phi[k] += cdouble(gauss(rng), gauss(rng));
        }
        const auto cal = estimate_loss(measured, ref);
        CHECK(std::abs(cal.loss_db) <= 0.1);
    }
}

TEST_CASE("estimation region behaviour") {
    auto grid = shared_grid(500, deg_to_rad(60.0));
    const auto ref = reference_beam(grid);
    const auto measured = scaled(ref, std::polar(db_to_field(-40.0), -1.2), "m");

    SUBCASE("widening the contour does not move a noiseless estimate") {
        const auto narrow = estimate_loss(measured, ref, 1.0);
        const auto wide = estimate_loss(measured, ref, 3.0);
        CHECK(std::abs(narrow.loss_db - wide.loss_db) < 0.2);
        CHECK(std::abs(narrow.loss_db - wide.loss_db) < 1e-9);
        CHECK(narrow.provenance.points_used <= wide.provenance.points_used);
    }
    SUBCASE("empty region is a domain error") {
        CHECK_THROWS_AS(estimate_loss(measured, ref, [](int) { return false; }, "none"),
                        std::domain_error);
    }
    SUBCASE("explicit region matches the default contour") {
        double peak = 0.0;
        for (int k = 0; k < ref.size(); ++k)
            peak = std::max(peak, std::hypot(std::abs(ref.e_theta[k]),
                                             std::abs(ref.e_phi[k])));
        const double threshold = peak * db_to_field(-3.0);
        const auto manual = estimate_loss(
            measured, ref,
            [&](int k) {
                return std::hypot(std::abs(ref.e_theta[k]), std::abs(ref.e_phi[k])) >=
                       threshold;
            },
            "manual -3 dB");
        const auto automatic = estimate_loss(measured, ref, 3.0);
        CHECK(manual.loss_db == doctest::Approx(automatic.loss_db).epsilon(1e-15));
        CHECK(manual.provenance.points_used == automatic.provenance.points_used);
    }
    SUBCASE("grid mismatch is a contract error") {
        auto other = shared_grid(200, deg_to_rad(60.0));
        const auto ref2 = reference_beam(other);
        CHECK_THROWS_AS(estimate_loss(measured, ref2), std::invalid_argument);
    }
}

TEST_CASE("db-difference averaging agrees on a pure scale") {
    auto grid = shared_grid(300, deg_to_rad(60.0));
    const auto ref = reference_beam(grid);
    const auto measured = scaled(ref, std::polar(db_to_field(-91.3), 0.4), "m");
    const auto a = estimate_loss(measured, ref, 3.0, LossAveraging::complex_ratio);
    const auto b = estimate_loss(measured, ref, 3.0, LossAveraging::db_difference);
    CHECK(a.loss_db == doctest::Approx(91.3).epsilon(1e-12));
    CHECK(b.loss_db == doctest::Approx(91.3).epsilon(1e-12));
    CHECK(b.phase_rad == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("applying calibration") {
    auto grid = shared_grid(200, deg_to_rad(60.0));
    const auto ref = reference_beam(grid);

    SUBCASE("deembed(embed(p)) is the identity") {
        PortCalibration cal;
        cal.loss_db = 37.5;
        cal.phase_rad = 1.9;
        const auto back = apply_calibration(apply_calibration(ref, cal, CalDirection::embed),
                                            cal, CalDirection::deembed);
        for (int k = 0; k < ref.size(); ++k) {
            CHECK(std::abs(back.e_theta[k] - ref.e_theta[k]) <=
                  1e-12 * std::abs(ref.e_theta[k]) + 1e-300);
            CHECK(std::abs(back.e_phi[k] - ref.e_phi[k]) <=
                  1e-12 * std::abs(ref.e_phi[k]) + 1e-300);
        }
    }
    SUBCASE("de-embedding 91.3 dB raises every gain sample by 91.3 dB") {
        PortCalibration cal;
        cal.loss_db = 91.3;
        const auto out = apply_calibration(ref, cal, CalDirection::deembed);
        for (int k = 0; k < ref.size(); ++k) {
            const double before = realized_gain_db(
                std::hypot(std::abs(ref.e_theta[k]), std::abs(ref.e_phi[k])), ref.r);
            const double after = realized_gain_db(
                std::hypot(std::abs(out.e_theta[k]), std::abs(out.e_phi[k])), out.r);
            CHECK(after - before == doctest::Approx(91.3).epsilon(1e-9));
        }
    }
    SUBCASE("phase-only factor flips fields, gain untouched") {
        PortCalibration cal;
        cal.loss_db = 0.0;
        cal.phase_rad = pi;
        const auto out = apply_calibration(ref, cal, CalDirection::embed);
        for (int k = 0; k < ref.size(); ++k)
            CHECK(std::abs(out.e_theta[k] + ref.e_theta[k]) <=
                  1e-15 * std::abs(ref.e_theta[k]) + 1e-300);
        const auto g0 = spherical_coverage(PortPatternSet({ref}));
        const auto g1 = spherical_coverage(PortPatternSet({out}));
        for (int k = 0; k < g0.g_hat.size(); ++k)
            CHECK(g1.g_hat[k] == doctest::Approx(g0.g_hat[k]).epsilon(1e-14));
    }
    SUBCASE("combined gain ignores the calibration phase") {
        PortCalibration with_phase{"p", 17.0, 2.4, {}};
        PortCalibration no_phase{"p", 17.0, 0.0, {}};
        const auto a = spherical_coverage(
            PortPatternSet({apply_calibration(ref, with_phase, CalDirection::deembed)}));
        const auto b = spherical_coverage(
            PortPatternSet({apply_calibration(ref, no_phase, CalDirection::deembed)}));
        for (int k = 0; k < a.g_hat.size(); ++k)
            CHECK(a.g_hat[k] == doctest::Approx(b.g_hat[k]).epsilon(1e-12));
    }
    SUBCASE("degenerate factors are rejected") {
        PortCalibration inf_loss;
        inf_loss.loss_db = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(apply_calibration(ref, inf_loss, CalDirection::deembed),
                        std::domain_error);
        PortCalibration nan_loss;
        nan_loss.loss_db = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(apply_calibration(ref, nan_loss, CalDirection::embed),
                        std::domain_error);
    }
}

TEST_CASE("calibration files round-trip with a stable field order") {
    std::vector<PortCalibration> cals;
    PortCalibration a{"1", 93.0, 0.25, {"simplified-model", "main beam", 120, 2}};
    PortCalibration b{"2", -3.5, -2.9, {"other", "full cone", 4000, 0}};
    cals.push_back(a);
    cals.push_back(b);

    const auto path = temp_file("planarnf_cal_roundtrip.cal");
    write_calibration(cals, path.string());
    const auto back = read_calibration(path.string());
    REQUIRE(back.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(back[i].port == cals[i].port);
        CHECK(back[i].loss_db == cals[i].loss_db);
        CHECK(back[i].phase_rad == cals[i].phase_rad);
        CHECK(back[i].provenance.reference == cals[i].provenance.reference);
        CHECK(back[i].provenance.region == cals[i].provenance.region);
        CHECK(back[i].provenance.points_used == cals[i].provenance.points_used);
        CHECK(back[i].provenance.points_excluded == cals[i].provenance.points_excluded);
    }

    // stable order: port, loss_db, phase_rad, reference, region
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "planarnf-calibration 1");
    std::getline(in, line);
    CHECK(line.rfind("port:", 0) == 0);
    std::getline(in, line);
    CHECK(line.rfind("loss_db:", 0) == 0);
    std::getline(in, line);
    CHECK(line.rfind("phase_rad:", 0) == 0);
    std::getline(in, line);
    CHECK(line.rfind("reference:", 0) == 0);
    std::getline(in, line);
    CHECK(line.rfind("region:", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("shipped per-port loss tables parse") {
    const auto p28 = std::filesystem::path(PLANARNF_TEST_DATA_DIR) / "port_losses_28ghz.cal";
    const auto p39 = std::filesystem::path(PLANARNF_TEST_DATA_DIR) / "port_losses_39ghz.cal";
    const auto c28 = read_calibration(p28.string());
    const auto c39 = read_calibration(p39.string());
    REQUIRE(c28.size() == 8);
    REQUIRE(c39.size() == 8);
    const double expect28[] = {93.0, 91.3, 91.8, 90.9, 91.5, 91.1, 90.8, 91.0};
    const double expect39[] = {99.1, 97.3, 97.0, 95.3, 96.9, 97.2, 97.3, 97.4};
    for (int i = 0; i < 8; ++i) {
        CHECK(c28[static_cast<std::size_t>(i)].loss_db == expect28[i]);
        CHECK(c39[static_cast<std::size_t>(i)].loss_db == expect39[i]);
        CHECK(c28[static_cast<std::size_t>(i)].port == std::to_string(i + 1));
    }
}
