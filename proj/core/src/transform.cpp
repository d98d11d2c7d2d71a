// SPDX-License-Identifier: Apache-2.0
//
// planarnf - planar near-field antenna measurement processing toolkit
// Copyright (C) 2026 the planarnf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planarnf/transform.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "planarnf/parallel.hpp"

namespace planarnf {

EquivalentCurrents equivalent_currents(const NearFieldScan& scan) {
    // M = -z x E: m_x = e_y, m_y = -e_x
    return {scan.e_y, -scan.e_x, scan.geometry};
}

std::complex<double> green_prime(double R, double k0) {
    if (!(R > 0.0))
        throw std::domain_error("green_prime: R must be positive (singular kernel)");
    return std::polar(1.0 / (4.0 * pi * R), -k0 * R) * cdouble(1.0 / R, k0);
}

RadiationOperator::RadiationOperator(RowMatrixXcd h11, RowMatrixXcd h12,
                                     RowMatrixXcd h21, RowMatrixXcd h22,
                                     std::shared_ptr<const SphericalGrid> grid,
                                     ScanGeometry geometry, double r, double k0)
    : h11_(std::move(h11)), h12_(std::move(h12)), h21_(std::move(h21)),
      h22_(std::move(h22)), grid_(std::move(grid)), geometry_(std::move(geometry)),
      r_(r), k0_(k0) {}

RadiationOperator assemble_operator(const ScanGeometry& geometry,
                                    std::shared_ptr<const SphericalGrid> grid,
                                    double r, double k0, unsigned max_threads) {
    if (!grid || grid->size() == 0)
        throw std::invalid_argument("assemble_operator: empty far-field grid");
    if (!(k0 > 0.0))
        throw std::domain_error("assemble_operator: wavenumber must be positive");
    if (!(r > geometry.d() + geometry.plane_radius()))
        throw std::invalid_argument(
            "assemble_operator: far radius must clear the scan plane (r > d + "
            "plane radius)");

    const Eigen::Index K = grid->size();
    const Eigen::Index N = geometry.point_count();

    RowMatrixXcd h11(K, N), h12(K, N), h21(K, N), h22(K, N);

    // sample coordinates, indexed by the linear raster index
    Eigen::VectorXd xs(N), ys(N);
    for (Eigen::Index n = 0; n < N; ++n) {
        auto p = geometry.point(static_cast<int>(n));
        xs[n] = p[0];
        ys[n] = p[1];
    }

    const double d = geometry.d();
    const double cell = geometry.dx() * geometry.dy();
    const auto& dirs = grid->directions;

    detail::parallel_for(
        0, K,
        [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t k = lo; k < hi; ++k) {
                const double st = std::sin(dirs[k].theta);
                const double ct = std::cos(dirs[k].theta);
                const double sp = std::sin(dirs[k].phi);
                const double cp = std::cos(dirs[k].phi);
                const double fx = r * st * cp;
                const double fy = r * st * sp;
                const double fz = r * ct;
                const double zd = fz - d;

                cdouble* row11 = h11.row(k).data();
                cdouble* row12 = h12.row(k).data();
                cdouble* row21 = h21.row(k).data();
                cdouble* row22 = h22.row(k).data();

                for (Eigen::Index n = 0; n < N; ++n) {
                    const double ddx = fx - xs[n];
                    const double ddy = fy - ys[n];
                    // R > 0 for every entry: the radius check above keeps
                    // far points strictly outside the scan plane.
                    const double R2 = ddx * ddx + ddy * ddy + zd * zd;
                    const double R = std::sqrt(R2);
                    // W = 2 G'(R) / R * dx dy; 1/(4 pi R^2 * R) groups the
                    // Green's prefactor with the unit-vector normalization.
                    const cdouble w =
                        std::polar(cell / (2.0 * pi * R2), -k0 * R) *
                        cdouble(1.0 / R, k0);
                    row11[n] = (ct * sp * zd + st * ddy) * w;
                    row12[n] = -(ct * cp * zd + st * ddx) * w;
                    row21[n] = (cp * zd) * w;
                    row22[n] = (sp * zd) * w;
                }
            }
        },
        max_threads);

    return {std::move(h11), std::move(h12), std::move(h21), std::move(h22),
            std::move(grid), geometry, r, k0};
}

FarFieldPattern transform(const EquivalentCurrents& currents,
                          const RadiationOperator& op) {
    if (!(currents.geometry == op.geometry()))
        throw std::invalid_argument(
            "transform: currents geometry does not match the operator");
    if (currents.m_x.size() != op.h11().cols() ||
        currents.m_y.size() != op.h11().cols())
        throw std::invalid_argument("transform: current vector length mismatch");

    FarFieldPattern out;
    out.grid = op.grid();
    out.r = op.r();
    out.frequency = op.k0() * c0 / (2.0 * pi);
    out.e_theta = op.h11() * currents.m_x + op.h12() * currents.m_y;
    out.e_phi = op.h21() * currents.m_x + op.h22() * currents.m_y;
    return out;
}

FarFieldPattern transform(const NearFieldScan& scan, const RadiationOperator& op) {
    const double k0 = wavenumber(scan.frequency);
    if (std::abs(k0 - op.k0()) > 1e-9 * op.k0())
        throw std::invalid_argument(
            "transform: scan frequency does not match the operator wavenumber");
    FarFieldPattern out = transform(equivalent_currents(scan), op);
    out.frequency = scan.frequency;
    return out;
}

namespace {

std::string format_mm(double meters) {
    std::ostringstream os;
    os << meters * 1e3 << " mm";
    return os.str();
}

} // namespace

SetupReport validate_setup(const ScanGeometry& geometry, double frequency,
                           double theta_max, PolarizationMode mode) {
    const double lambda = wavelength(frequency);
    SetupReport report;

    const double d_wl = geometry.d() / lambda;
    if (d_wl < 1.0) {
        std::ostringstream os;
        os << "standoff d = " << format_mm(geometry.d()) << " is " << d_wl
           << " wavelengths, inside the reactive near field (want >= 1)";
        report.warnings.push_back({SetupCheck::standoff, os.str()});
    } else if (d_wl > 5.0 && mode == PolarizationMode::both) {
        std::ostringstream os;
        os << "standoff d = " << format_mm(geometry.d()) << " is " << d_wl
           << " wavelengths, beyond the 5-wavelength range of a dual-"
              "polarization scan";
        report.warnings.push_back({SetupCheck::standoff, os.str()});
    }

    // Alias-free sampling of the plane-wave spectrum inside the requested
    // cone needs steps below lambda / (1 + sin theta_max); at theta_max =
    // 90 deg this is the classic half-wavelength bound. One warning covers
    // both axes.
    const double step_limit = lambda / (1.0 + std::sin(theta_max));
    std::string coarse_axes;
    if (geometry.dx() >= step_limit)
        coarse_axes = "dx = " + format_mm(geometry.dx());
    if (geometry.dy() >= step_limit)
        coarse_axes += (coarse_axes.empty() ? "" : ", ") +
                       ("dy = " + format_mm(geometry.dy()));
    if (!coarse_axes.empty()) {
        std::ostringstream os;
        os << "step " << coarse_axes << " at or above the alias-free limit "
           << format_mm(step_limit) << " for the " << rad_to_deg(theta_max)
           << " deg cone";
        report.warnings.push_back({SetupCheck::step, os.str()});
    }

    const double span = std::min(geometry.span_x(), geometry.span_y());
    report.truncation_half_angle = std::atan2(span / 2.0, geometry.d());
    if (report.truncation_half_angle < theta_max) {
        std::ostringstream os;
        os << "truncation half-angle " << rad_to_deg(report.truncation_half_angle)
           << " deg does not cover the requested " << rad_to_deg(theta_max)
           << " deg cone";
        report.warnings.push_back({SetupCheck::truncation, os.str()});
    }

    return report;
}

} // namespace planarnf
