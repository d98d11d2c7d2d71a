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

#include "planarnf/sources.hpp"

#include <cmath>
#include <stdexcept>

#include "planarnf/constants.hpp"
#include "planarnf/transform.hpp"

namespace planarnf {

std::array<std::complex<double>, 3>
element_field(const PointSource& source, const std::array<double, 3>& at, double k0) {
    const double rx = at[0] - source.position[0];
    const double ry = at[1] - source.position[1];
    const double rz = at[2] - source.position[2];
    const double R = std::sqrt(rx * rx + ry * ry + rz * rz);
    if (!(R > 0.0))
        throw std::domain_error("element_field: observation point on the source");

    // E = m G'(R) (Rhat x u); for u = x:  (0, rz, -ry)/R, for u = y: (-rz, 0, rx)/R
    const cdouble s = source.moment * green_prime(R, k0) / R;
    if (source.orientation == Orientation::x)
        return {cdouble(0.0), s * rz, s * -ry};
    return {s * -rz, cdouble(0.0), s * rx};
}

double element_radiated_power(const PointSource& source, double k0) {
    const double m = std::abs(source.moment);
    return m * m * k0 * k0 / (12.0 * pi * eta0);
}

NearFieldScan sample_near_field(const std::vector<PointSource>& sources,
                                const ScanGeometry& geometry, double k0) {
    if (!(k0 > 0.0))
        throw std::domain_error("sample_near_field: wavenumber must be positive");
    for (const auto& s : sources) {
        if (!(std::abs(s.moment) > 0.0))
            throw std::invalid_argument("sample_near_field: source moment must be nonzero");
        if (!(s.position[2] < geometry.d()))
            throw std::domain_error(
                "sample_near_field: sources must sit strictly behind the scan plane");
    }

    const int N = geometry.point_count();
    Eigen::VectorXcd ex = Eigen::VectorXcd::Zero(N);
    Eigen::VectorXcd ey = Eigen::VectorXcd::Zero(N);
    for (int n = 0; n < N; ++n) {
        const auto p = geometry.point(n);
        for (const auto& s : sources) {
            const auto e = element_field(s, p, k0);
            ex[n] += e[0];
            ey[n] += e[1];
        }
    }
    return {geometry, k0 * c0 / (2.0 * pi), std::move(ex), std::move(ey),
            PolarizationMode::both};
}

FarFieldPattern analytic_far_field(const std::vector<PointSource>& sources,
                                   std::shared_ptr<const SphericalGrid> grid,
                                   double r, double k0) {
    if (!grid || grid->size() == 0)
        throw std::invalid_argument("analytic_far_field: empty grid");
    if (!(r > 0.0))
        throw std::domain_error("analytic_far_field: radius must be positive");

    FarFieldPattern out;
    out.grid = grid;
    out.r = r;
    out.frequency = k0 * c0 / (2.0 * pi);
    const int K = grid->size();
    out.e_theta.resize(K);
    out.e_phi.resize(K);

    for (int k = 0; k < K; ++k) {
        const Direction& dir = grid->directions[k];
        const auto p = far_point(dir, r);
        cdouble exs(0.0), eys(0.0), ezs(0.0);
        for (const auto& s : sources) {
            const auto e = element_field(s, p, k0);
            exs += e[0];
            eys += e[1];
            ezs += e[2];
        }
        const double st = std::sin(dir.theta), ct = std::cos(dir.theta);
        const double sp = std::sin(dir.phi), cp = std::cos(dir.phi);
        // project on theta/phi; the radial part vanishes in the far zone
        out.e_theta[k] = ct * cp * exs + ct * sp * eys - st * ezs;
        out.e_phi[k] = -sp * exs + cp * eys;
    }
    return out;
}

BlockageMask BlockageMask::transparent(const ScanGeometry& geometry) {
    BlockageMask mask;
    mask.factors = Eigen::VectorXcd::Ones(geometry.point_count());
    return mask;
}

void BlockageMask::set_region(const ScanGeometry& geometry, const std::string& name,
                              const std::function<bool(double, double)>& inside,
                              std::complex<double> factor) {
    if (factors.size() != geometry.point_count())
        throw std::invalid_argument("BlockageMask: mask size does not match geometry");
    if (std::abs(factor) > 1.0 + 1e-12)
        throw std::invalid_argument("BlockageMask: transmission factor above unit magnitude");
    for (int n = 0; n < geometry.point_count(); ++n) {
        const auto p = geometry.point(n);
        if (inside(p[0], p[1]))
            factors[n] *= factor;
    }
    regions.push_back(name);
}

NearFieldScan apply_blockage(const NearFieldScan& scan, const BlockageMask& mask) {
    if (mask.factors.size() != scan.geometry.point_count())
        throw std::invalid_argument("apply_blockage: mask size does not match the scan");
    for (int n = 0; n < mask.factors.size(); ++n)
        if (std::abs(mask.factors[n]) > 1.0 + 1e-12)
            throw std::invalid_argument(
                "apply_blockage: transmission factors must have magnitude <= 1");

    Eigen::VectorXcd ex = scan.e_x.cwiseProduct(mask.factors);
    Eigen::VectorXcd ey = scan.e_y.cwiseProduct(mask.factors);
    return {scan.geometry, scan.frequency, std::move(ex), std::move(ey), scan.mode};
}

ScanPreset standard_preset(Band band, Scenario scenario) {
    const double frequency = band == Band::ghz28 ? 28.0e9 : 39.0e9;
    const double step = band == Band::ghz28 ? 5.0e-3 : 4.0e-3;
    double standoff, extent;
    if (scenario == Scenario::free_space) {
        standoff = 20.0e-3;
        extent = band == Band::ghz28 ? 400.0e-3 : 300.0e-3;
    } else {
        standoff = 50.0e-3;
        extent = 200.0e-3;
    }
    const int n = static_cast<int>(std::lround(extent / step)) + 1;

    ScanPreset preset{
        std::string(band == Band::ghz28 ? "28ghz" : "39ghz") +
            (scenario == Scenario::free_space ? "_free_space" : "_with_hand"),
        frequency,
        ScanGeometry(n, n, step, step, standoff),
        deg_to_rad(60.0),
        scenario == Scenario::free_space ? PolarizationMode::both
                                         : PolarizationMode::major_x_only,
    };
    return preset;
}

std::vector<ScanPreset> all_presets() {
    return {
        standard_preset(Band::ghz28, Scenario::free_space),
        standard_preset(Band::ghz39, Scenario::free_space),
        standard_preset(Band::ghz28, Scenario::with_hand),
        standard_preset(Band::ghz39, Scenario::with_hand),
    };
}

} // namespace planarnf
