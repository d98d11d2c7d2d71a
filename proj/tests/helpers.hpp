// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the planarnf authors

#pragma once

#include <complex>
#include <memory>
#include <random>
#include <vector>

#include "planarnf/planarnf.hpp"

namespace planarnf::testing {

inline std::shared_ptr<const SphericalGrid> shared_grid(int count, double theta_max) {
    return std::make_shared<SphericalGrid>(make_spherical_grid(count, theta_max));
}

inline std::shared_ptr<const SphericalGrid>
custom_grid(std::vector<Direction> directions, double theta_max) {
    SphericalGrid g;
    g.directions = std::move(directions);
    g.theta_max = theta_max;
    return std::make_shared<SphericalGrid>(std::move(g));
}

inline Eigen::VectorXcd random_complex(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i)
        v[i] = cdouble(dist(rng), dist(rng));
    return v;
}

/// Independent brute-force evaluation of the radiation sum, written against
/// the entry formulas with plain std::complex arithmetic. This is the oracle
/// the operator/transform path is checked against; keep it free of any
/// planarnf matrix code.
struct BruteForceFarField {
    std::vector<cdouble> e_theta;
    std::vector<cdouble> e_phi;
};

inline BruteForceFarField
brute_force_transform(const Eigen::VectorXcd& e_x, const Eigen::VectorXcd& e_y,
                      const ScanGeometry& g, const std::vector<Direction>& dirs,
                      double r, double k0) {
    BruteForceFarField out;
    out.e_theta.assign(dirs.size(), cdouble(0.0));
    out.e_phi.assign(dirs.size(), cdouble(0.0));
    const cdouble j(0.0, 1.0);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const double st = std::sin(dirs[k].theta), ct = std::cos(dirs[k].theta);
        const double sp = std::sin(dirs[k].phi), cp = std::cos(dirs[k].phi);
        const double xf = r * st * cp, yf = r * st * sp, zf = r * ct;
        for (int jj = 0; jj < g.ny(); ++jj)
            for (int ii = 0; ii < g.nx(); ++ii) {
                const int n = ii + jj * g.nx();
                const cdouble mx = e_y[n];
                const cdouble my = -e_x[n];
                const double xs = g.x_at(ii), ys = g.y_at(jj);
                const double R = std::sqrt((xf - xs) * (xf - xs) +
                                           (yf - ys) * (yf - ys) +
                                           (zf - g.d()) * (zf - g.d()));
                const cdouble gp = std::exp(-j * k0 * R) / (4.0 * pi * R) *
                                   (j * k0 + 1.0 / R);
                const cdouble w = 2.0 * gp / R * g.dx() * g.dy();
                const double zd = zf - g.d();
                out.e_theta[k] += (ct * sp * zd + st * (yf - ys)) * w * mx -
                                  (ct * cp * zd + st * (xf - xs)) * w * my;
                out.e_phi[k] += cp * zd * w * mx + sp * zd * w * my;
            }
    }
    return out;
}

/// Largest |a-b| / |b| across both field components.
inline double max_rel_err(const FarFieldPattern& a, const BruteForceFarField& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < b.e_theta.size(); ++k) {
        const auto idx = static_cast<Eigen::Index>(k);
        worst = std::max(worst, std::abs(a.e_theta[idx] - b.e_theta[k]) /
                                    std::abs(b.e_theta[k]));
        worst = std::max(worst, std::abs(a.e_phi[idx] - b.e_phi[k]) /
                                    std::abs(b.e_phi[k]));
    }
    return worst;
}

/// 4-element array of y-oriented elements spaced half a wavelength along x,
/// one port per element. cross_moment > 0 adds a weak x-oriented companion
/// to each element to give the scan a controlled cross-polarized component.
inline std::vector<std::vector<PointSource>>
linear_array_ports(double k0, double cross_moment = 0.0) {
    const double lambda = 2.0 * pi / k0;
    std::vector<std::vector<PointSource>> ports;
    for (int m = 0; m < 4; ++m) {
        const double x = (m - 1.5) * lambda / 2.0;
        std::vector<PointSource> srcs{
            {{x, 0.0, 0.0}, cdouble(1.0, 0.0), Orientation::y}};
        if (cross_moment > 0.0)
            srcs.push_back({{x, 1e-3, 0.0}, cdouble(cross_moment, 0.0), Orientation::x});
        ports.push_back(std::move(srcs));
    }
    return ports;
}

} // namespace planarnf::testing
