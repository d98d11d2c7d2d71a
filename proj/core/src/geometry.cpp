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

#include "planarnf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "planarnf/constants.hpp"

namespace planarnf {

ScanGeometry::ScanGeometry(int nx, int ny, double dx, double dy, double d,
                           double offset_x, double offset_y)
    : nx_(nx), ny_(ny), dx_(dx), dy_(dy), d_(d), offset_x_(offset_x),
      offset_y_(offset_y) {
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("ScanGeometry: need at least 2 samples per axis");
    if (!(dx > 0.0) || !(dy > 0.0))
        throw std::invalid_argument("ScanGeometry: sample steps must be positive");
    if (!(d > 0.0))
        throw std::invalid_argument("ScanGeometry: standoff must be positive");
}

int ScanGeometry::linear_index(int i, int j) const {
    if (i < 0 || i >= nx_ || j < 0 || j >= ny_)
        throw std::out_of_range("ScanGeometry::linear_index: index (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ") outside raster");
    return i + j * nx_;
}

std::pair<int, int> ScanGeometry::grid_index(int n) const {
    if (n < 0 || n >= point_count())
        throw std::out_of_range("ScanGeometry::grid_index: linear index " +
                                std::to_string(n) + " outside raster");
    return {n % nx_, n / nx_};
}

std::array<double, 3> ScanGeometry::point(int n) const {
    auto [i, j] = grid_index(n);
    return {x_at(i), y_at(j), d_};
}

double ScanGeometry::plane_radius() const {
    // extreme samples are at the four corners
    double xm = std::max(std::abs(x_at(0)), std::abs(x_at(nx_ - 1)));
    double ym = std::max(std::abs(y_at(0)), std::abs(y_at(ny_ - 1)));
    return std::hypot(xm, ym);
}

std::array<double, 3> unit_vector(const Direction& dir) {
    double st = std::sin(dir.theta), ct = std::cos(dir.theta);
    return {st * std::cos(dir.phi), st * std::sin(dir.phi), ct};
}

std::array<double, 3> far_point(const Direction& dir, double r) {
    auto u = unit_vector(dir);
    return {r * u[0], r * u[1], r * u[2]};
}

double great_circle_distance(const Direction& a, const Direction& b) {
    auto ua = unit_vector(a);
    auto ub = unit_vector(b);
    double dot = ua[0] * ub[0] + ua[1] * ub[1] + ua[2] * ub[2];
    return std::acos(std::clamp(dot, -1.0, 1.0));
}

SphericalGrid make_spherical_grid(int count, double theta_max) {
    if (count < 1)
        throw std::domain_error("make_spherical_grid: count must be >= 1");
    if (!(theta_max > 0.0) || theta_max > pi)
        throw std::domain_error("make_spherical_grid: theta_max must be in (0, pi]");

    SphericalGrid grid;
    grid.theta_max = theta_max;
    grid.directions.push_back({0.0, 0.0}); // pole
    if (count == 1)
        return grid;

    double solid_angle = 2.0 * pi * (1.0 - std::cos(theta_max));
    double delta = std::sqrt(solid_angle / count);
    int n_rings = std::max(1, static_cast<int>(std::lround(theta_max / delta)));
    double ring_step = theta_max / n_rings;

    grid.directions.reserve(static_cast<std::size_t>(count) + count / 16 + 8);
    for (int i = 1; i <= n_rings; ++i) {
        double theta = i * ring_step;
        int m = std::max(
            1, static_cast<int>(std::lround(2.0 * pi * std::sin(theta) / delta)));
        double phi_step = 2.0 * pi / m;
        for (int j = 0; j < m; ++j)
            grid.directions.push_back({theta, j * phi_step});
    }
    return grid;
}

bool same_directions(const SphericalGrid& a, const SphericalGrid& b) {
    if (a.theta_max != b.theta_max || a.directions.size() != b.directions.size())
        return false;
    for (std::size_t k = 0; k < a.directions.size(); ++k)
        if (a.directions[k].theta != b.directions[k].theta ||
            a.directions[k].phi != b.directions[k].phi)
            return false;
    return true;
}

} // namespace planarnf
