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

#pragma once

#include <array>
#include <utility>
#include <vector>

namespace planarnf {

/// Regular rectangular probe raster at standoff d above the antenna plane.
///
/// The coordinate origin sits at the middle of the antenna array; the scan
/// plane is z = d and is centered above the origin unless an explicit
/// (offset_x, offset_y) is given. Samples are indexed 0 <= i < nx,
/// 0 <= j < ny with the row-major linear index n = i + j * nx, and sit at
///   x_i = (i - (nx-1)/2) * dx + offset_x
///   y_j = (j - (ny-1)/2) * dy + offset_y.
class ScanGeometry {
  public:
    ScanGeometry(int nx, int ny, double dx, double dy, double d,
                 double offset_x = 0.0, double offset_y = 0.0);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }
    double d() const { return d_; }
    double offset_x() const { return offset_x_; }
    double offset_y() const { return offset_y_; }

    int point_count() const { return nx_ * ny_; }

    int linear_index(int i, int j) const;
    std::pair<int, int> grid_index(int n) const;

    double x_at(int i) const { return (i - 0.5 * (nx_ - 1)) * dx_ + offset_x_; }
    double y_at(int j) const { return (j - 0.5 * (ny_ - 1)) * dy_ + offset_y_; }

    /// Sample position (x, y, d) of linear index n.
    std::array<double, 3> point(int n) const;

    /// Extent of the sampled area along x/y, (n-1) * step.
    double span_x() const { return (nx_ - 1) * dx_; }
    double span_y() const { return (ny_ - 1) * dy_; }

    /// Largest in-plane distance of any sample from the origin.
    double plane_radius() const;

    bool operator==(const ScanGeometry&) const = default;

  private:
    int nx_, ny_;
    double dx_, dy_, d_;
    double offset_x_, offset_y_;
};

/// Far-field observation direction, theta in [0, pi] from +z, phi in [0, 2pi).
struct Direction {
    double theta;
    double phi;
};

/// Unit vector (sin t cos p, sin t sin p, cos t).
std::array<double, 3> unit_vector(const Direction& dir);

/// Cartesian observation point at radius r along the direction.
std::array<double, 3> far_point(const Direction& dir, double r);

/// Great-circle (angular) distance between two directions [rad].
double great_circle_distance(const Direction& a, const Direction& b);

/// Quasi-uniform set of K directions covering the cone theta <= theta_max.
struct SphericalGrid {
    std::vector<Direction> directions;
    double theta_max;

    int size() const { return static_cast<int>(directions.size()); }
};

/// Builds a quasi-uniform grid of roughly `count` directions over the cone
/// theta <= theta_max.
///
/// Rings of constant theta are spaced by delta_theta ~ sqrt(cone solid angle
/// / count); the ring at theta carries round(2 pi sin(theta) / delta) equally
/// spaced azimuth samples and the pole carries a single point. The result is
/// deterministic: identical arguments give bit-identical direction lists.
/// Total point count lands within about +-2% of the request for counts in
/// the hundreds and above.
SphericalGrid make_spherical_grid(int count, double theta_max);

/// Exact (bitwise) equality of direction lists and theta_max.
bool same_directions(const SphericalGrid& a, const SphericalGrid& b);

} // namespace planarnf
