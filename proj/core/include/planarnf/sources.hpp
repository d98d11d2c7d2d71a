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
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "planarnf/fields.hpp"
#include "planarnf/geometry.hpp"

namespace planarnf {

/// In-plane axis of an elementary magnetic current.
enum class Orientation { x, y };

/// Elementary magnetic-current element with complex moment m [V m]. Its
/// exact electric field at any point is
///   E(r) = m * G'(R) * (Rhat x u),   R = |r - position|,
/// which makes the planar-equivalence processing chain exact up to
/// discretization, so these elements serve as analytic oracles. A y-oriented
/// element radiates x-polarized tangential E on the scan plane and vice
/// versa.
struct PointSource {
    std::array<double, 3> position; // m
    std::complex<double> moment;    // V m, nonzero
    Orientation orientation;
};

/// Exact E-field of one element at a point.
std::array<std::complex<double>, 3>
element_field(const PointSource& source, const std::array<double, 3>& at, double k0);

/// Total radiated power of one element, |m|^2 k0^2 / (12 pi eta0) [W].
double element_radiated_power(const PointSource& source, double k0);

/// Superposed tangential E of all sources sampled on the raster. All sources
/// must sit strictly behind the scan plane (z < d).
NearFieldScan sample_near_field(const std::vector<PointSource>& sources,
                                const ScanGeometry& geometry, double k0);

/// Superposed field of all sources evaluated directly at the far observation
/// points (radius r), projected onto theta/phi. Bypasses the scan plane
/// entirely; this is the independent reference for the scan->transform
/// pipeline.
FarFieldPattern analytic_far_field(const std::vector<PointSource>& sources,
                                   std::shared_ptr<const SphericalGrid> grid,
                                   double r, double k0);

/// Per-sample complex transmission factors applied to a scan, emulating
/// obstructions (fingers, palm) as shadowing at the scan plane. Factors are
/// capped at unit magnitude. This is a processing-path stand-in, not a
/// physical obstruction model.
struct BlockageMask {
    Eigen::VectorXcd factors;
    std::vector<std::string> regions;

    static BlockageMask transparent(const ScanGeometry& geometry);

    /// Multiplies `factor` into every sample whose (x, y) satisfies the
    /// predicate; records the region name.
    void set_region(const ScanGeometry& geometry, const std::string& name,
                    const std::function<bool(double, double)>& inside,
                    std::complex<double> factor);
};

/// Pointwise product of both field components with the mask factors.
NearFieldScan apply_blockage(const NearFieldScan& scan, const BlockageMask& mask);

enum class Band { ghz28, ghz39 };
enum class Scenario { free_space, with_hand };

/// Canned scan setup: geometry, frequency, validity cone and capture mode.
struct ScanPreset {
    std::string name;
    double frequency; // Hz
    ScanGeometry geometry;
    double theta_max; // rad
    PolarizationMode mode;
};

/// The four standard scan setups. Sample counts include both endpoints of
/// the scan area, n = L/step + 1:
///   28 GHz free space: d 20 mm, step 5 mm, L 400 mm (81x81), both pols
///   39 GHz free space: d 20 mm, step 4 mm, L 300 mm (76x76), both pols
///   28 GHz with hand:  d 50 mm, step 5 mm, L 200 mm (41x41), major only
///   39 GHz with hand:  d 50 mm, step 4 mm, L 200 mm (51x51), major only
/// The validity cone is 60 degrees in all four. Hand-scenario presets mark
/// the capture as major_x_only; which axis is major is a mounting choice,
/// override downstream if needed.
ScanPreset standard_preset(Band band, Scenario scenario);

/// All four presets, for listings.
std::vector<ScanPreset> all_presets();

} // namespace planarnf
