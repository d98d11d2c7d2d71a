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

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "planarnf/geometry.hpp"

namespace planarnf {

using cdouble = std::complex<double>;

/// Which tangential components a scan actually captured. Single-polarization
/// captures keep the absent component as explicit zeros and carry the flag so
/// downstream steps know the data was never measured.
enum class PolarizationMode { both, major_x_only, major_y_only };

const char* to_string(PolarizationMode mode);
PolarizationMode polarization_mode_from_string(const std::string& name);

/// Complex tangential E-field samples on a planar raster [V/m].
struct NearFieldScan {
    ScanGeometry geometry;
    double frequency; // Hz
    Eigen::VectorXcd e_x;
    Eigen::VectorXcd e_y;
    PolarizationMode mode;

    /// Validates vector lengths against the geometry and, for single
    /// polarization modes, that the absent component is identically zero.
    /// An empty absent component is zero-filled.
    NearFieldScan(ScanGeometry geometry, double frequency, Eigen::VectorXcd e_x,
                  Eigen::VectorXcd e_y, PolarizationMode mode = PolarizationMode::both);
};

/// Zeroes the minor component of a scan and flags the new mode. Used to
/// reprocess a dual-polarization capture the way a single-polarization
/// measurement would see it.
NearFieldScan with_polarization_mode(const NearFieldScan& scan, PolarizationMode mode);

/// Complex far-zone field samples over a spherical grid at radius r.
/// Only the theta/phi components exist; the radial component vanishes in the
/// far zone and is never stored.
struct FarFieldPattern {
    std::shared_ptr<const SphericalGrid> grid;
    double r;         // m
    double frequency; // Hz
    Eigen::VectorXcd e_theta;
    Eigen::VectorXcd e_phi;
    std::string port; // label, may be empty

    int size() const { return grid ? grid->size() : 0; }
};

/// Dielectric reference entry (relative permittivity + conductivity at a
/// spot frequency).
struct MaterialConstants {
    std::string name;
    double epsilon_r; // >= 1
    double sigma;     // S/m, >= 0
    double frequency; // Hz
};

/// Dry-skin reference values used for hand tissue at the two FR2 bands.
const std::vector<MaterialConstants>& dry_skin_constants();

} // namespace planarnf
