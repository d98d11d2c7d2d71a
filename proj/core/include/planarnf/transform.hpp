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
#include <vector>

#include <Eigen/Dense>

#include "planarnf/constants.hpp"
#include "planarnf/fields.hpp"
#include "planarnf/geometry.hpp"

namespace planarnf {

using RowMatrixXcd =
    Eigen::Matrix<cdouble, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Equivalent magnetic surface currents M = -n x E on the scan plane
/// (n = +z), collected as column vectors over the raster:
///   m_x[n] =  e_y[n]
///   m_y[n] = -e_x[n]
struct EquivalentCurrents {
    Eigen::VectorXcd m_x;
    Eigen::VectorXcd m_y;
    ScanGeometry geometry;
};

EquivalentCurrents equivalent_currents(const NearFieldScan& scan);

/// Radial derivative magnitude of the free-space Green's function,
///   G'(R) = e^{-j k0 R} / (4 pi R) * (j k0 + 1/R)   [1/m^2],
/// with the e^{-jkR} convention for outgoing waves (fixed project-wide).
/// Throws std::domain_error for R <= 0 (singular kernel).
std::complex<double> green_prime(double R, double k0);

/// Discretized Huygens radiation operator mapping equivalent currents on the
/// scan raster to theta/phi far-field components on a spherical grid:
///
///   [E_theta; E_phi] = [H11 H12; H21 H22] [m_x; m_y]
///
/// Entries follow from E(r) = -curl Integral{ 2 M(r') g(r,r') dS' } with the
/// doubled magnetic current of the image-equivalent planar problem:
///
///   [H11]_kn =  { cos t_k sin p_k (z_k - d) + sin t_k (y_k - y'_n) } W_kn
///   [H12]_kn = -{ cos t_k cos p_k (z_k - d) + sin t_k (x_k - x'_n) } W_kn
///   [H21]_kn =  { cos p_k (z_k - d) } W_kn
///   [H22]_kn =  { sin p_k (z_k - d) } W_kn
///
/// where W_kn = 2 G'(R_kn) / R_kn * dx * dy carries the unit-vector
/// normalization 1/R_kn of grad g and the equivalence factor 2, and
/// (x_k, y_k, z_k) is the far observation point at radius r.
class RadiationOperator {
  public:
    RadiationOperator(RowMatrixXcd h11, RowMatrixXcd h12, RowMatrixXcd h21,
                      RowMatrixXcd h22, std::shared_ptr<const SphericalGrid> grid,
                      ScanGeometry geometry, double r, double k0);

    const RowMatrixXcd& h11() const { return h11_; }
    const RowMatrixXcd& h12() const { return h12_; }
    const RowMatrixXcd& h21() const { return h21_; }
    const RowMatrixXcd& h22() const { return h22_; }

    const std::shared_ptr<const SphericalGrid>& grid() const { return grid_; }
    const ScanGeometry& geometry() const { return geometry_; }
    double r() const { return r_; }
    double k0() const { return k0_; }

  private:
    RowMatrixXcd h11_, h12_, h21_, h22_;
    std::shared_ptr<const SphericalGrid> grid_;
    ScanGeometry geometry_;
    double r_;
    double k0_;
};

/// Assembles the four K x N operator blocks. Requires the far radius to
/// clear the scan plane, r > d + plane radius. Row assembly runs in
/// parallel over far-field index k; the result does not depend on the
/// worker count (disjoint rows, pure per-entry arithmetic).
/// max_threads = 0 picks the hardware concurrency.
RadiationOperator assemble_operator(const ScanGeometry& geometry,
                                    std::shared_ptr<const SphericalGrid> grid,
                                    double r, double k0,
                                    unsigned max_threads = 0);

/// Applies the operator: E_theta = H11 m_x + H12 m_y, E_phi = H21 m_x +
/// H22 m_y. Geometry mismatch between currents and operator is a contract
/// error.
FarFieldPattern transform(const EquivalentCurrents& currents,
                          const RadiationOperator& op);

/// Convenience: currents from the scan, then apply. The scan frequency must
/// match the operator wavenumber.
FarFieldPattern transform(const NearFieldScan& scan, const RadiationOperator& op);

enum class SetupCheck { standoff, step, truncation };

struct SetupWarning {
    SetupCheck check;
    std::string message;
};

struct SetupReport {
    /// atan(min(span_x, span_y) / (2 d)): the polar angle up to which the
    /// finite scan area yields trustworthy far fields.
    double truncation_half_angle;
    std::vector<SetupWarning> warnings;

    bool ok() const { return warnings.empty(); }
};

/// Advisory checks of a scan setup against the planar scanning requirements
/// for a requested validity cone theta <= theta_max:
///
///  - standoff: d below 1 wavelength puts the probe into the reactive near
///    field; above 5 wavelengths is flagged for dual-polarization scans
///    (single-polarization captures imply a clearance-constrained setup in
///    which larger standoffs are the accepted trade-off).
///  - step: sample spacing at or above lambda / (1 + sin theta_max) aliases
///    the plane-wave spectrum inside the requested cone (reduces to the
///    classic lambda/2 bound for a full hemisphere).
///  - truncation: truncation half-angle below theta_max means part of the
///    requested cone is not covered by the scan area.
SetupReport validate_setup(const ScanGeometry& geometry, double frequency,
                           double theta_max = deg_to_rad(60.0),
                           PolarizationMode mode = PolarizationMode::both);

} // namespace planarnf
