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

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "planarnf/fields.hpp"

namespace planarnf {

/// Per-port far-field patterns sharing one spherical grid and frequency.
class PortPatternSet {
  public:
    /// Validates that every pattern uses the same grid (bitwise identical
    /// directions), radius and frequency. Throws std::invalid_argument on
    /// mismatch, std::domain_error when empty.
    explicit PortPatternSet(std::vector<FarFieldPattern> patterns);

    const std::vector<FarFieldPattern>& patterns() const { return patterns_; }
    const std::shared_ptr<const SphericalGrid>& grid() const { return grid_; }
    int port_count() const { return static_cast<int>(patterns_.size()); }
    double r() const { return patterns_.front().r; }
    double frequency() const { return patterns_.front().frequency; }

  private:
    std::vector<FarFieldPattern> patterns_;
    std::shared_ptr<const SphericalGrid> grid_;
};

/// Best-case per-direction array synthesis with equal-gain combining.
///
/// For each direction and each polarization independently, every port is
/// co-phased with a unit-magnitude weight and the total weight power is
/// normalized to one:
///   |E_p,comb| = (1/sqrt(M)) * sum_m |E_p,m|,
/// with the combined phase set to zero by convention. Port magnitudes are
/// accumulated in sorted order so the result is independent of port
/// ordering down to the last bit.
FarFieldPattern equal_gain_combine(const PortPatternSet& ports);

/// Combined gain per direction plus its empirical distribution.
struct CoverageResult {
    std::shared_ptr<const SphericalGrid> grid;
    double r;         // m
    double frequency; // Hz
    Eigen::VectorXd g_hat; // combined field magnitude per direction [V/m]
    /// (gain, probability) pairs: gains ascending, probability i/K at the
    /// i-th sorted gain (empirical step CDF, each direction weighted 1/K).
    std::vector<std::pair<double, double>> cdf;

    /// prob(G < g), the strict empirical CDF.
    double cdf_at(double g) const;

    /// Realized gain of direction k in dBi (see realized_gain_db).
    double gain_dbi(int k) const;
};

/// G(Omega) = sqrt(|E_theta,comb|^2 + |E_phi,comb|^2) over the grid, with the
/// empirical CDF over the K area-uniform directions.
CoverageResult spherical_coverage(const PortPatternSet& ports);

/// Smallest gain g with CDF(g) >= p on the empirical step CDF, i.e. the
/// ceil(p K)-th smallest sample; no interpolation. Returns the combined
/// field magnitude (same scale as g_hat). Throws std::domain_error unless
/// 0 < p <= 1.
double cdf_percentile(const CoverageResult& result, double p);

/// Same percentile converted to realized gain in dBi.
double cdf_percentile_dbi(const CoverageResult& result, double p);

/// Realized gain for a far-field magnitude |E| at radius r, referenced to
/// 1 W accepted power:  G = 4 pi r^2 |E|^2 / (2 eta0 * 1 W).
double realized_gain(double field_magnitude, double r);
double realized_gain_db(double field_magnitude, double r);

/// Fixed-phi elevation cut through a ring grid: per ring of constant theta,
/// the sample azimuthally nearest to `phi` is taken when it lies within half
/// the ring's azimuth step. Returns (theta, realized gain dBi) sorted by
/// theta; empty when no points qualify.
std::vector<std::pair<double, double>> elevation_cut(const FarFieldPattern& pattern,
                                                     double phi);

} // namespace planarnf
