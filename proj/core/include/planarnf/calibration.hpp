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
#include <functional>
#include <string>
#include <vector>

#include "planarnf/fields.hpp"

namespace planarnf {

struct CalibrationProvenance {
    std::string reference; // id of the reference pattern used
    std::string region;    // description of the angular region used
    int points_used = 0;
    int points_excluded = 0; // region points skipped for a vanishing reference
};

/// Per-port complex loss factor for de-embedding feed lines, connectors and
/// the measurement system. Stored as a positive loss magnitude in dB plus a
/// phase, i.e. the complex factor is 10^(-loss_db/20) * e^{j phase}.
struct PortCalibration {
    std::string port;
    double loss_db = 0.0;
    double phase_rad = 0.0;
    CalibrationProvenance provenance;

    std::complex<double> factor() const;
};

/// How per-direction measured/reference differences are averaged into one
/// loss estimate. complex_ratio averages the complex field ratios (default);
/// db_difference averages the per-point dB magnitudes (phase still from the
/// circular mean of the ratios), kept for comparison studies.
enum class LossAveraging { complex_ratio, db_difference };

/// Estimates the loss of `measured` relative to `reference` as the average
/// per-direction field ratio over the main beam of the reference.
///
/// The region defaults to all directions within `beam_contour_db` (3 dB) of
/// the reference pattern's peak. At each region point the ratio is taken on
/// the reference's dominant polarization component; points where that
/// component falls below 1e-15 of the pattern peak are excluded and counted
/// in the provenance. Throws std::domain_error when the region is empty.
PortCalibration estimate_loss(const FarFieldPattern& measured,
                              const FarFieldPattern& reference,
                              double beam_contour_db = 3.0,
                              LossAveraging averaging = LossAveraging::complex_ratio);

/// Same, with an explicit direction predicate instead of the main-beam
/// contour.
PortCalibration estimate_loss(const FarFieldPattern& measured,
                              const FarFieldPattern& reference,
                              const std::function<bool(int)>& region,
                              const std::string& region_label,
                              LossAveraging averaging = LossAveraging::complex_ratio);

enum class CalDirection { embed, deembed };

/// embed multiplies both field components by the complex loss factor,
/// deembed divides; the two are exact inverses. Throws std::domain_error for
/// a non-finite or zero factor.
FarFieldPattern apply_calibration(const FarFieldPattern& pattern,
                                  const PortCalibration& cal, CalDirection direction);

/// Calibration file I/O: one human-readable record per port with a stable
/// field order (port, loss_db, phase_rad, reference, region).
void write_calibration(const std::vector<PortCalibration>& cals,
                       const std::string& path);
std::vector<PortCalibration> read_calibration(const std::string& path);

} // namespace planarnf
