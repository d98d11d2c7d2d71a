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

#include "planarnf/calibration.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "planarnf/constants.hpp"
#include "planarnf/geometry.hpp"

namespace planarnf {

std::complex<double> PortCalibration::factor() const {
    return std::polar(db_to_field(-loss_db), phase_rad);
}

namespace {

double pattern_magnitude(const FarFieldPattern& p, int k) {
    return std::hypot(std::abs(p.e_theta[k]), std::abs(p.e_phi[k]));
}

PortCalibration estimate_on_region(const FarFieldPattern& measured,
                                   const FarFieldPattern& reference,
                                   const std::vector<int>& region,
                                   const std::string& region_label,
                                   LossAveraging averaging) {
    if (region.empty())
        throw std::domain_error("estimate_loss: empty estimation region");

    double peak = 0.0;
    for (int k = 0; k < reference.size(); ++k)
        peak = std::max(peak, pattern_magnitude(reference, k));

    const double floor = 1e-15 * peak;
    cdouble ratio_sum(0.0, 0.0);
    cdouble phase_sum(0.0, 0.0);
    double db_sum = 0.0;
    int used = 0, excluded = 0;
    for (int k : region) {
        // ratio on the dominant polarization of the reference at this point
        const bool theta_dom =
            std::abs(reference.e_theta[k]) >= std::abs(reference.e_phi[k]);
        const cdouble ref = theta_dom ? reference.e_theta[k] : reference.e_phi[k];
        const cdouble mea = theta_dom ? measured.e_theta[k] : measured.e_phi[k];
        if (std::abs(ref) < floor) {
            ++excluded;
            continue;
        }
        const cdouble ratio = mea / ref;
        ratio_sum += ratio;
        db_sum += field_db(std::abs(ratio));
        if (std::abs(ratio) > 0.0)
            phase_sum += ratio / std::abs(ratio);
        ++used;
    }
    if (used == 0)
        throw std::domain_error(
            "estimate_loss: every region point had a vanishing reference field");

    PortCalibration cal;
    cal.port = measured.port;
    if (averaging == LossAveraging::complex_ratio) {
        const cdouble mean = ratio_sum / static_cast<double>(used);
        cal.loss_db = -field_db(std::abs(mean));
        cal.phase_rad = std::arg(mean);
    } else {
        cal.loss_db = -db_sum / static_cast<double>(used);
        cal.phase_rad = std::arg(phase_sum);
    }
    cal.loss_db += 0.0; // normalize negative zero
    if (!std::isfinite(cal.loss_db))
        throw std::domain_error("estimate_loss: measured field vanishes on the region");
    cal.provenance.reference = reference.port;
    cal.provenance.region = region_label;
    cal.provenance.points_used = used;
    cal.provenance.points_excluded = excluded;
    return cal;
}

} // namespace

PortCalibration estimate_loss(const FarFieldPattern& measured,
                              const FarFieldPattern& reference,
                              double beam_contour_db, LossAveraging averaging) {
    if (!measured.grid || !reference.grid ||
        (measured.grid != reference.grid &&
         !same_directions(*measured.grid, *reference.grid)))
        throw std::invalid_argument("estimate_loss: patterns must share one grid");

    double peak = 0.0;
    for (int k = 0; k < reference.size(); ++k)
        peak = std::max(peak, pattern_magnitude(reference, k));
    const double threshold = peak * db_to_field(-beam_contour_db);

    std::vector<int> region;
    for (int k = 0; k < reference.size(); ++k)
        if (pattern_magnitude(reference, k) >= threshold)
            region.push_back(k);

    std::ostringstream label;
    label << "main beam (-" << beam_contour_db << " dB contour of reference peak)";
    return estimate_on_region(measured, reference, region, label.str(), averaging);
}

PortCalibration estimate_loss(const FarFieldPattern& measured,
                              const FarFieldPattern& reference,
                              const std::function<bool(int)>& region,
                              const std::string& region_label,
                              LossAveraging averaging) {
    if (!measured.grid || !reference.grid ||
        (measured.grid != reference.grid &&
         !same_directions(*measured.grid, *reference.grid)))
        throw std::invalid_argument("estimate_loss: patterns must share one grid");

    std::vector<int> selected;
    for (int k = 0; k < reference.size(); ++k)
        if (region(k))
            selected.push_back(k);
    return estimate_on_region(measured, reference, selected, region_label, averaging);
}

FarFieldPattern apply_calibration(const FarFieldPattern& pattern,
                                  const PortCalibration& cal,
                                  CalDirection direction) {
    const cdouble f = cal.factor();
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag()) || f == cdouble(0.0))
        throw std::domain_error("apply_calibration: loss factor must be finite and nonzero");

    FarFieldPattern out = pattern;
    if (direction == CalDirection::embed) {
        out.e_theta *= f;
        out.e_phi *= f;
    } else {
        out.e_theta /= f;
        out.e_phi /= f;
    }
    return out;
}

} // namespace planarnf
