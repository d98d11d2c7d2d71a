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

#include "planarnf/fields.hpp"

namespace planarnf {

const char* to_string(PolarizationMode mode) {
    switch (mode) {
        case PolarizationMode::both: return "both";
        case PolarizationMode::major_x_only: return "major_x_only";
        case PolarizationMode::major_y_only: return "major_y_only";
    }
    return "both";
}

PolarizationMode polarization_mode_from_string(const std::string& name) {
    if (name == "both") return PolarizationMode::both;
    if (name == "major_x_only") return PolarizationMode::major_x_only;
    if (name == "major_y_only") return PolarizationMode::major_y_only;
    throw std::invalid_argument("unknown polarization mode '" + name + "'");
}

namespace {

void require_zero(const Eigen::VectorXcd& v, const char* which) {
    for (Eigen::Index n = 0; n < v.size(); ++n)
        if (v[n] != cdouble(0.0, 0.0))
            throw std::invalid_argument(
                std::string("NearFieldScan: component ") + which +
                " must be identically zero in a single-polarization capture; "
                "it was never measured and cannot be fabricated");
}

} // namespace

NearFieldScan::NearFieldScan(ScanGeometry geometry_, double frequency_,
                             Eigen::VectorXcd e_x_, Eigen::VectorXcd e_y_,
                             PolarizationMode mode_)
    : geometry(std::move(geometry_)), frequency(frequency_), e_x(std::move(e_x_)),
      e_y(std::move(e_y_)), mode(mode_) {
    if (!(frequency > 0.0))
        throw std::invalid_argument("NearFieldScan: frequency must be positive");
    const Eigen::Index n = geometry.point_count();
    if (mode == PolarizationMode::major_x_only && e_y.size() == 0)
        e_y = Eigen::VectorXcd::Zero(n);
    if (mode == PolarizationMode::major_y_only && e_x.size() == 0)
        e_x = Eigen::VectorXcd::Zero(n);
    if (e_x.size() != n || e_y.size() != n)
        throw std::invalid_argument(
            "NearFieldScan: field vectors must have nx*ny = " +
            std::to_string(n) + " entries");
    if (mode == PolarizationMode::major_x_only)
        require_zero(e_y, "e_y");
    if (mode == PolarizationMode::major_y_only)
        require_zero(e_x, "e_x");
}

NearFieldScan with_polarization_mode(const NearFieldScan& scan, PolarizationMode mode) {
    Eigen::VectorXcd ex = scan.e_x;
    Eigen::VectorXcd ey = scan.e_y;
    if (mode == PolarizationMode::major_x_only)
        ey.setZero();
    else if (mode == PolarizationMode::major_y_only)
        ex.setZero();
    return {scan.geometry, scan.frequency, std::move(ex), std::move(ey), mode};
}

const std::vector<MaterialConstants>& dry_skin_constants() {
    static const std::vector<MaterialConstants> table = {
        {"dry skin", 16.55, 25.82, 28.0e9},
        {"dry skin", 11.98, 31.43, 39.0e9},
    };
    return table;
}

} // namespace planarnf
