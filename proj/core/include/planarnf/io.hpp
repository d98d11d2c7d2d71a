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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planarnf/constants.hpp"
#include "planarnf/fields.hpp"
#include "planarnf/sources.hpp"
#include "planarnf/synthesis.hpp"

namespace planarnf::io {

/// File format violation; the message names the file and line.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// On-disk scan: the field data plus the port label and any unrecognized
/// header keys, which round-trip untouched.
///
/// Format (text, SI units, angles in radians, doubles at 17 significant
/// digits so decoded values round-trip exactly):
///
///   planarnf-scan 1
///   frequency_hz: <double>
///   nx: <int>            ny: ..., dx_m, dy_m, d_m, offset_x_m, offset_y_m
///   polarization: both | major_x_only | major_y_only
///   port: <label>
///   end-header
///   <i> <j> <re_ex> <im_ex> <re_ey> <im_ey>     (nx*ny rows, 0-based i j)
struct ScanFile {
    NearFieldScan scan;
    std::string port;
    std::vector<std::pair<std::string, std::string>> extra_header;
};

ScanFile read_scan(const std::string& path);
void write_scan(const ScanFile& file, const std::string& path);
void write_scan(const NearFieldScan& scan, const std::string& path,
                const std::string& port = "");

/// Far-field pattern file:
///
///   planarnf-farfield 1
///   frequency_hz / r_m / theta_max_rad / accepted_power_w (= 1) / port /
///   count, then end-header and per-direction rows
///   <theta> <phi> <re_eth> <im_eth> <re_eph> <im_eph>.
FarFieldPattern read_far_field(const std::string& path);
void write_far_field(const FarFieldPattern& pattern, const std::string& path);

/// Per-direction gain map CSV: theta_rad,phi_rad,gain_linear,gain_dbi.
void write_gain_map_csv(const CoverageResult& result, const std::string& path);

/// Empirical CDF CSV: gain_linear,gain_db,probability (realized gain, dB
/// relative to isotropic).
void write_cdf_csv(const CoverageResult& result, const std::string& path);

void write_elevation_cut_csv(const std::vector<std::pair<double, double>>& cut,
                             const std::string& path);

/// One simulated port: a label, where its scan goes, and what radiates.
struct PortConfig {
    std::string label;
    std::string scan_path; // input when `sources` is empty, output otherwise
    std::vector<PointSource> sources;
    std::optional<BlockageMask> mask;
};

/// Run configuration (JSON). Geometry comes either from a named preset or an
/// explicit geometry block plus frequency; `ports` lists scans per port.
struct RunConfig {
    std::string preset_name; // empty when geometry is explicit
    double frequency = 0.0;  // Hz
    ScanGeometry geometry;
    PolarizationMode mode = PolarizationMode::both;
    int grid_count = 4000;
    double theta_max = deg_to_rad(60.0);
    double far_radius = 2.0; // m
    std::string output_dir;
    std::vector<PortConfig> ports;
    std::string calibration_file;     // optional, applied when de-embedding
    std::string estimate_reference;   // optional, reference pattern path
};

/// Loads and validates a run configuration. Ports without sources are
/// treated as referencing existing scan inputs, which must exist at load
/// time. grid_count must be >= 1.
RunConfig load_run_config(const std::string& path);

} // namespace planarnf::io
