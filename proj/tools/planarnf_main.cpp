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

// planarnf command line: near-field scan processing from file to file.
//
// Subcommands: simulate, validate, transform, calibrate, coverage, preset.
// Exit codes: 0 success, 1 validation failure, 2 parse or contract error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planarnf/planarnf.hpp"

namespace fs = std::filesystem;
using namespace planarnf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitError = 2;

std::string default_output_dir(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("PLANARNF_OUTPUT_DIR"); env && *env)
        return env;
    return ".";
}

void ensure_dir(const std::string& dir) {
    if (!dir.empty() && dir != ".")
        fs::create_directories(dir);
}

std::optional<PortCalibration> find_calibration(const std::vector<PortCalibration>& cals,
                                                const std::string& port) {
    for (const auto& c : cals)
        if (c.port == port)
            return c;
    return std::nullopt;
}

void print_preset(const ScanPreset& p) {
    const auto& g = p.geometry;
    std::cout << "preset: " << p.name << "\n"
              << "frequency: " << p.frequency / 1e9 << " GHz\n"
              << "d: " << g.d() * 1e3 << " mm\n"
              << "dx: " << g.dx() * 1e3 << " mm\n"
              << "dy: " << g.dy() * 1e3 << " mm\n"
              << "Lx: " << g.span_x() * 1e3 << " mm (" << g.nx() << " samples)\n"
              << "Ly: " << g.span_y() * 1e3 << " mm (" << g.ny() << " samples)\n"
              << "theta_max: " << rad_to_deg(p.theta_max) << " deg\n"
              << "polarization: " << to_string(p.mode) << "\n";
}

int run_preset(const std::string& band_s, const std::string& scenario_s, bool list) {
    if (list) {
        for (const auto& p : all_presets()) {
            print_preset(p);
            std::cout << "\n";
        }
        return kExitOk;
    }
    Band band;
    if (band_s == "28") band = Band::ghz28;
    else if (band_s == "39") band = Band::ghz39;
    else throw std::invalid_argument("band must be 28 or 39");
    Scenario scenario;
    if (scenario_s == "free_space") scenario = Scenario::free_space;
    else if (scenario_s == "with_hand") scenario = Scenario::with_hand;
    else throw std::invalid_argument("scenario must be free_space or with_hand");
    print_preset(standard_preset(band, scenario));
    return kExitOk;
}

int run_validate(const std::string& scan_path, double theta_max_deg) {
    const io::ScanFile file = io::read_scan(scan_path);
    const SetupReport report = validate_setup(file.scan.geometry, file.scan.frequency,
                                              deg_to_rad(theta_max_deg), file.scan.mode);
    std::cout << "truncation half-angle: " << rad_to_deg(report.truncation_half_angle)
              << " deg\n";
    if (report.ok()) {
        std::cout << "setup ok for the " << theta_max_deg << " deg cone\n";
        return kExitOk;
    }
    for (const auto& w : report.warnings)
        std::cerr << "warning: " << w.message << "\n";
    return kExitValidation;
}

int run_simulate(const std::string& config_path, const std::string& out_flag) {
    const io::RunConfig cfg = io::load_run_config(config_path);
    const std::string out_dir = default_output_dir(
        out_flag.empty() ? cfg.output_dir : out_flag);
    ensure_dir(out_dir);

    const double k0 = wavenumber(cfg.frequency);
    for (const auto& port : cfg.ports) {
        if (port.sources.empty()) {
            std::cerr << "port " << port.label << ": no sources, skipping\n";
            continue;
        }
        NearFieldScan scan = sample_near_field(port.sources, cfg.geometry, k0);
        if (port.mask)
            scan = apply_blockage(scan, *port.mask);
        if (cfg.mode != PolarizationMode::both)
            scan = with_polarization_mode(scan, cfg.mode);
        std::string path = port.scan_path.empty()
                               ? (fs::path(out_dir) / ("port_" + port.label + ".scan")).string()
                               : port.scan_path;
        io::write_scan(scan, path, port.label);
        std::cout << "wrote " << path << " (" << scan.geometry.nx() << "x"
                  << scan.geometry.ny() << " samples)\n";
    }
    return kExitOk;
}

int run_transform(const std::string& scan_path, const std::string& out_path,
                  int grid_count, double theta_max_deg, double radius,
                  const std::string& cal_path, unsigned threads) {
    const io::ScanFile file = io::read_scan(scan_path);
    auto grid = std::make_shared<SphericalGrid>(
        make_spherical_grid(grid_count, deg_to_rad(theta_max_deg)));
    const double k0 = wavenumber(file.scan.frequency);
    const RadiationOperator op =
        assemble_operator(file.scan.geometry, grid, radius, k0, threads);
    FarFieldPattern pattern = transform(file.scan, op);
    pattern.port = file.port;

    if (!cal_path.empty()) {
        const auto cals = read_calibration(cal_path);
        const auto cal = find_calibration(cals, pattern.port);
        if (!cal)
            throw std::invalid_argument("no calibration record for port '" +
                                        pattern.port + "' in " + cal_path);
        pattern = apply_calibration(pattern, *cal, CalDirection::deembed);
    }

    io::write_far_field(pattern, out_path);
    std::cout << "wrote " << out_path << " (" << grid->size() << " directions)\n";
    return kExitOk;
}

int run_calibrate(const std::string& measured_path, const std::string& reference_path,
                  const std::string& out_path, double contour_db,
                  const std::string& averaging_s, bool append) {
    const FarFieldPattern measured = io::read_far_field(measured_path);
    const FarFieldPattern reference = io::read_far_field(reference_path);
    const LossAveraging averaging = averaging_s == "db" ? LossAveraging::db_difference
                                                        : LossAveraging::complex_ratio;
    PortCalibration cal = estimate_loss(measured, reference, contour_db, averaging);
    if (cal.provenance.reference.empty())
        cal.provenance.reference = fs::path(reference_path).filename().string();

    std::vector<PortCalibration> cals;
    if (append && fs::exists(out_path))
        cals = read_calibration(out_path);
    cals.push_back(cal);
    write_calibration(cals, out_path);

    std::cout << "port " << cal.port << ": loss " << cal.loss_db << " dB, phase "
              << cal.phase_rad << " rad (" << cal.provenance.points_used
              << " points";
    if (cal.provenance.points_excluded > 0)
        std::cerr << "warning: " << cal.provenance.points_excluded
                  << " region points excluded for a vanishing reference field\n";
    std::cout << ")\n";
    return kExitOk;
}

int run_coverage(const std::vector<std::string>& pattern_paths,
                 const std::string& out_flag, const std::string& cal_path,
                 const std::vector<double>& cut_phis_deg) {
    std::vector<PortCalibration> cals;
    if (!cal_path.empty())
        cals = read_calibration(cal_path);

    std::vector<FarFieldPattern> patterns;
    patterns.reserve(pattern_paths.size());
    std::shared_ptr<const SphericalGrid> grid;
    for (const auto& path : pattern_paths) {
        FarFieldPattern p = io::read_far_field(path);
        if (!grid)
            grid = p.grid;
        else if (same_directions(*grid, *p.grid))
            p.grid = grid; // share one grid object across ports
        if (!cal_path.empty()) {
            const auto cal = find_calibration(cals, p.port);
            if (!cal)
                throw std::invalid_argument("no calibration record for port '" +
                                            p.port + "' in " + cal_path);
            p = apply_calibration(p, *cal, CalDirection::deembed);
        }
        patterns.push_back(std::move(p));
    }

    const PortPatternSet ports(std::move(patterns));
    const CoverageResult result = spherical_coverage(ports);

    const std::string out_dir = default_output_dir(out_flag);
    ensure_dir(out_dir);
    const std::string map_path = (fs::path(out_dir) / "gain_map.csv").string();
    const std::string cdf_path = (fs::path(out_dir) / "coverage_cdf.csv").string();
    io::write_gain_map_csv(result, map_path);
    io::write_cdf_csv(result, cdf_path);

    const FarFieldPattern combined = equal_gain_combine(ports);
    for (double phi_deg : cut_phis_deg) {
        const auto cut = elevation_cut(combined, deg_to_rad(phi_deg));
        const std::string cut_path =
            (fs::path(out_dir) / ("cut_phi" + std::to_string(static_cast<int>(phi_deg)) +
                                  ".csv")).string();
        io::write_elevation_cut_csv(cut, cut_path);
    }

    std::cout << "wrote " << map_path << " and " << cdf_path << "\n";
    std::cout << "ports: " << ports.port_count() << ", directions: "
              << result.grid->size() << "\n";
    std::cout << "median gain: " << cdf_percentile_dbi(result, 0.5) << " dBi\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar near-field antenna measurement processing"};
    app.require_subcommand(1);

    // preset
    auto* preset = app.add_subcommand("preset", "print a canned scan setup");
    std::string band, scenario;
    bool list_presets = false;
    preset->add_option("band", band, "28 or 39 (GHz)");
    preset->add_option("scenario", scenario, "free_space or with_hand");
    preset->add_flag("--list", list_presets, "print all presets");

    // validate
    auto* validate = app.add_subcommand("validate", "check a scan against the "
                                                    "planar scanning requirements");
    std::string scan_path;
    double theta_max_deg = 60.0;
    validate->add_option("scan", scan_path, "scan file")->required();
    validate->add_option("--theta-max-deg", theta_max_deg, "requested validity cone");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "generate synthetic scans "
                                                    "from a run config");
    std::string config_path, sim_out;
    simulate->add_option("--config", config_path, "run config (JSON)")->required();
    simulate->add_option("--output-dir", sim_out, "output directory");

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "near-field scan to "
                                                          "far-field pattern");
    std::string tf_scan, tf_out, tf_cal;
    int tf_grid = 4000;
    double tf_theta = 60.0, tf_radius = 2.0;
    unsigned tf_threads = 0;
    transform_cmd->add_option("scan", tf_scan, "scan file")->required();
    transform_cmd->add_option("-o,--output", tf_out, "far-field file")->required();
    transform_cmd->add_option("--grid", tf_grid, "far-field direction count");
    transform_cmd->add_option("--theta-max-deg", tf_theta, "validity cone");
    transform_cmd->add_option("--radius", tf_radius, "far-field radius [m]");
    transform_cmd->add_option("--calibration", tf_cal, "de-embed using this "
                                                       "calibration file");
    transform_cmd->add_option("--threads", tf_threads, "worker threads (0 = auto)");

    // calibrate
    auto* calibrate = app.add_subcommand("calibrate", "estimate per-port loss "
                                                      "from measured vs reference");
    std::string cal_measured, cal_reference, cal_out, cal_averaging = "ratio";
    double cal_contour = 3.0;
    bool cal_append = false;
    calibrate->add_option("--measured", cal_measured, "measured pattern")->required();
    calibrate->add_option("--reference", cal_reference, "reference pattern")->required();
    calibrate->add_option("-o,--output", cal_out, "calibration file")->required();
    calibrate->add_option("--contour-db", cal_contour, "main-beam contour depth");
    calibrate->add_option("--averaging", cal_averaging, "ratio (complex mean) or db");
    calibrate->add_flag("--append", cal_append, "append to an existing file");

    // coverage
    auto* coverage = app.add_subcommand("coverage", "combine port patterns into "
                                                    "spherical coverage CSVs");
    std::vector<std::string> cov_patterns;
    std::string cov_out, cov_cal;
    std::vector<double> cov_cuts;
    coverage->add_option("patterns", cov_patterns, "far-field files, one per port")
        ->required();
    coverage->add_option("--output-dir", cov_out, "output directory "
                                                  "(default $PLANARNF_OUTPUT_DIR or .)");
    coverage->add_option("--calibration", cov_cal, "de-embed ports with this file");
    coverage->add_option("--cut-phi-deg", cov_cuts, "write elevation cut CSVs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (preset->parsed())
            return run_preset(band, scenario, list_presets);
        if (validate->parsed())
            return run_validate(scan_path, theta_max_deg);
        if (simulate->parsed())
            return run_simulate(config_path, sim_out);
        if (transform_cmd->parsed())
            return run_transform(tf_scan, tf_out, tf_grid, tf_theta, tf_radius,
                                 tf_cal, tf_threads);
        if (calibrate->parsed())
            return run_calibrate(cal_measured, cal_reference, cal_out, cal_contour,
                                 cal_averaging, cal_append);
        if (coverage->parsed())
            return run_coverage(cov_patterns, cov_out, cov_cal, cov_cuts);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
