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

#include "planarnf/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "planarnf/calibration.hpp"
#include "planarnf/constants.hpp"

namespace planarnf::io {

namespace {

using json = nlohmann::json;

// 17 significant digits round-trip an IEEE double exactly
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    return in;
}

struct HeaderLine {
    std::string key;
    std::string value;
};

// Reads "key: value" lines until the end-header marker; returns them in file
// order. `line` counts every consumed line.
std::vector<HeaderLine> read_header(std::ifstream& in, const std::string& path,
                                    int& line) {
    std::vector<HeaderLine> header;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line;
        if (raw == "end-header")
            return header;
        auto colon = raw.find(':');
        if (colon == std::string::npos || colon == 0)
            fail(path, line, "expected 'key: value' or 'end-header', got '" + raw + "'");
        std::string key = raw.substr(0, colon);
        std::string value = raw.substr(colon + 1);
        if (!value.empty() && value.front() == ' ')
            value.erase(0, 1);
        header.push_back({std::move(key), std::move(value)});
    }
    fail(path, line, "missing end-header marker");
}

double parse_double(const std::string& path, int line, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size())
            fail(path, line, "trailing characters after number '" + value + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail(path, line, "expected a number, got '" + value + "'");
    } catch (const std::out_of_range&) {
        fail(path, line, "number out of range: '" + value + "'");
    }
}

int parse_int(const std::string& path, int line, const std::string& value) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(value, &pos);
        if (pos != value.size())
            fail(path, line, "trailing characters after integer '" + value + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail(path, line, "expected an integer, got '" + value + "'");
    } catch (const std::out_of_range&) {
        fail(path, line, "integer out of range: '" + value + "'");
    }
}

void check_magic(std::ifstream& in, const std::string& path, int& line,
                 const std::string& format) {
    std::string raw;
    if (!std::getline(in, raw))
        fail(path, 1, "empty file");
    ++line;
    std::istringstream is(raw);
    std::string name;
    int version = -1;
    is >> name >> version;
    if (name != format)
        fail(path, line, "not a " + format + " file (first line '" + raw + "')");
    if (version != 1)
        fail(path, line,
             "unsupported " + format + " version " + std::to_string(version));
}

} // namespace

void write_scan(const ScanFile& file, const std::string& path) {
    const auto& scan = file.scan;
    const auto& g = scan.geometry;
    std::ofstream out = open_out(path);
    out << "planarnf-scan 1\n";
    out << "frequency_hz: " << fmt(scan.frequency) << "\n";
    out << "nx: " << g.nx() << "\n";
    out << "ny: " << g.ny() << "\n";
    out << "dx_m: " << fmt(g.dx()) << "\n";
    out << "dy_m: " << fmt(g.dy()) << "\n";
    out << "d_m: " << fmt(g.d()) << "\n";
    out << "offset_x_m: " << fmt(g.offset_x()) << "\n";
    out << "offset_y_m: " << fmt(g.offset_y()) << "\n";
    out << "polarization: " << to_string(scan.mode) << "\n";
    out << "port: " << file.port << "\n";
    for (const auto& [key, value] : file.extra_header)
        out << key << ": " << value << "\n";
    out << "end-header\n";
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const int n = g.linear_index(i, j);
            out << i << ' ' << j << ' ' << fmt(scan.e_x[n].real()) << ' '
                << fmt(scan.e_x[n].imag()) << ' ' << fmt(scan.e_y[n].real()) << ' '
                << fmt(scan.e_y[n].imag()) << "\n";
        }
    if (!out)
        throw std::runtime_error("write failure on '" + path + "'");
}

void write_scan(const NearFieldScan& scan, const std::string& path,
                const std::string& port) {
    write_scan(ScanFile{scan, port, {}}, path);
}

ScanFile read_scan(const std::string& path) {
    std::ifstream in = open_in(path);
    int line = 0;
    check_magic(in, path, line, "planarnf-scan");
    const int header_start = line;
    auto header = read_header(in, path, line);

    double frequency = 0, dx = 0, dy = 0, d = 0, ox = 0, oy = 0;
    int nx = 0, ny = 0;
    PolarizationMode mode = PolarizationMode::both;
    std::string port;
    std::vector<std::pair<std::string, std::string>> extra;
    bool saw_freq = false, saw_nx = false, saw_ny = false, saw_dx = false,
         saw_dy = false, saw_d = false;
    int hline = header_start;
    for (const auto& [key, value] : header) {
        ++hline;
        if (key == "frequency_hz") { frequency = parse_double(path, hline, value); saw_freq = true; }
        else if (key == "nx") { nx = parse_int(path, hline, value); saw_nx = true; }
        else if (key == "ny") { ny = parse_int(path, hline, value); saw_ny = true; }
        else if (key == "dx_m") { dx = parse_double(path, hline, value); saw_dx = true; }
        else if (key == "dy_m") { dy = parse_double(path, hline, value); saw_dy = true; }
        else if (key == "d_m") { d = parse_double(path, hline, value); saw_d = true; }
        else if (key == "offset_x_m") { ox = parse_double(path, hline, value); }
        else if (key == "offset_y_m") { oy = parse_double(path, hline, value); }
        else if (key == "polarization") {
            try { mode = polarization_mode_from_string(value); }
            catch (const std::invalid_argument& e) { fail(path, hline, e.what()); }
        }
        else if (key == "port") { port = value; }
        else extra.emplace_back(key, value);
    }
    if (!(saw_freq && saw_nx && saw_ny && saw_dx && saw_dy && saw_d))
        fail(path, line, "header is missing one of frequency_hz/nx/ny/dx_m/dy_m/d_m");

    ScanGeometry geometry = [&] {
        try {
            return ScanGeometry(nx, ny, dx, dy, d, ox, oy);
        } catch (const std::invalid_argument& e) {
            fail(path, line, e.what());
        }
    }();

    const int N = geometry.point_count();
    Eigen::VectorXcd ex(N), ey(N);
    std::vector<char> seen(static_cast<std::size_t>(N), 0);
    int rows = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line;
        if (raw.empty())
            continue;
        std::istringstream is(raw);
        int i, j;
        double exr, exi, eyr, eyi;
        if (!(is >> i >> j >> exr >> exi >> eyr >> eyi))
            fail(path, line, "malformed sample row '" + raw + "'");
        if (i < 0 || i >= nx || j < 0 || j >= ny)
            fail(path, line, "sample index (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") outside the raster");
        const int n = geometry.linear_index(i, j);
        if (seen[static_cast<std::size_t>(n)])
            fail(path, line, "duplicate sample index (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
        seen[static_cast<std::size_t>(n)] = 1;
        ex[n] = cdouble(exr, exi);
        ey[n] = cdouble(eyr, eyi);
        ++rows;
    }
    if (rows != N) {
        for (int n = 0; n < N; ++n)
            if (!seen[static_cast<std::size_t>(n)]) {
                auto [i, j] = geometry.grid_index(n);
                fail(path, line,
                     "expected " + std::to_string(N) + " rows, got " +
                         std::to_string(rows) + "; first missing sample is (" +
                         std::to_string(i) + ", " + std::to_string(j) + ")");
            }
    }

    try {
        return ScanFile{NearFieldScan(geometry, frequency, std::move(ex),
                                      std::move(ey), mode),
                        std::move(port), std::move(extra)};
    } catch (const std::invalid_argument& e) {
        fail(path, line, e.what());
    }
}

void write_far_field(const FarFieldPattern& pattern, const std::string& path) {
    if (!pattern.grid)
        throw std::invalid_argument("write_far_field: pattern without a grid");
    std::ofstream out = open_out(path);
    out << "planarnf-farfield 1\n";
    out << "frequency_hz: " << fmt(pattern.frequency) << "\n";
    out << "r_m: " << fmt(pattern.r) << "\n";
    out << "theta_max_rad: " << fmt(pattern.grid->theta_max) << "\n";
    out << "accepted_power_w: 1\n";
    out << "port: " << pattern.port << "\n";
    out << "count: " << pattern.grid->size() << "\n";
    out << "end-header\n";
    for (int k = 0; k < pattern.grid->size(); ++k) {
        const Direction& dir = pattern.grid->directions[k];
        out << fmt(dir.theta) << ' ' << fmt(dir.phi) << ' '
            << fmt(pattern.e_theta[k].real()) << ' ' << fmt(pattern.e_theta[k].imag())
            << ' ' << fmt(pattern.e_phi[k].real()) << ' '
            << fmt(pattern.e_phi[k].imag()) << "\n";
    }
    if (!out)
        throw std::runtime_error("write failure on '" + path + "'");
}

FarFieldPattern read_far_field(const std::string& path) {
    std::ifstream in = open_in(path);
    int line = 0;
    check_magic(in, path, line, "planarnf-farfield");
    const int header_start = line;
    auto header = read_header(in, path, line);

    double frequency = 0, r = 0, theta_max = 0;
    int count = -1;
    std::string port;
    bool saw_freq = false, saw_r = false, saw_tm = false;
    int hline = header_start;
    for (const auto& [key, value] : header) {
        ++hline;
        if (key == "frequency_hz") { frequency = parse_double(path, hline, value); saw_freq = true; }
        else if (key == "r_m") { r = parse_double(path, hline, value); saw_r = true; }
        else if (key == "theta_max_rad") { theta_max = parse_double(path, hline, value); saw_tm = true; }
        else if (key == "count") { count = parse_int(path, hline, value); }
        else if (key == "port") { port = value; }
        else if (key == "accepted_power_w") {
            if (parse_double(path, hline, value) != 1.0)
                fail(path, hline, "unsupported accepted power convention (must be 1 W)");
        }
    }
    if (!(saw_freq && saw_r && saw_tm) || count < 0)
        fail(path, line, "header is missing one of frequency_hz/r_m/theta_max_rad/count");

    auto grid = std::make_shared<SphericalGrid>();
    grid->theta_max = theta_max;
    grid->directions.reserve(static_cast<std::size_t>(count));
    Eigen::VectorXcd eth(count), eph(count);
    int rows = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line;
        if (raw.empty())
            continue;
        std::istringstream is(raw);
        double theta, phi, ethr, ethi, ephr, ephi;
        if (!(is >> theta >> phi >> ethr >> ethi >> ephr >> ephi))
            fail(path, line, "malformed direction row '" + raw + "'");
        if (rows >= count)
            fail(path, line, "more rows than the declared count " + std::to_string(count));
        grid->directions.push_back({theta, phi});
        eth[rows] = cdouble(ethr, ethi);
        eph[rows] = cdouble(ephr, ephi);
        ++rows;
    }
    if (rows != count)
        fail(path, line, "expected " + std::to_string(count) + " rows, got " +
                             std::to_string(rows));

    FarFieldPattern pattern;
    pattern.grid = std::move(grid);
    pattern.r = r;
    pattern.frequency = frequency;
    pattern.e_theta = std::move(eth);
    pattern.e_phi = std::move(eph);
    pattern.port = std::move(port);
    return pattern;
}

void write_gain_map_csv(const CoverageResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "theta_rad,phi_rad,gain_linear,gain_dbi\n";
    for (int k = 0; k < result.grid->size(); ++k) {
        const Direction& dir = result.grid->directions[k];
        const double g = realized_gain(result.g_hat[k], result.r);
        out << fmt(dir.theta) << ',' << fmt(dir.phi) << ',' << fmt(g) << ','
            << fmt(power_db(g)) << "\n";
    }
    if (!out)
        throw std::runtime_error("write failure on '" + path + "'");
}

void write_cdf_csv(const CoverageResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "gain_linear,gain_db,probability\n";
    for (const auto& [g_field, prob] : result.cdf) {
        const double g = realized_gain(g_field, result.r);
        out << fmt(g) << ',' << fmt(power_db(g)) << ',' << fmt(prob) << "\n";
    }
    if (!out)
        throw std::runtime_error("write failure on '" + path + "'");
}

void write_elevation_cut_csv(const std::vector<std::pair<double, double>>& cut,
                             const std::string& path) {
    std::ofstream out = open_out(path);
    out << "theta_rad,gain_dbi\n";
    for (const auto& [theta, gain] : cut)
        out << fmt(theta) << ',' << fmt(gain) << "\n";
    if (!out)
        throw std::runtime_error("write failure on '" + path + "'");
}

namespace {

PointSource parse_source(const json& js, const std::string& path) {
    PointSource s{};
    const auto& pos = js.at("position_m");
    if (!pos.is_array() || pos.size() != 3)
        throw ParseError(path + ": source position_m must be [x, y, z]");
    s.position = {pos[0].get<double>(), pos[1].get<double>(), pos[2].get<double>()};
    const auto& m = js.at("moment");
    if (m.is_array() && m.size() == 2)
        s.moment = cdouble(m[0].get<double>(), m[1].get<double>());
    else if (m.is_number())
        s.moment = cdouble(m.get<double>(), 0.0);
    else
        throw ParseError(path + ": source moment must be a number or [re, im]");
    const std::string axis = js.at("orientation").get<std::string>();
    if (axis == "x") s.orientation = Orientation::x;
    else if (axis == "y") s.orientation = Orientation::y;
    else throw ParseError(path + ": source orientation must be 'x' or 'y'");
    return s;
}

BlockageMask parse_mask(const json& js, const ScanGeometry& geometry,
                        const std::string& path) {
    BlockageMask mask = BlockageMask::transparent(geometry);
    for (const auto& region : js.at("regions")) {
        const std::string name = region.value("name", "region");
        const double x0 = region.at("x_min_m").get<double>();
        const double x1 = region.at("x_max_m").get<double>();
        const double y0 = region.at("y_min_m").get<double>();
        const double y1 = region.at("y_max_m").get<double>();
        cdouble factor(0.0, 0.0);
        if (region.contains("factor")) {
            const auto& f = region.at("factor");
            if (f.is_array() && f.size() == 2)
                factor = cdouble(f[0].get<double>(), f[1].get<double>());
            else if (f.is_number())
                factor = cdouble(f.get<double>(), 0.0);
            else
                throw ParseError(path + ": mask factor must be a number or [re, im]");
        }
        mask.set_region(
            geometry, name,
            [=](double x, double y) { return x >= x0 && x <= x1 && y >= y0 && y <= y1; },
            factor);
    }
    return mask;
}

} // namespace

RunConfig load_run_config(const std::string& path) {
    std::ifstream in = open_in(path);
    json j;
    try {
        j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }

    try {
        std::string preset_name;
        double frequency = 0.0;
        double theta_max = deg_to_rad(60.0);
        PolarizationMode mode = PolarizationMode::both;

        std::optional<ScanGeometry> geometry;
        if (j.contains("preset")) {
            preset_name = j.at("preset").get<std::string>();
            bool found = false;
            for (const auto& p : all_presets())
                if (p.name == preset_name) {
                    geometry = p.geometry;
                    frequency = p.frequency;
                    theta_max = p.theta_max;
                    mode = p.mode;
                    found = true;
                }
            if (!found)
                throw ParseError(path + ": unknown preset '" + preset_name + "'");
        } else {
            const auto& g = j.at("geometry");
            geometry = ScanGeometry(
                g.at("nx").get<int>(), g.at("ny").get<int>(),
                g.at("dx_m").get<double>(), g.at("dy_m").get<double>(),
                g.at("d_m").get<double>(), g.value("offset_x_m", 0.0),
                g.value("offset_y_m", 0.0));
            frequency = j.at("frequency_hz").get<double>();
        }
        if (j.contains("polarization"))
            mode = polarization_mode_from_string(j.at("polarization").get<std::string>());

        RunConfig cfg{std::move(preset_name), frequency, *geometry, mode,
                      4000,  theta_max, 2.0,       "",   {},   "",   ""};
        if (j.contains("grid")) {
            cfg.grid_count = j.at("grid").value("count", 4000);
            if (j.at("grid").contains("theta_max_deg"))
                cfg.theta_max = deg_to_rad(j.at("grid").at("theta_max_deg").get<double>());
        }
        if (cfg.grid_count < 1)
            throw ParseError(path + ": grid count must be >= 1");
        cfg.far_radius = j.value("far_radius_m", 2.0);
        cfg.output_dir = j.value("output_dir", "");

        if (j.contains("calibration")) {
            const auto& c = j.at("calibration");
            if (c.contains("file"))
                cfg.calibration_file = c.at("file").get<std::string>();
            if (c.contains("estimate"))
                cfg.estimate_reference = c.at("estimate").at("reference").get<std::string>();
        }

        for (const auto& jp : j.at("ports")) {
            PortConfig port;
            port.label = jp.at("label").get<std::string>();
            port.scan_path = jp.value("scan", "");
            if (jp.contains("sources"))
                for (const auto& js : jp.at("sources"))
                    port.sources.push_back(parse_source(js, path));
            if (jp.contains("mask"))
                port.mask = parse_mask(jp.at("mask"), cfg.geometry, path);
            if (port.sources.empty()) {
                if (port.scan_path.empty())
                    throw ParseError(path + ": port '" + port.label +
                                     "' needs either sources or a scan path");
                if (!std::filesystem::exists(port.scan_path))
                    throw ParseError(path + ": input scan '" + port.scan_path +
                                     "' for port '" + port.label + "' does not exist");
            }
            cfg.ports.push_back(std::move(port));
        }
        if (cfg.ports.empty())
            throw ParseError(path + ": config lists no ports");
        if (!cfg.calibration_file.empty() &&
            !std::filesystem::exists(cfg.calibration_file))
            throw ParseError(path + ": calibration file '" + cfg.calibration_file +
                             "' does not exist");
        return cfg;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace planarnf::io

namespace planarnf {

// calibration records share the simple key-value text layout

void write_calibration(const std::vector<PortCalibration>& cals,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "planarnf-calibration 1\n";
    for (const auto& cal : cals) {
        out << "port: " << cal.port << "\n";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", cal.loss_db);
        out << "loss_db: " << buf << "\n";
        std::snprintf(buf, sizeof(buf), "%.17g", cal.phase_rad);
        out << "phase_rad: " << buf << "\n";
        out << "reference: " << cal.provenance.reference << "\n";
        out << "region: " << cal.provenance.region << "\n";
        out << "points_used: " << cal.provenance.points_used << "\n";
        out << "points_excluded: " << cal.provenance.points_excluded << "\n";
    }
    if (!out)
        throw std::runtime_error("write failure on '" + path + "'");
}

std::vector<PortCalibration> read_calibration(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io::ParseError(path + ": cannot open file");
    std::string raw;
    int line = 0;
    if (!std::getline(in, raw))
        throw io::ParseError(path + ":1: empty file");
    ++line;
    {
        std::istringstream is(raw);
        std::string name;
        int version = -1;
        is >> name >> version;
        if (name != "planarnf-calibration" || version != 1)
            throw io::ParseError(path + ":1: not a planarnf-calibration version 1 file");
    }

    std::vector<PortCalibration> cals;
    while (std::getline(in, raw)) {
        ++line;
        if (raw.empty())
            continue;
        auto colon = raw.find(':');
        if (colon == std::string::npos)
            throw io::ParseError(path + ":" + std::to_string(line) +
                                 ": expected 'key: value', got '" + raw + "'");
        std::string key = raw.substr(0, colon);
        std::string value = raw.substr(colon + 1);
        if (!value.empty() && value.front() == ' ')
            value.erase(0, 1);
        if (key == "port") {
            cals.emplace_back();
            cals.back().port = value;
            continue;
        }
        if (cals.empty())
            throw io::ParseError(path + ":" + std::to_string(line) +
                                 ": '" + key + "' before any 'port:' record");
        try {
            if (key == "loss_db") cals.back().loss_db = std::stod(value);
            else if (key == "phase_rad") cals.back().phase_rad = std::stod(value);
            else if (key == "reference") cals.back().provenance.reference = value;
            else if (key == "region") cals.back().provenance.region = value;
            else if (key == "points_used") cals.back().provenance.points_used = std::stoi(value);
            else if (key == "points_excluded") cals.back().provenance.points_excluded = std::stoi(value);
            // unknown keys are tolerated
        } catch (const std::exception&) {
            throw io::ParseError(path + ":" + std::to_string(line) +
                                 ": bad value for '" + key + "': '" + value + "'");
        }
    }
    return cals;
}

} // namespace planarnf
