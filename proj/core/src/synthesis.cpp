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

#include "planarnf/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "planarnf/constants.hpp"

namespace planarnf {

PortPatternSet::PortPatternSet(std::vector<FarFieldPattern> patterns)
    : patterns_(std::move(patterns)) {
    if (patterns_.empty())
        throw std::domain_error("PortPatternSet: need at least one port");
    const auto& first = patterns_.front();
    if (!first.grid)
        throw std::invalid_argument("PortPatternSet: pattern without a grid");
    for (const auto& p : patterns_) {
        if (!p.grid || (p.grid != first.grid && !same_directions(*p.grid, *first.grid)))
            throw std::invalid_argument("PortPatternSet: ports must share one grid");
        if (p.frequency != first.frequency)
            throw std::invalid_argument("PortPatternSet: ports must share one frequency");
        if (p.r != first.r)
            throw std::invalid_argument("PortPatternSet: ports must share one far radius");
        if (p.e_theta.size() != first.grid->size() ||
            p.e_phi.size() != first.grid->size())
            throw std::invalid_argument("PortPatternSet: field length mismatch");
    }
    grid_ = first.grid;
}

FarFieldPattern equal_gain_combine(const PortPatternSet& ports) {
    const int K = ports.grid()->size();
    const int M = ports.port_count();
    const double norm = 1.0 / std::sqrt(static_cast<double>(M));

    FarFieldPattern out;
    out.grid = ports.grid();
    out.r = ports.r();
    out.frequency = ports.frequency();
    out.port = "combined";
    out.e_theta.resize(K);
    out.e_phi.resize(K);

    std::vector<double> mags(M);
    for (int k = 0; k < K; ++k) {
        for (int pol = 0; pol < 2; ++pol) {
            for (int m = 0; m < M; ++m) {
                const auto& p = ports.patterns()[m];
                mags[m] = std::abs(pol == 0 ? p.e_theta[k] : p.e_phi[k]);
            }
            // summing in sorted order makes the result independent of the
            // port ordering
            std::sort(mags.begin(), mags.end());
            double sum = 0.0;
            for (double v : mags)
                sum += v;
            (pol == 0 ? out.e_theta : out.e_phi)[k] = cdouble(norm * sum, 0.0);
        }
    }
    return out;
}

double CoverageResult::cdf_at(double g) const {
    auto it = std::lower_bound(
        cdf.begin(), cdf.end(), g,
        [](const std::pair<double, double>& e, double v) { return e.first < v; });
    return static_cast<double>(it - cdf.begin()) / static_cast<double>(cdf.size());
}

double CoverageResult::gain_dbi(int k) const {
    return realized_gain_db(g_hat[k], r);
}

CoverageResult spherical_coverage(const PortPatternSet& ports) {
    FarFieldPattern comb = equal_gain_combine(ports);
    const int K = comb.grid->size();

    CoverageResult result;
    result.grid = comb.grid;
    result.r = comb.r;
    result.frequency = comb.frequency;
    result.g_hat.resize(K);
    for (int k = 0; k < K; ++k)
        result.g_hat[k] = std::hypot(std::abs(comb.e_theta[k]), std::abs(comb.e_phi[k]));

    std::vector<double> sorted(result.g_hat.data(), result.g_hat.data() + K);
    std::sort(sorted.begin(), sorted.end());
    result.cdf.reserve(K);
    for (int i = 0; i < K; ++i)
        result.cdf.emplace_back(sorted[i], static_cast<double>(i + 1) / K);
    return result;
}

double cdf_percentile(const CoverageResult& result, double p) {
    if (!(p > 0.0) || p > 1.0)
        throw std::domain_error("cdf_percentile: p must be in (0, 1]");
    const int K = static_cast<int>(result.cdf.size());
    int idx = static_cast<int>(std::ceil(p * K)) - 1;
    idx = std::clamp(idx, 0, K - 1);
    return result.cdf[static_cast<std::size_t>(idx)].first;
}

double cdf_percentile_dbi(const CoverageResult& result, double p) {
    return realized_gain_db(cdf_percentile(result, p), result.r);
}

double realized_gain(double field_magnitude, double r) {
    return 4.0 * pi * r * r * field_magnitude * field_magnitude / (2.0 * eta0);
}

double realized_gain_db(double field_magnitude, double r) {
    return power_db(realized_gain(field_magnitude, r));
}

std::vector<std::pair<double, double>> elevation_cut(const FarFieldPattern& pattern,
                                                     double phi) {
    if (!pattern.grid)
        throw std::invalid_argument("elevation_cut: pattern without a grid");
    // wrap the cut azimuth into [0, 2pi)
    double cut = std::fmod(phi, 2.0 * pi);
    if (cut < 0.0)
        cut += 2.0 * pi;

    // rings carry bit-identical theta by construction
    std::map<double, std::vector<int>> rings;
    const auto& dirs = pattern.grid->directions;
    for (int k = 0; k < pattern.grid->size(); ++k)
        rings[dirs[k].theta].push_back(k);

    std::vector<std::pair<double, double>> out;
    out.reserve(rings.size());
    for (const auto& [theta, members] : rings) {
        const double step = 2.0 * pi / static_cast<double>(members.size());
        int best = -1;
        double best_dist = 0.0;
        for (int k : members) {
            double dist = std::abs(dirs[k].phi - cut);
            dist = std::min(dist, 2.0 * pi - dist);
            if (best < 0 || dist < best_dist) {
                best = k;
                best_dist = dist;
            }
        }
        if (best_dist <= step / 2.0 + 1e-12) {
            const double mag =
                std::hypot(std::abs(pattern.e_theta[best]), std::abs(pattern.e_phi[best]));
            out.emplace_back(theta, realized_gain_db(mag, pattern.r));
        }
    }
    return out;
}

} // namespace planarnf
