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

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace planarnf {

/// Speed of light in vacuum [m/s], exact.
inline constexpr double c0 = 299792458.0;

inline constexpr double pi = std::numbers::pi;

/// Free-space wave impedance [ohm], mu0 * c0 with the classical mu0 = 4pi e-7.
inline constexpr double eta0 = 4.0e-7 * pi * c0;

/// Free-space wavenumber k0 = 2 pi f / c0 [rad/m].
inline double wavenumber(double frequency_hz) {
    if (!(frequency_hz > 0.0))
        throw std::domain_error("wavenumber: frequency must be positive");
    return 2.0 * pi * frequency_hz / c0;
}

/// Free-space wavelength [m].
inline double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0))
        throw std::domain_error("wavelength: frequency must be positive");
    return c0 / frequency_hz;
}

inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

/// Field quantity (amplitude) to decibel, 20 log10 |x|.
inline double field_db(double magnitude) { return 20.0 * std::log10(magnitude); }

/// Power quantity to decibel, 10 log10 x.
inline double power_db(double power) { return 10.0 * std::log10(power); }

/// Decibel (field convention) to linear amplitude factor.
inline double db_to_field(double db) { return std::pow(10.0, db / 20.0); }

} // namespace planarnf
