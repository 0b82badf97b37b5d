// SPDX-License-Identifier: Apache-2.0
//
// wlansim: WLAN coverage, interference and adaptive beamforming simulator
// Copyright (C) 2026 The wlansim authors
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
// ------------------------------------------------------------------------

#pragma once

#include <span>

namespace wlansim
{

inline constexpr double speed_of_light = 299'792'458.0; // m/s
inline constexpr double earth_radius_m = 6'371'000.0;

struct GeoPoint
{
    double latitude = 0.0;  // degrees, [-90, 90]
    double longitude = 0.0; // degrees, [-180, 180]
};

bool is_valid(const GeoPoint &p) noexcept;

// Throws ValidationError when out of range.
GeoPoint make_geo_point(double latitude, double longitude);

// Great-circle distance on a sphere of radius earth_radius_m.
double haversine_distance(const GeoPoint &p, const GeoPoint &q);

// Free-space loss in dB. Throws std::domain_error for d <= 0 or f <= 0.
double friis_path_loss(double distance_m, double frequency_hz);

// Log-distance model: loss(d) = reference_loss_db + 10 * exponent * log10(d / 1 m).
// With exponent 2 and the Friis 1 m loss it reproduces free space exactly.
struct PathLossModel
{
    double reference_loss_db = 0.0;
    double exponent = 2.0;
    double frequency_hz = 0.0;

    static PathLossModel free_space(double frequency_hz);
    static PathLossModel log_distance(double frequency_hz, double exponent);

    double loss_db(double distance_m) const;
};

double dbm_to_mw(double dbm) noexcept;
double mw_to_dbm(double mw) noexcept;

// eirp - loss + rx_gain
double received_power(double eirp_dbm, double loss_db, double rx_gain_db = 0.0) noexcept;

struct Interferer
{
    double power_dbm = 0.0;
    double overlap = 1.0; // [0, 1]
};

// Desired power over noise plus overlap-weighted interference, summed in mW.
double sinr(double desired_dbm, std::span<const Interferer> interferers, double noise_dbm);

} // namespace wlansim
