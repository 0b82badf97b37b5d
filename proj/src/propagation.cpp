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

#include "wlansim/propagation.hpp"

#include "wlansim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wlansim
{

bool is_valid(const GeoPoint &p) noexcept
{
    return std::isfinite(p.latitude) && std::isfinite(p.longitude) && p.latitude >= -90.0 &&
           p.latitude <= 90.0 && p.longitude >= -180.0 && p.longitude <= 180.0;
}

GeoPoint make_geo_point(double latitude, double longitude)
{
    GeoPoint p{latitude, longitude};
    if (!is_valid(p))
        throw ValidationError("coordinates out of range: lat " + std::to_string(latitude) + ", lon " +
                              std::to_string(longitude));
    return p;
}

double haversine_distance(const GeoPoint &p, const GeoPoint &q)
{
    constexpr double deg = std::numbers::pi / 180.0;
    const double phi1 = p.latitude * deg;
    const double phi2 = q.latitude * deg;
    const double s_lat = std::sin((q.latitude - p.latitude) * deg / 2.0);
    const double s_lon = std::sin((q.longitude - p.longitude) * deg / 2.0);
    double h = s_lat * s_lat + std::cos(phi1) * std::cos(phi2) * s_lon * s_lon;
    h = std::clamp(h, 0.0, 1.0);
    return 2.0 * earth_radius_m * std::asin(std::sqrt(h));
}

double friis_path_loss(double distance_m, double frequency_hz)
{
    if (!(distance_m > 0.0) || !(frequency_hz > 0.0))
        throw std::domain_error("friis_path_loss: distance and frequency must be positive");
    static const double k = 20.0 * std::log10(4.0 * std::numbers::pi / speed_of_light);
    return 20.0 * std::log10(distance_m) + 20.0 * std::log10(frequency_hz) + k;
}

PathLossModel PathLossModel::free_space(double frequency_hz)
{
    return log_distance(frequency_hz, 2.0);
}

PathLossModel PathLossModel::log_distance(double frequency_hz, double exponent)
{
    if (!(exponent >= 1.0) || !std::isfinite(exponent))
        throw ValidationError("path loss exponent must be >= 1");
    return {friis_path_loss(1.0, frequency_hz), exponent, frequency_hz};
}

double PathLossModel::loss_db(double distance_m) const
{
    if (!(distance_m > 0.0))
        throw std::domain_error("PathLossModel::loss_db: distance must be positive");
    return reference_loss_db + 10.0 * exponent * std::log10(distance_m);
}

double dbm_to_mw(double dbm) noexcept
{
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw) noexcept
{
    return 10.0 * std::log10(mw);
}

double received_power(double eirp_dbm, double loss_db, double rx_gain_db) noexcept
{
    return eirp_dbm - loss_db + rx_gain_db;
}

double sinr(double desired_dbm, std::span<const Interferer> interferers, double noise_dbm)
{
    double denom_mw = dbm_to_mw(noise_dbm);
    for (const Interferer &i : interferers)
    {
        if (!(i.overlap >= 0.0 && i.overlap <= 1.0))
            throw ValidationError("sinr: overlap fraction must lie in [0, 1]");
        denom_mw += i.overlap * dbm_to_mw(i.power_dbm);
    }
    return mw_to_dbm(dbm_to_mw(desired_dbm) / denom_mw);
}

} // namespace wlansim
