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

#include "wlansim/propagation.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace wlansim
{

enum class Standard
{
    N80211,
    AC80211,
};

enum class Modulation
{
    QAM64,
    QAM256,
};

struct PhyConfig
{
    Standard standard = Standard::AC80211;
    int channel_width_mhz = 80;
    int spatial_streams = 1;
    Modulation modulation = Modulation::QAM256;
};

std::string_view to_string(Standard s) noexcept;
std::optional<Standard> parse_standard(std::string_view text);
std::optional<Modulation> parse_modulation(std::string_view text);

// Widest/most capable configuration the standard allows for the stream count.
PhyConfig default_phy_config(Standard standard, int spatial_streams);

// Throws ValidationError naming the violated 802.11n/ac feature limit.
void validate(const PhyConfig &cfg);

// Single- and three-stream maximum client rates of 802.11n and 802.11ac.
// Other combinations throw NotFoundError.
double max_client_rate(Standard standard, int spatial_streams);

int bits_per_symbol(Modulation modulation) noexcept;

// Noise floor: -90 dBm at 20 MHz, +3 dB per doubling of width.
double noise_floor_dbm(int channel_width_mhz);

struct RateStep
{
    double min_snr_db = 0.0;
    double rate_mbps = 0.0;
};

/// Monotone SNR -> rate table. Below the first threshold the link is in outage.
class RateStaircase
{
  public:
    RateStaircase() = default;
    // Steps must have strictly increasing thresholds and non-decreasing rates.
    explicit RateStaircase(std::vector<RateStep> steps);

    double rate_for(double snr_db) const noexcept;
    std::span<const RateStep> steps() const noexcept { return steps_; }

  private:
    std::vector<RateStep> steps_;
};

/// Default table: the MCS ladder of the standard (MCS 0-7 for 802.11n,
/// 0-9 for 802.11ac, truncated at MCS 7 when the configuration is limited to
/// 64-QAM), with rates scaled so the standard's top MCS equals the maximum
/// client rate and thresholds starting at 5 dB and spaced 3 dB apart.
RateStaircase default_staircase(const PhyConfig &cfg);

struct CurvePoint
{
    double distance_m = 0.0;
    double rate_mbps = 0.0;
    double snr_db = 0.0; // at the configured channel width
    int width_mhz = 0;   // width the rate was obtained on
};

struct LinkBudget
{
    double tx_eirp_dbm = 20.0;
    double rx_gain_db = 0.0;
    std::optional<double> noise_floor_dbm; // at the configured width; default scales with it
    // Also try each halved width down to 20 MHz (3 dB less noise, proportionally
    // lower rate) and keep the best, as 802.11n/ac stations do at the cell edge.
    bool dynamic_bandwidth = true;
};

std::vector<CurvePoint> throughput_vs_distance(const PhyConfig &cfg, const PathLossModel &model,
                                               const LinkBudget &link, std::span<const double> distances,
                                               const RateStaircase &staircase);

struct CoChannelNeighbor
{
    double overlap = 0.0;  // [0, 1]
    double activity = 0.0; // [0, 1], share of airtime
};

// rate * max(0, 1 - sum(overlap * activity))
double contention_degradation(double rate_mbps, std::span<const CoChannelNeighbor> neighbors);

// CSV: distance_m,rate_mbps,snr_db
void write_curve_csv(std::ostream &out, std::span<const CurvePoint> curve);

} // namespace wlansim
