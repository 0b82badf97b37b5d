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

#include "wlansim/throughput_model.hpp"

#include "wlansim/csv.hpp"
#include "wlansim/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wlansim
{
namespace
{

// Per-stream 20 MHz long-GI data rates of MCS 0..9, used only as ratios.
constexpr std::array<double, 10> mcs_ladder = {6.5, 13.0, 19.5, 26.0, 39.0, 52.0, 58.5, 65.0, 78.0, 260.0 / 3.0};
constexpr std::size_t last_qam64_mcs = 7;

struct TableCell
{
    Standard standard;
    int streams;
    double rate_mbps;
};

constexpr std::array<TableCell, 4> client_rates = {{
    {Standard::N80211, 1, 150.0},
    {Standard::N80211, 3, 450.0},
    {Standard::AC80211, 1, 450.0},
    {Standard::AC80211, 3, 1300.0},
}};

std::string lower(std::string_view text)
{
    std::string out;
    for (char c : text)
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::string_view to_string(Standard s) noexcept
{
    return s == Standard::N80211 ? "802.11n" : "802.11ac";
}

std::optional<Standard> parse_standard(std::string_view text)
{
    const std::string t = lower(text);
    if (t == "n" || t == "802.11n" || t == "80211n")
        return Standard::N80211;
    if (t == "ac" || t == "802.11ac" || t == "80211ac")
        return Standard::AC80211;
    return std::nullopt;
}

std::optional<Modulation> parse_modulation(std::string_view text)
{
    const std::string t = lower(text);
    if (t == "qam64" || t == "64qam" || t == "64")
        return Modulation::QAM64;
    if (t == "qam256" || t == "256qam" || t == "256")
        return Modulation::QAM256;
    return std::nullopt;
}

PhyConfig default_phy_config(Standard standard, int spatial_streams)
{
    if (standard == Standard::N80211)
        return {standard, 40, spatial_streams, Modulation::QAM64};
    return {standard, 80, spatial_streams, Modulation::QAM256};
}

void validate(const PhyConfig &cfg)
{
    const int w = cfg.channel_width_mhz;
    if (w != 20 && w != 40 && w != 80 && w != 160)
        throw ValidationError("channel width must be 20, 40, 80 or 160 MHz (got " + std::to_string(w) + ")");
    if (cfg.standard == Standard::N80211)
    {
        if (w > 40)
            throw ValidationError("802.11n supports 20 and 40 MHz channel widths only (got " + std::to_string(w) +
                                  " MHz)");
        if (cfg.modulation == Modulation::QAM256)
            throw ValidationError("802.11n tops out at 64-QAM; 256-QAM requires 802.11ac");
        if (cfg.spatial_streams < 1 || cfg.spatial_streams > 4)
            throw ValidationError("802.11n supports 1 to 4 spatial streams (got " +
                                  std::to_string(cfg.spatial_streams) + ")");
    }
    else if (cfg.spatial_streams < 1 || cfg.spatial_streams > 8)
        throw ValidationError("802.11ac supports 1 to 8 spatial streams (got " +
                              std::to_string(cfg.spatial_streams) + ")");
}

double max_client_rate(Standard standard, int spatial_streams)
{
    for (const TableCell &c : client_rates)
        if (c.standard == standard && c.streams == spatial_streams)
            return c.rate_mbps;
    throw NotFoundError("no maximum client data rate tabulated for " + std::string(to_string(standard)) + " with " +
                        std::to_string(spatial_streams) + " spatial stream(s)");
}

int bits_per_symbol(Modulation modulation) noexcept
{
    return modulation == Modulation::QAM64 ? 6 : 8;
}

double noise_floor_dbm(int channel_width_mhz)
{
    if (channel_width_mhz <= 0)
        throw ValidationError("channel width must be positive");
    return -90.0 + 3.0 * std::log2(channel_width_mhz / 20.0);
}

RateStaircase::RateStaircase(std::vector<RateStep> steps) : steps_(std::move(steps))
{
    for (std::size_t i = 0; i < steps_.size(); ++i)
    {
        if (!std::isfinite(steps_[i].min_snr_db) || !(steps_[i].rate_mbps >= 0.0))
            throw ValidationError("rate staircase: thresholds must be finite and rates non-negative");
        if (i > 0 && !(steps_[i].min_snr_db > steps_[i - 1].min_snr_db &&
                       steps_[i].rate_mbps >= steps_[i - 1].rate_mbps))
            throw ValidationError("rate staircase: thresholds must increase and rates must not decrease");
    }
}

double RateStaircase::rate_for(double snr_db) const noexcept
{
    double rate = 0.0;
    for (const RateStep &s : steps_)
    {
        if (snr_db < s.min_snr_db)
            break;
        rate = s.rate_mbps;
    }
    return rate;
}

RateStaircase default_staircase(const PhyConfig &cfg)
{
    validate(cfg);
    const std::size_t top = cfg.standard == Standard::N80211 ? last_qam64_mcs : mcs_ladder.size() - 1;
    const std::size_t last = cfg.modulation == Modulation::QAM64 ? std::min(top, last_qam64_mcs) : top;
    const double scale = max_client_rate(cfg.standard, cfg.spatial_streams) / mcs_ladder[top];
    std::vector<RateStep> steps;
    for (std::size_t i = 0; i <= last; ++i)
        steps.push_back({5.0 + 3.0 * static_cast<double>(i), mcs_ladder[i] * scale});
    // Pin the top rung so the cap is hit exactly, free of rounding.
    if (last == top)
        steps.back().rate_mbps = max_client_rate(cfg.standard, cfg.spatial_streams);
    return RateStaircase(std::move(steps));
}

std::vector<CurvePoint> throughput_vs_distance(const PhyConfig &cfg, const PathLossModel &model,
                                               const LinkBudget &link, std::span<const double> distances,
                                               const RateStaircase &staircase)
{
    validate(cfg);
    if (distances.empty())
        throw std::domain_error("throughput_vs_distance: empty distance list");
    for (std::size_t i = 0; i < distances.size(); ++i)
    {
        if (!(distances[i] > 0.0))
            throw ValidationError("throughput_vs_distance: distances must be positive");
        if (i > 0 && distances[i] < distances[i - 1])
            throw ValidationError("throughput_vs_distance: distances must be sorted ascending");
    }
    const double cap = max_client_rate(cfg.standard, cfg.spatial_streams);
    const double noise = link.noise_floor_dbm.value_or(noise_floor_dbm(cfg.channel_width_mhz));

    std::vector<CurvePoint> curve;
    curve.reserve(distances.size());
    for (double d : distances)
    {
        const double rx = received_power(link.tx_eirp_dbm, model.loss_db(d), link.rx_gain_db);
        const double snr = rx - noise;
        CurvePoint p{d, std::min(cap, staircase.rate_for(snr)), snr, cfg.channel_width_mhz};
        if (link.dynamic_bandwidth)
            for (int w = cfg.channel_width_mhz / 2; w >= 20; w /= 2)
            {
                const double ratio = static_cast<double>(w) / cfg.channel_width_mhz;
                const double narrow_snr = snr + noise_floor_dbm(cfg.channel_width_mhz) - noise_floor_dbm(w);
                const double rate = std::min(cap, ratio * staircase.rate_for(narrow_snr));
                if (rate > p.rate_mbps)
                {
                    p.rate_mbps = rate;
                    p.width_mhz = w;
                }
            }
        curve.push_back(p);
    }
    return curve;
}

double contention_degradation(double rate_mbps, std::span<const CoChannelNeighbor> neighbors)
{
    if (!(rate_mbps >= 0.0))
        throw ValidationError("contention_degradation: rate must be non-negative");
    double busy = 0.0;
    for (const CoChannelNeighbor &n : neighbors)
    {
        if (!(n.overlap >= 0.0 && n.overlap <= 1.0) || !(n.activity >= 0.0 && n.activity <= 1.0))
            throw ValidationError("contention_degradation: overlap and activity must lie in [0, 1]");
        busy += n.overlap * n.activity;
    }
    return rate_mbps * std::max(0.0, 1.0 - busy);
}

void write_curve_csv(std::ostream &out, std::span<const CurvePoint> curve)
{
    out << "distance_m,rate_mbps,snr_db\n";
    for (const CurvePoint &p : curve)
        csv::write_row(out, {csv::format(p.distance_m), csv::format(p.rate_mbps), csv::format(p.snr_db)});
}

} // namespace wlansim
