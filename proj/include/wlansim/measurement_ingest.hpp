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

#include "wlansim/channel_plan.hpp"
#include "wlansim/propagation.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wlansim
{

struct MacAddress
{
    std::array<std::uint8_t, 6> octets{};

    // Six hex octets separated by ':' or '-'.
    static std::optional<MacAddress> parse(std::string_view text);
    std::string to_string() const; // lower-case, ':' separated

    auto operator<=>(const MacAddress &) const = default;
};

inline constexpr double min_rssi_dbm = -120.0;
inline constexpr double max_rssi_dbm = 0.0;

struct MeasurementRecord
{
    std::string t; // timestamp as logged
    MacAddress bssid;
    std::string ssid;
    int channel_id = 0;
    double rssi_dbm = 0.0;
    GeoPoint pos;
};

enum class LogFormat
{
    Csv,           // t,bssid,ssid,channel,rssi_dbm,lat,lon
    KmlPlacemarks, // Point placemarks, other fields in ExtendedData
};

std::optional<LogFormat> parse_log_format(std::string_view text);

struct ParseIssue
{
    std::size_t line = 0; // 1-based; for KML the line of the opening <Placemark>
    std::string message;
};

struct ParseResult
{
    std::vector<MeasurementRecord> records;
    std::vector<ParseIssue> issues;
};

/// Best-effort single pass over a survey log. Malformed entries are reported
/// and skipped; valid ones are kept in input order. Throws IoError on an
/// unreadable stream and EmptyInputError when nothing valid was found.
ParseResult parse_log(std::istream &in, LogFormat format);
ParseResult parse_log_file(const std::filesystem::path &path, LogFormat format);

// Writes records in the CSV log layout, header included.
void write_log_csv(std::ostream &out, std::span<const MeasurementRecord> records);

struct SummaryOptions
{
    std::optional<GeoPoint> ap_position;
    double grid_m = 1.0;
    std::size_t low_confidence_below = 5;
};

/// One (AP, location cell) group. Cells are grid_m squares in local east/north
/// coordinates around the AP position, or around the south-west corner of the
/// survey when no AP position is given.
struct ApSummary
{
    MacAddress bssid;
    std::string ssid;
    int channel_id = 0;
    std::int64_t cell_east = 0;
    std::int64_t cell_north = 0;
    GeoPoint location; // mean position of the group's samples
    std::size_t count = 0;
    double mean_rssi_dbm = 0.0;
    double stddev_rssi_db = 0.0; // sample standard deviation, 0 for a single sample
    bool low_confidence = false;
    std::optional<double> distance_m; // to ap_position, when given
};

std::vector<ApSummary> summarize(std::span<const MeasurementRecord> records, const SummaryOptions &options = {});

struct DistanceRssi
{
    double distance_m = 0.0;
    double rssi_dbm = 0.0;
};

struct FitResult
{
    double exponent = 0.0;
    double reference_loss_db = 0.0; // at 1 m
    double residual_rms_db = 0.0;
    std::size_t sample_count = 0;
};

/// Ordinary least squares of (tx_eirp - rssi) on 10 log10(d).
/// Throws DegenerateFitError with fewer than two distinct distances.
FitResult fit_path_loss(std::span<const DistanceRssi> samples, double tx_eirp_dbm);

struct InterferencePair
{
    MacAddress bssid_a;
    int channel_a = 0;
    MacAddress bssid_b;
    int channel_b = 0;
    double overlap = 0.0;
    bool regions_intersect = false; // some cell heard both above the coverage threshold
    bool interfering = false;       // overlap > 0 and regions intersect
};

struct InterferenceOptions
{
    double coverage_threshold_dbm = -80.0;
};

// Every pair of distinct (bssid, channel) radios found in the summaries.
// All channels must belong to `plan`.
std::vector<InterferencePair> interference_report(std::span<const ApSummary> summaries, Plan plan,
                                                  const InterferenceOptions &options = {});

void write_summaries_csv(std::ostream &out, std::span<const ApSummary> summaries);
void write_interference_csv(std::ostream &out, std::span<const InterferencePair> pairs);

} // namespace wlansim
