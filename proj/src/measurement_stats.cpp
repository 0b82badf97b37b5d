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

#include "wlansim/measurement_ingest.hpp"

#include "wlansim/csv.hpp"
#include "wlansim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <tuple>

namespace wlansim
{
namespace
{

// Order-independent mean: values are sorted before summation.
double sorted_mean(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_stddev(std::vector<double> values, double mean)
{
    if (values.size() < 2)
        return 0.0;
    for (double &v : values)
        v = (v - mean) * (v - mean);
    std::sort(values.begin(), values.end());
    return std::sqrt(std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size() - 1));
}

// Signed east/north offsets of p from origin along the origin's parallel and meridian.
std::pair<double, double> local_offset(const GeoPoint &origin, const GeoPoint &p)
{
    const double east = haversine_distance(origin, {origin.latitude, p.longitude});
    const double north = haversine_distance(origin, {p.latitude, origin.longitude});
    return {p.longitude < origin.longitude ? -east : east, p.latitude < origin.latitude ? -north : north};
}

using GroupKey = std::tuple<MacAddress, int, std::int64_t, std::int64_t>;

} // namespace

std::vector<ApSummary> summarize(std::span<const MeasurementRecord> records, const SummaryOptions &options)
{
    if (records.empty())
        throw ValidationError("summarize: no records");
    if (!(options.grid_m > 0.0))
        throw ValidationError("summarize: grid size must be positive");

    GeoPoint origin;
    if (options.ap_position)
        origin = *options.ap_position;
    else
    {
        origin = records.front().pos;
        for (const auto &r : records)
        {
            origin.latitude = std::min(origin.latitude, r.pos.latitude);
            origin.longitude = std::min(origin.longitude, r.pos.longitude);
        }
    }

    struct Group
    {
        std::vector<double> rssi, lat, lon;
        std::string ssid;
        bool has_ssid = false;
    };
    std::map<GroupKey, Group> groups;
    for (const auto &r : records)
    {
        const auto [east, north] = local_offset(origin, r.pos);
        const GroupKey key{r.bssid, r.channel_id, static_cast<std::int64_t>(std::floor(east / options.grid_m)),
                           static_cast<std::int64_t>(std::floor(north / options.grid_m))};
        Group &g = groups[key];
        g.rssi.push_back(r.rssi_dbm);
        g.lat.push_back(r.pos.latitude);
        g.lon.push_back(r.pos.longitude);
        // Smallest SSID wins so the result does not depend on record order.
        if (!g.has_ssid || r.ssid < g.ssid)
            g.ssid = r.ssid;
        g.has_ssid = true;
    }

    std::vector<ApSummary> out;
    out.reserve(groups.size());
    for (auto &[key, g] : groups)
    {
        ApSummary s;
        std::tie(s.bssid, s.channel_id, s.cell_east, s.cell_north) = key;
        s.ssid = g.ssid;
        s.count = g.rssi.size();
        s.mean_rssi_dbm = sorted_mean(g.rssi);
        s.stddev_rssi_db = sample_stddev(g.rssi, s.mean_rssi_dbm);
        s.location = {sorted_mean(g.lat), sorted_mean(g.lon)};
        s.low_confidence = s.count < options.low_confidence_below;
        if (options.ap_position)
            s.distance_m = haversine_distance(*options.ap_position, s.location);
        out.push_back(std::move(s));
    }
    return out;
}

FitResult fit_path_loss(std::span<const DistanceRssi> samples, double tx_eirp_dbm)
{
    std::set<double> distinct;
    for (const auto &s : samples)
    {
        if (!(s.distance_m > 0.0) || !std::isfinite(s.distance_m) || !std::isfinite(s.rssi_dbm))
            throw ValidationError("fit_path_loss: distances must be positive and values finite");
        distinct.insert(s.distance_m);
    }
    if (distinct.size() < 2)
        throw DegenerateFitError("fit_path_loss: need at least two distinct distances");

    // loss = reference + exponent * x, x = 10 log10(d); normal equations in centered form.
    const auto n = static_cast<double>(samples.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto &s : samples)
    {
        mean_x += 10.0 * std::log10(s.distance_m);
        mean_y += tx_eirp_dbm - s.rssi_dbm;
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto &s : samples)
    {
        const double dx = 10.0 * std::log10(s.distance_m) - mean_x;
        sxx += dx * dx;
        sxy += dx * (tx_eirp_dbm - s.rssi_dbm - mean_y);
    }
    FitResult fit;
    fit.exponent = sxy / sxx;
    fit.reference_loss_db = mean_y - fit.exponent * mean_x;
    fit.sample_count = samples.size();
    double ss = 0.0;
    for (const auto &s : samples)
    {
        const double r = (tx_eirp_dbm - s.rssi_dbm) - (fit.reference_loss_db + fit.exponent * 10.0 * std::log10(s.distance_m));
        ss += r * r;
    }
    fit.residual_rms_db = std::sqrt(ss / n);
    return fit;
}

std::vector<InterferencePair> interference_report(std::span<const ApSummary> summaries, Plan plan,
                                                  const InterferenceOptions &options)
{
    using Radio = std::pair<MacAddress, int>;
    std::map<Radio, std::set<std::pair<std::int64_t, std::int64_t>>> coverage;
    for (const auto &s : summaries)
    {
        find_channel(s.channel_id, plan); // throws for channels outside the plan
        auto &cells = coverage[{s.bssid, s.channel_id}];
        if (s.mean_rssi_dbm >= options.coverage_threshold_dbm)
            cells.insert({s.cell_east, s.cell_north});
    }

    std::vector<InterferencePair> out;
    for (auto a = coverage.begin(); a != coverage.end(); ++a)
        for (auto b = std::next(a); b != coverage.end(); ++b)
        {
            InterferencePair p;
            std::tie(p.bssid_a, p.channel_a) = a->first;
            std::tie(p.bssid_b, p.channel_b) = b->first;
            p.overlap = overlap_fraction(find_channel(p.channel_a, plan), find_channel(p.channel_b, plan));
            p.regions_intersect = std::any_of(a->second.begin(), a->second.end(),
                                              [&](const auto &cell) { return b->second.count(cell) > 0; });
            p.interfering = p.overlap > 0.0 && p.regions_intersect;
            out.push_back(p);
        }
    return out;
}

void write_summaries_csv(std::ostream &out, std::span<const ApSummary> summaries)
{
    out << "bssid,ssid,channel,cell_east,cell_north,lat,lon,count,mean_rssi_dbm,stddev_rssi_db,low_confidence,"
           "distance_m\n";
    for (const auto &s : summaries)
        csv::write_row(out, {s.bssid.to_string(), s.ssid, std::to_string(s.channel_id), std::to_string(s.cell_east),
                             std::to_string(s.cell_north), csv::format(s.location.latitude),
                             csv::format(s.location.longitude), std::to_string(s.count),
                             csv::format(s.mean_rssi_dbm), csv::format(s.stddev_rssi_db),
                             s.low_confidence ? "1" : "0", s.distance_m ? csv::format(*s.distance_m) : ""});
}

void write_interference_csv(std::ostream &out, std::span<const InterferencePair> pairs)
{
    out << "bssid_a,channel_a,bssid_b,channel_b,overlap,regions_intersect,interfering\n";
    for (const auto &p : pairs)
        csv::write_row(out, {p.bssid_a.to_string(), std::to_string(p.channel_a), p.bssid_b.to_string(),
                             std::to_string(p.channel_b), csv::format(p.overlap), p.regions_intersect ? "1" : "0",
                             p.interfering ? "1" : "0"});
}

} // namespace wlansim
