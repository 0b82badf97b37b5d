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

#include "wlansim/channel_plan.hpp"

#include "wlansim/csv.hpp"
#include "wlansim/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <ostream>
#include <string>

namespace wlansim
{
namespace
{

constexpr double MHz = 1.0e6;

// 20 dBm, the ETSI ISM limit.
constexpr double ism_eirp_mw = 100.0;

constexpr std::array<Channel, 14> make_ism24()
{
    std::array<Channel, 14> plan{};
    for (int i = 0; i < 13; ++i)
        plan[i] = {i + 1, (2412.0 + 5.0 * i) * MHz, 22.0 * MHz, Band::Ism24, ism_eirp_mw};
    // Channel 14 sits 12 MHz above channel 13 rather than 5.
    plan[13] = {14, (2472.0 + 12.0) * MHz, 22.0 * MHz, Band::Ism24, ism_eirp_mw};
    return plan;
}

constexpr Channel unii(int id, double center_mhz, Band band, double eirp_mw)
{
    return {id, center_mhz * MHz, 20.0 * MHz, band, eirp_mw};
}

constexpr std::array<Channel, 14> ism24 = make_ism24();

constexpr std::array<Channel, 8> unii_a = {
    unii(36, 5180, Band::UniiA, 200), unii(40, 5200, Band::UniiA, 200),
    unii(44, 5220, Band::UniiA, 200), unii(48, 5240, Band::UniiA, 200),
    unii(52, 5260, Band::UniiA, 200), unii(56, 5280, Band::UniiA, 200),
    unii(60, 5300, Band::UniiA, 200), unii(64, 5320, Band::UniiA, 200),
};

constexpr std::array<Channel, 11> unii_b = {
    unii(100, 5500, Band::UniiB, 1000), unii(104, 5520, Band::UniiB, 1000),
    unii(108, 5540, Band::UniiB, 1000), unii(112, 5560, Band::UniiB, 1000),
    unii(116, 5580, Band::UniiB, 1000), unii(120, 5600, Band::UniiB, 1000),
    unii(124, 5620, Band::UniiB, 1000), unii(128, 5640, Band::UniiB, 1000),
    unii(132, 5660, Band::UniiB, 1000), unii(136, 5680, Band::UniiB, 1000),
    unii(140, 5700, Band::UniiB, 1000),
};

constexpr std::array<Channel, 4> unii_c = {
    unii(149, 5745, Band::UniiC, 4000),
    unii(153, 5765, Band::UniiC, 4000),
    unii(157, 5785, Band::UniiC, 4000),
    unii(161, 5805, Band::UniiC, 4000),
};

std::string normalize(std::string_view text)
{
    std::string out;
    for (char c : text)
        out += c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

Plan plan_of(Band band) noexcept
{
    return band == Band::Ism24 ? Plan::Ism24 : Plan::Unii;
}

std::string_view to_string(Band band) noexcept
{
    switch (band)
    {
    case Band::Ism24:
        return "ISM24";
    case Band::UniiA:
        return "UNII_A";
    case Band::UniiB:
        return "UNII_B";
    case Band::UniiC:
        return "UNII_C";
    }
    return "?";
}

std::string_view to_string(Plan plan) noexcept
{
    return plan == Plan::Ism24 ? "ISM24" : "UNII";
}

std::optional<Band> parse_band(std::string_view text)
{
    const std::string t = normalize(text);
    if (t == "ism24" || t == "ism" || t == "2.4")
        return Band::Ism24;
    if (t == "unii-a")
        return Band::UniiA;
    if (t == "unii-b")
        return Band::UniiB;
    if (t == "unii-c")
        return Band::UniiC;
    return std::nullopt;
}

std::optional<Plan> parse_plan(std::string_view text)
{
    const std::string t = normalize(text);
    if (t == "ism24" || t == "ism" || t == "2.4")
        return Plan::Ism24;
    if (t == "unii" || t == "5")
        return Plan::Unii;
    return std::nullopt;
}

std::span<const Channel> list_channels(Band band)
{
    switch (band)
    {
    case Band::Ism24:
        return ism24;
    case Band::UniiA:
        return unii_a;
    case Band::UniiB:
        return unii_b;
    case Band::UniiC:
        return unii_c;
    }
    return {};
}

std::vector<Channel> list_plan(Plan plan)
{
    if (plan == Plan::Ism24)
        return {ism24.begin(), ism24.end()};
    std::vector<Channel> out;
    for (Band b : {Band::UniiA, Band::UniiB, Band::UniiC})
    {
        auto chans = list_channels(b);
        out.insert(out.end(), chans.begin(), chans.end());
    }
    return out;
}

const Channel &find_channel(int id, Plan plan)
{
    auto search = [id](std::span<const Channel> chans) -> const Channel * {
        auto it = std::find_if(chans.begin(), chans.end(), [id](const Channel &c) { return c.id == id; });
        return it == chans.end() ? nullptr : &*it;
    };
    const Channel *hit = nullptr;
    if (plan == Plan::Ism24)
        hit = search(ism24);
    else
        for (Band b : {Band::UniiA, Band::UniiB, Band::UniiC})
            if (!hit)
                hit = search(list_channels(b));
    if (!hit)
        throw NotFoundError("channel " + std::to_string(id) + " is not part of the " +
                            std::string(to_string(plan)) + " plan");
    return *hit;
}

std::optional<Plan> plan_containing(int id)
{
    for (Plan p : {Plan::Ism24, Plan::Unii})
    {
        try
        {
            find_channel(id, p);
            return p;
        }
        catch (const NotFoundError &)
        {
        }
    }
    return std::nullopt;
}

double eirp_limit_of(int id, Plan plan)
{
    return find_channel(id, plan).eirp_limit_mw;
}

double overlap_fraction(const Channel &a, const Channel &b)
{
    if (plan_of(a.band) != plan_of(b.band))
        throw ValidationError("overlap_fraction: channels " + std::to_string(a.id) + " and " +
                              std::to_string(b.id) + " belong to different plans");
    const double lo = std::max(a.center_hz - a.bandwidth_hz / 2, b.center_hz - b.bandwidth_hz / 2);
    const double hi = std::min(a.center_hz + a.bandwidth_hz / 2, b.center_hz + b.bandwidth_hz / 2);
    if (hi <= lo)
        return 0.0;
    return std::min(1.0, (hi - lo) / a.bandwidth_hz);
}

void write_channels_csv(std::ostream &out, std::span<const Channel> channels)
{
    out << "id,center_hz,bandwidth_hz,band,eirp_mw\n";
    for (const Channel &c : channels)
        csv::write_row(out, {std::to_string(c.id), csv::format(c.center_hz), csv::format(c.bandwidth_hz),
                             std::string(to_string(c.band)), csv::format(c.eirp_limit_mw)});
}

} // namespace wlansim
