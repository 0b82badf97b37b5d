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

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace wlansim
{

enum class Band
{
    Ism24,
    UniiA,
    UniiB,
    UniiC,
};

// A plan groups bands whose channels may be compared spectrally.
enum class Plan
{
    Ism24,
    Unii,
};

struct Channel
{
    int id = 0;
    double center_hz = 0.0;
    double bandwidth_hz = 0.0;
    Band band = Band::Ism24;
    double eirp_limit_mw = 0.0;
};

Plan plan_of(Band band) noexcept;
std::string_view to_string(Band band) noexcept;
std::string_view to_string(Plan plan) noexcept;

// Accepts "ism24", "unii", "unii-a", "unii_a", ... (case-insensitive).
std::optional<Band> parse_band(std::string_view text);
std::optional<Plan> parse_plan(std::string_view text);

// Static plan for one band, sorted by id.
std::span<const Channel> list_channels(Band band);

// All bands of a plan concatenated, sorted by id.
std::vector<Channel> list_plan(Plan plan);

// Throws NotFoundError if the id is not in the plan.
const Channel &find_channel(int id, Plan plan);
std::optional<Plan> plan_containing(int id);

double eirp_limit_of(int id, Plan plan);

/// Spectral overlap of two rectangular channel masks, normalized by the
/// bandwidth of `a`. Channels from different plans raise ValidationError.
double overlap_fraction(const Channel &a, const Channel &b);

// CSV: id,center_hz,bandwidth_hz,band,eirp_mw
void write_channels_csv(std::ostream &out, std::span<const Channel> channels);

} // namespace wlansim
