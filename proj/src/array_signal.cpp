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

#include "wlansim/array_signal.hpp"

#include <sstream>

namespace wlansim
{

std::vector<std::string> validate(const Scenario &s)
{
    std::vector<std::string> issues;
    auto positive = [&](double v, const char *field) {
        if (!(std::isfinite(v) && v > 0.0))
            issues.push_back(std::string(field) + ": must be a positive finite number");
    };
    positive(s.carrier_hz, "carrier_hz");
    positive(s.sampling_hz, "sampling_hz");
    positive(s.array.spacing, "spacing_wavelengths");
    if (s.array.num_elements < 1)
        issues.push_back("num_elements: must be >= 1");
    if (!(std::isfinite(s.step_size) && s.step_size >= 0.0))
        issues.push_back("step_size: must be a finite number >= 0");
    if (s.iterations < 1)
        issues.push_back("iterations: must be >= 1");
    if (!(std::isfinite(s.noise_power) && s.noise_power >= 0.0))
        issues.push_back("noise_power: must be a finite number >= 0");

    bool has_desired = false;
    for (std::size_t i = 0; i < s.sources.size(); ++i)
    {
        const Source &src = s.sources[i];
        const std::string where = "sources[" + std::to_string(i) + "].";
        has_desired |= src.role == SourceRole::Desired;
        if (!(std::isfinite(src.angle_rad) && std::abs(src.angle_rad) < std::numbers::pi / 2))
            issues.push_back(where + "angle_rad: must satisfy |angle| < pi/2");
        if (!(std::isfinite(src.amplitude) && src.amplitude >= 0.0))
            issues.push_back(where + "amplitude: must be a finite number >= 0");
        if (!std::isfinite(src.normalized_freq))
            issues.push_back(where + "normalized_freq: must be finite");
    }
    if (!has_desired)
        issues.push_back("sources: at least one source must have role \"desired\"");
    return issues;
}

void require_valid(const Scenario &scenario)
{
    const auto issues = validate(scenario);
    if (issues.empty())
        return;
    std::ostringstream msg;
    msg << "invalid scenario:";
    for (const auto &i : issues)
        msg << "\n  " << i;
    throw ValidationError(msg.str());
}

Scenario default_scenario()
{
    Scenario s;
    s.carrier_hz = 5.0e9;
    s.sampling_hz = 2.0 * s.carrier_hz;
    s.array = {8, 0.5};
    s.step_size = 0.32;
    s.iterations = 5000;
    s.seed = 20130901;
    s.noise_power = 0.01;
    // Tones sit on bins 64 and 192 of a 1024-point transform.
    s.sources = {
        {SourceRole::Desired, std::numbers::pi / 4, WaveformKind::Sinusoid, 0.0625, 1.0},
        {SourceRole::Interferer, -std::numbers::pi / 4, WaveformKind::Sinusoid, 0.1875, 1.0},
    };
    return s;
}

double expected_snapshot_energy(const Scenario &scenario)
{
    double power = scenario.noise_power;
    for (const Source &src : scenario.sources)
        power += src.amplitude * src.amplitude;
    return scenario.array.num_elements * power;
}

std::vector<double> angle_grid(double lo, double hi, std::size_t count)
{
    std::vector<double> grid(count);
    if (count == 1)
    {
        grid[0] = lo;
        return grid;
    }
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return grid;
}

} // namespace wlansim
