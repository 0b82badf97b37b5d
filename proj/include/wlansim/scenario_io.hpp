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

#include "wlansim/array_signal.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace wlansim
{

/// Scenario file (JSON):
///   carrier_hz, num_elements, spacing_wavelengths, step_size, iterations,
///   seed, noise_power, optional sampling_hz (defaults to 2 * carrier_hz),
///   sources: [{role: "desired"|"interferer", angle_rad,
///              waveform: "sinusoid"|"random_symbols", normalized_freq, amplitude}]
/// Throws ValidationError listing every offending field.
Scenario parse_scenario_json(std::string_view text);

// Throws IoError when the file cannot be read.
Scenario load_scenario(const std::filesystem::path &path);

std::string to_json(const Scenario &scenario);

} // namespace wlansim
