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

#include <filesystem>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wlansim
{

inline constexpr std::string_view tool_version = "0.1.0";

std::string sha256_hex(std::string_view bytes);

// Throws IoError when the file cannot be read.
std::string sha256_file(const std::filesystem::path &path);

struct ManifestOutput
{
    std::string path; // relative to the output directory
    std::string sha256;
};

struct RunManifest
{
    std::string tool_version{wlansim::tool_version};
    std::string command;
    std::string input_path;
    std::string input_sha256;
    std::optional<std::uint64_t> seed;
    std::string timestamp; // UTC, ISO 8601
    std::vector<ManifestOutput> outputs;
};

/// UTC timestamp of the run. Honors SOURCE_DATE_EPOCH so reruns can be made
/// byte-identical end to end.
std::string run_timestamp();

// Digests every listed output relative to `dir` and writes dir/manifest.json.
void write_manifest(const std::filesystem::path &dir, RunManifest manifest);

} // namespace wlansim
