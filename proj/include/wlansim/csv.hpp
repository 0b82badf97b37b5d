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
#include <string>
#include <string_view>
#include <vector>

namespace wlansim::csv
{

// Shortest round-trip decimal form; locale independent, '.' separator.
std::string format(double value);

// Writes one row, quoting fields that contain separators or quotes.
void write_row(std::ostream &out, const std::vector<std::string> &fields);

// Splits one CSV line. Double-quoted fields may contain commas and "" escapes.
// Returns false on an unterminated quote.
bool split_line(std::string_view line, std::vector<std::string> &fields);

} // namespace wlansim::csv
