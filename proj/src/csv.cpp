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

#include "wlansim/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace wlansim::csv
{

std::string format(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    if (value == 0.0)
        return "0"; // folds -0
    char buf[64];
    const double mag = std::abs(value);
    const auto fmt = mag >= 1e-4 && mag < 1e15 ? std::chars_format::fixed : std::chars_format::general;
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, fmt);
    return std::string(buf, ptr);
}

void write_row(std::ostream &out, const std::vector<std::string> &fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
    {
        if (i)
            out << ',';
        const std::string &f = fields[i];
        if (f.find_first_of(",\"\r\n") == std::string::npos)
        {
            out << f;
            continue;
        }
        out << '"';
        for (char c : f)
        {
            if (c == '"')
                out << '"';
            out << c;
        }
        out << '"';
    }
    out << '\n';
}

bool split_line(std::string_view line, std::vector<std::string> &fields)
{
    fields.clear();
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        char c = line[i];
        if (quoted)
        {
            if (c == '"')
            {
                if (i + 1 < line.size() && line[i + 1] == '"')
                {
                    current += '"';
                    ++i;
                }
                else
                    quoted = false;
            }
            else
                current += c;
        }
        else if (c == '"')
            quoted = true;
        else if (c == ',')
        {
            fields.push_back(std::move(current));
            current.clear();
        }
        else if (c != '\r')
            current += c;
    }
    fields.push_back(std::move(current));
    return !quoted;
}

} // namespace wlansim::csv
