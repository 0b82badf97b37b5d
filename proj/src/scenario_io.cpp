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

#include "wlansim/scenario_io.hpp"

#include "wlansim/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace wlansim
{
namespace
{

using nlohmann::json;

class FieldReader
{
  public:
    explicit FieldReader(std::vector<std::string> &issues) : issues_(issues) {}

    bool number(const json &obj, const std::string &path, const char *key, double &out, bool required = true)
    {
        auto it = obj.find(key);
        if (it == obj.end())
        {
            if (required)
                issues_.push_back(path + key + ": missing");
            return false;
        }
        if (!it->is_number())
        {
            issues_.push_back(path + key + ": expected a number");
            return false;
        }
        out = it->get<double>();
        return true;
    }

    template <typename Int>
    bool integer(const json &obj, const std::string &path, const char *key, Int &out)
    {
        auto it = obj.find(key);
        if (it == obj.end())
        {
            issues_.push_back(path + key + ": missing");
            return false;
        }
        if (it->is_number_unsigned())
            out = static_cast<Int>(it->get<std::uint64_t>());
        else if (it->is_number_integer())
        {
            const auto v = it->get<std::int64_t>();
            if (std::is_unsigned_v<Int> && v < 0)
            {
                issues_.push_back(path + key + ": must be non-negative");
                return false;
            }
            out = static_cast<Int>(v);
        }
        else
        {
            issues_.push_back(path + key + ": expected an integer");
            return false;
        }
        return true;
    }

    bool text(const json &obj, const std::string &path, const char *key, std::string &out)
    {
        auto it = obj.find(key);
        if (it == obj.end())
        {
            issues_.push_back(path + key + ": missing");
            return false;
        }
        if (!it->is_string())
        {
            issues_.push_back(path + key + ": expected a string");
            return false;
        }
        out = it->get<std::string>();
        return true;
    }

    void unknown_keys(const json &obj, const std::string &path, const std::set<std::string> &known)
    {
        for (auto it = obj.begin(); it != obj.end(); ++it)
            if (!known.count(it.key()))
                issues_.push_back(path + it.key() + ": unknown field");
    }

  private:
    std::vector<std::string> &issues_;
};

} // namespace

Scenario parse_scenario_json(std::string_view text)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error &e)
    {
        throw ValidationError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("scenario: top level must be a JSON object");

    std::vector<std::string> issues;
    FieldReader read(issues);
    Scenario s;
    read.unknown_keys(doc, "",
                      {"carrier_hz", "sampling_hz", "num_elements", "spacing_wavelengths", "step_size", "iterations",
                       "seed", "noise_power", "sources"});
    read.number(doc, "", "carrier_hz", s.carrier_hz);
    if (!read.number(doc, "", "sampling_hz", s.sampling_hz, false))
        s.sampling_hz = 2.0 * s.carrier_hz;
    read.integer(doc, "", "num_elements", s.array.num_elements);
    read.number(doc, "", "spacing_wavelengths", s.array.spacing);
    read.number(doc, "", "step_size", s.step_size);
    read.integer(doc, "", "iterations", s.iterations);
    read.integer(doc, "", "seed", s.seed);
    read.number(doc, "", "noise_power", s.noise_power);

    auto sources = doc.find("sources");
    if (sources == doc.end())
        issues.push_back("sources: missing");
    else if (!sources->is_array())
        issues.push_back("sources: expected an array");
    else
        for (std::size_t i = 0; i < sources->size(); ++i)
        {
            const json &js = (*sources)[i];
            const std::string path = "sources[" + std::to_string(i) + "].";
            if (!js.is_object())
            {
                issues.push_back(path.substr(0, path.size() - 1) + ": expected an object");
                continue;
            }
            read.unknown_keys(js, path, {"role", "angle_rad", "waveform", "normalized_freq", "amplitude"});
            Source src;
            std::string role, waveform;
            if (read.text(js, path, "role", role))
            {
                if (role == "desired")
                    src.role = SourceRole::Desired;
                else if (role == "interferer")
                    src.role = SourceRole::Interferer;
                else
                    issues.push_back(path + "role: expected \"desired\" or \"interferer\"");
            }
            read.number(js, path, "angle_rad", src.angle_rad);
            if (read.text(js, path, "waveform", waveform))
            {
                if (waveform == "sinusoid")
                    src.waveform = WaveformKind::Sinusoid;
                else if (waveform == "random_symbols")
                    src.waveform = WaveformKind::RandomSymbols;
                else
                    issues.push_back(path + "waveform: expected \"sinusoid\" or \"random_symbols\"");
            }
            read.number(js, path, "normalized_freq", src.normalized_freq, src.waveform == WaveformKind::Sinusoid);
            read.number(js, path, "amplitude", src.amplitude);
            s.sources.push_back(src);
        }

    if (issues.empty())
        issues = validate(s);
    if (!issues.empty())
    {
        std::ostringstream msg;
        msg << "invalid scenario:";
        for (const auto &i : issues)
            msg << "\n  " << i;
        throw ValidationError(msg.str());
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open())
        throw IoError("cannot open scenario file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_json(buf.str());
}

std::string to_json(const Scenario &s)
{
    json doc = {
        {"carrier_hz", s.carrier_hz},
        {"sampling_hz", s.sampling_hz},
        {"num_elements", s.array.num_elements},
        {"spacing_wavelengths", s.array.spacing},
        {"step_size", s.step_size},
        {"iterations", s.iterations},
        {"seed", s.seed},
        {"noise_power", s.noise_power},
    };
    json sources = json::array();
    for (const Source &src : s.sources)
        sources.push_back({
            {"role", src.role == SourceRole::Desired ? "desired" : "interferer"},
            {"angle_rad", src.angle_rad},
            {"waveform", src.waveform == WaveformKind::Sinusoid ? "sinusoid" : "random_symbols"},
            {"normalized_freq", src.normalized_freq},
            {"amplitude", src.amplitude},
        });
    doc["sources"] = std::move(sources);
    return doc.dump(2) + "\n";
}

} // namespace wlansim
