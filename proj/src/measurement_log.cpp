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
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace wlansim
{
namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s)
{
    std::string out;
    for (char c : s)
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// from_chars rejects a leading '+'; accept it so "+10" fails on range, not syntax.
std::optional<double> to_double(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::optional<int> to_int(std::string_view s)
{
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

struct RawFields
{
    std::string t, bssid, ssid, channel, rssi, lat, lon;
};

// Validates one entry; returns an empty string and fills `rec` on success.
std::string build_record(const RawFields &f, MeasurementRecord &rec)
{
    rec.t = std::string(trim(f.t));
    if (rec.t.empty())
        return "missing timestamp";

    auto mac = MacAddress::parse(trim(f.bssid));
    if (!mac)
        return "invalid bssid '" + f.bssid + "'";
    rec.bssid = *mac;
    rec.ssid = f.ssid;

    auto ch = to_int(f.channel);
    if (!ch)
        return "invalid channel '" + f.channel + "'";
    if (!plan_containing(*ch))
        return "channel " + std::to_string(*ch) + " is not in a known plan";
    rec.channel_id = *ch;

    auto rssi = to_double(f.rssi);
    if (!rssi)
        return "invalid rssi_dbm '" + f.rssi + "'";
    if (*rssi < min_rssi_dbm || *rssi > max_rssi_dbm)
        return "rssi_dbm " + std::string(trim(f.rssi)) + " outside [-120, 0] dBm (range violation)";
    rec.rssi_dbm = *rssi;

    auto lat = to_double(f.lat);
    auto lon = to_double(f.lon);
    if (!lat || !lon)
        return "invalid coordinates '" + f.lat + "', '" + f.lon + "'";
    rec.pos = {*lat, *lon};
    if (!is_valid(rec.pos))
        return "coordinates out of range (range violation)";
    return {};
}

void parse_csv(std::istream &in, ParseResult &out)
{
    std::string line;
    std::vector<std::string> fields;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;
        if (!csv::split_line(line, fields))
        {
            out.issues.push_back({line_no, "unterminated quoted field"});
            continue;
        }
        if (!seen_content)
        {
            seen_content = true;
            if (lower(trim(fields.front())) == "t")
                continue; // header
        }
        if (fields.size() != 7)
        {
            out.issues.push_back({line_no, "expected 7 fields, got " + std::to_string(fields.size())});
            continue;
        }
        RawFields raw{fields[0], fields[1], fields[2], fields[3], fields[4], fields[5], fields[6]};
        MeasurementRecord rec;
        if (auto err = build_record(raw, rec); !err.empty())
            out.issues.push_back({line_no, std::move(err)});
        else
            out.records.push_back(std::move(rec));
    }
}

std::string decode_entities(std::string_view s)
{
    static const std::pair<std::string_view, char> entities[] = {
        {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&apos;", '\''}};
    std::string out;
    for (std::size_t i = 0; i < s.size();)
    {
        bool matched = false;
        if (s[i] == '&')
            for (auto [name, ch] : entities)
                if (s.substr(i, name.size()) == name)
                {
                    out += ch;
                    i += name.size();
                    matched = true;
                    break;
                }
        if (!matched)
            out += s[i++];
    }
    return out;
}

// Text between <tag ...> and </tag> starting the search at `from`.
std::optional<std::string_view> element_text(std::string_view doc, std::string_view tag, std::size_t from = 0)
{
    const std::string open = "<" + std::string(tag);
    std::size_t pos = from;
    while ((pos = doc.find(open, pos)) != std::string_view::npos)
    {
        const std::size_t after = pos + open.size();
        if (after < doc.size() && (doc[after] == '>' || std::isspace(static_cast<unsigned char>(doc[after]))))
            break;
        pos = after;
    }
    if (pos == std::string_view::npos)
        return std::nullopt;
    const std::size_t start = doc.find('>', pos);
    if (start == std::string_view::npos)
        return std::nullopt;
    const std::size_t end = doc.find("</" + std::string(tag) + ">", start);
    if (end == std::string_view::npos)
        return std::nullopt;
    return doc.substr(start + 1, end - start - 1);
}

std::string attribute(std::string_view tag_text, std::string_view name)
{
    const std::string key = std::string(name) + "=";
    const std::size_t pos = tag_text.find(key);
    if (pos == std::string_view::npos || pos + key.size() >= tag_text.size())
        return {};
    const char quote = tag_text[pos + key.size()];
    if (quote != '"' && quote != '\'')
        return {};
    const std::size_t end = tag_text.find(quote, pos + key.size() + 1);
    if (end == std::string_view::npos)
        return {};
    return decode_entities(tag_text.substr(pos + key.size() + 1, end - pos - key.size() - 1));
}

// Collects <Data name="k"><value>v</value></Data> and <SimpleData name="k">v</SimpleData>.
std::map<std::string, std::string> extended_data(std::string_view block)
{
    std::map<std::string, std::string> fields;
    for (std::string_view tag : {std::string_view("Data"), std::string_view("SimpleData")})
    {
        const std::string open = "<" + std::string(tag) + " ";
        std::size_t pos = 0;
        while ((pos = block.find(open, pos)) != std::string_view::npos)
        {
            const std::size_t head_end = block.find('>', pos);
            if (head_end == std::string_view::npos)
                break;
            const std::string key = lower(attribute(block.substr(pos, head_end - pos), "name"));
            const std::string close = "</" + std::string(tag) + ">";
            const std::size_t end = block.find(close, head_end);
            if (end == std::string_view::npos)
                break;
            std::string_view body = block.substr(head_end + 1, end - head_end - 1);
            if (tag == "Data")
                body = element_text(body, "value").value_or(std::string_view{});
            if (!key.empty())
                fields[key] = decode_entities(trim(body));
            pos = end + close.size();
        }
    }
    return fields;
}

std::string pick(const std::map<std::string, std::string> &fields, std::initializer_list<const char *> names)
{
    for (const char *n : names)
        if (auto it = fields.find(n); it != fields.end())
            return it->second;
    return {};
}

void parse_kml(std::istream &in, ParseResult &out)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string doc = buffer.str();
    const std::string_view view(doc);

    std::size_t pos = 0;
    while (true)
    {
        const auto open = element_text(view, "Placemark", pos);
        if (!open)
            break;
        const std::size_t start = static_cast<std::size_t>(open->data() - view.data());
        const std::size_t tag_pos = view.rfind("<Placemark", start);
        const std::size_t line_no = 1 + static_cast<std::size_t>(std::count(view.begin(), view.begin() + tag_pos, '\n'));
        pos = start + open->size();

        const std::string_view block = *open;
        const auto fields = extended_data(block);
        RawFields raw;
        raw.t = pick(fields, {"t", "time", "timestamp"});
        if (raw.t.empty())
            if (auto when = element_text(block, "when"))
                raw.t = decode_entities(trim(*when));
        raw.bssid = pick(fields, {"bssid", "mac"});
        raw.ssid = pick(fields, {"ssid"});
        raw.channel = pick(fields, {"channel"});
        raw.rssi = pick(fields, {"rssi_dbm", "rssi", "signal"});
        if (auto coords = element_text(block, "coordinates"))
        {
            // lon,lat[,alt]
            std::vector<std::string> parts;
            csv::split_line(trim(*coords), parts);
            if (parts.size() < 2 || parts.size() > 3)
            {
                out.issues.push_back({line_no, "coordinates must be 'lon,lat[,alt]'"});
                continue;
            }
            raw.lon = parts[0];
            raw.lat = parts[1];
        }
        else
        {
            raw.lat = pick(fields, {"lat", "latitude"});
            raw.lon = pick(fields, {"lon", "longitude"});
        }
        MeasurementRecord rec;
        if (auto err = build_record(raw, rec); !err.empty())
            out.issues.push_back({line_no, std::move(err)});
        else
            out.records.push_back(std::move(rec));
    }
}

} // namespace

std::optional<MacAddress> MacAddress::parse(std::string_view text)
{
    if (text.size() != 17)
        return std::nullopt;
    const char sep = text[2];
    if (sep != ':' && sep != '-')
        return std::nullopt;
    MacAddress mac;
    for (std::size_t i = 0; i < 6; ++i)
    {
        if (i > 0 && text[3 * i - 1] != sep)
            return std::nullopt;
        const auto octet = text.substr(3 * i, 2);
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(octet.data(), octet.data() + 2, v, 16);
        if (ec != std::errc() || ptr != octet.data() + 2)
            return std::nullopt;
        mac.octets[i] = static_cast<std::uint8_t>(v);
    }
    return mac;
}

std::string MacAddress::to_string() const
{
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < octets.size(); ++i)
    {
        if (i)
            out += ':';
        out += hex[octets[i] >> 4];
        out += hex[octets[i] & 0xf];
    }
    return out;
}

std::optional<LogFormat> parse_log_format(std::string_view text)
{
    const std::string t = lower(text);
    if (t == "csv")
        return LogFormat::Csv;
    if (t == "kml")
        return LogFormat::KmlPlacemarks;
    return std::nullopt;
}

ParseResult parse_log(std::istream &in, LogFormat format)
{
    if (!in.good())
        throw IoError("measurement log stream is not readable");
    ParseResult out;
    if (format == LogFormat::Csv)
        parse_csv(in, out);
    else
        parse_kml(in, out);
    if (in.bad())
        throw IoError("read error while parsing measurement log");
    if (out.records.empty())
        throw EmptyInputError("measurement log contains no valid records (" + std::to_string(out.issues.size()) +
                              " malformed entries)");
    return out;
}

ParseResult parse_log_file(const std::filesystem::path &path, LogFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open())
        throw IoError("cannot open measurement log '" + path.string() + "'");
    return parse_log(in, format);
}

void write_log_csv(std::ostream &out, std::span<const MeasurementRecord> records)
{
    out << "t,bssid,ssid,channel,rssi_dbm,lat,lon\n";
    for (const auto &r : records)
        csv::write_row(out, {r.t, r.bssid.to_string(), r.ssid, std::to_string(r.channel_id), csv::format(r.rssi_dbm),
                             csv::format(r.pos.latitude), csv::format(r.pos.longitude)});
}

} // namespace wlansim
