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

#include "catch_amalgamated.hpp"

#include "process.hpp"
#include "wlansim/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using testing::read_file;
using testing::run_tool;
using testing::scratch_dir;

namespace
{

const std::string fixtures = WLANSIM_FIXTURE_DIR;
const std::string default_scenario_path = WLANSIM_SOURCE_DIR "/scenarios/default.json";

using Table = std::vector<std::vector<std::string>>;

Table parse_csv(const std::string &text)
{
    Table rows;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> fields;
    while (std::getline(in, line))
    {
        wlansim::csv::split_line(line, fields);
        rows.push_back(fields);
    }
    return rows;
}

// key=value pairs from a summary line.
std::map<std::string, std::string> parse_summary(const std::string &line)
{
    std::map<std::string, std::string> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token)
        if (auto eq = token.find('='); eq != std::string::npos)
            out[token.substr(0, eq)] = token.substr(eq + 1);
    return out;
}

} // namespace

TEST_CASE("cli channels - plan tables")
{
    auto r = run_tool("channels --plan unii");
    CHECK(r.exit_code == 0);
    auto t = parse_csv(r.out);
    REQUIRE(t.size() == 24);
    CHECK(t[0] == std::vector<std::string>{"id", "center_hz", "bandwidth_hz", "band", "eirp_mw"});
    CHECK(t[1] == std::vector<std::string>{"36", "5180000000", "20000000", "UNII_A", "200"});
    CHECK(t[23][0] == "161");

    r = run_tool("channels --plan ism24");
    CHECK(parse_csv(r.out).size() == 15);
    r = run_tool("channels");
    CHECK(parse_csv(r.out).size() == 1 + 14 + 23);
    r = run_tool("channels --plan unii-b");
    CHECK(parse_csv(r.out).size() == 12);
    r = run_tool("channels --plan lte");
    CHECK(r.exit_code == 1);
}

TEST_CASE("cli channels - overlap of a pair")
{
    auto r = run_tool("channels --overlap 1 6");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == 0.0);

    r = run_tool("channels --overlap 1 2");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(std::stod(r.out) - 17.0 / 22.0) < 1e-12);

    r = run_tool("channels --overlap 36 36");
    CHECK(std::stod(r.out) == 1.0);

    r = run_tool("channels --overlap 1 15");
    CHECK(r.exit_code != 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("15") != std::string::npos);

    r = run_tool("channels --overlap 1");
    CHECK(r.exit_code == 1);
}

TEST_CASE("cli beamform - default scenario nulls the interferer")
{
    const auto dir = scratch_dir("cli_beamform");
    const auto r = run_tool("beamform '" + default_scenario_path + "' --out '" + dir.string() + "'");
    REQUIRE(r.exit_code == 0);
    const auto summary = parse_summary(r.out);
    CHECK(std::stod(summary.at("null_depth_db")) >= 30.0);
    CHECK(std::stod(summary.at("interferer_change_db")) <= -20.0);
    CHECK(std::abs(std::stod(summary.at("desired_change_db"))) <= 1.0);
    CHECK(std::stod(summary.at("final_error_power")) < 0.05);

    const auto trace = parse_csv(read_file(dir / "trace.csv"));
    CHECK(trace.size() == 5001);
    CHECK(trace[0] == std::vector<std::string>{"n", "error_power", "output_re", "output_im"});
    const auto weights = parse_csv(read_file(dir / "weights.csv"));
    CHECK(weights.size() == 1 + 8 * 51);
    const auto pattern = parse_csv(read_file(dir / "pattern.csv"));
    CHECK(pattern.size() == 722);
    CHECK(parse_csv(read_file(dir / "spectrum_before.csv")).size() == 1025);
    CHECK(parse_csv(read_file(dir / "spectrum_after.csv")).size() == 1025);

    const auto manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
    CHECK(manifest["command"] == "beamform");
    CHECK(manifest["seed"] == 20130901);
    CHECK(manifest["outputs"].size() == 5);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli beamform - identical invocations give identical files")
{
    const auto a = scratch_dir("cli_det_a");
    const auto b = scratch_dir("cli_det_b");
    const std::string env = "SOURCE_DATE_EPOCH=1378000000";
    const std::string args = "beamform '" + default_scenario_path + "' --iterations 1500 --stride 50 --out ";
    REQUIRE(run_tool(args + "'" + a.string() + "'", env).exit_code == 0);
    REQUIRE(run_tool(args + "'" + b.string() + "'", env).exit_code == 0);
    std::size_t compared = 0;
    for (const auto &entry : std::filesystem::directory_iterator(a))
    {
        const auto name = entry.path().filename();
        CHECK(read_file(entry.path()) == read_file(b / name));
        ++compared;
    }
    CHECK(compared == 6);
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
}

TEST_CASE("cli beamform - output directory from the environment")
{
    const auto dir = scratch_dir("cli_env");
    const auto r = run_tool("beamform '" + default_scenario_path + "' --iterations 10",
                            "WLANSIM_OUTPUT_DIR='" + dir.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "manifest.json"));
    CHECK(std::filesystem::exists(dir / "trace.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli beamform - errors")
{
    const auto dir = scratch_dir("cli_bf_err");
    auto r = run_tool("beamform '" + default_scenario_path + "' --iterations 0 --out '" + dir.string() + "'");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("iterations") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir / "manifest.json"));

    const auto bad = dir / "bad.json";
    std::ofstream(bad) << R"({"carrier_hz": 5e9, "num_elements": 0, "spacing_wavelengths": 0.5, "step_size": 0.3,
        "iterations": 10, "seed": 1, "noise_power": 0.01, "sources": []})";
    r = run_tool("beamform '" + bad.string() + "' --out '" + dir.string() + "'");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("num_elements") != std::string::npos);

    r = run_tool("beamform '" + (dir / "missing.json").string() + "'");
    CHECK(r.exit_code == 2);
    r = run_tool("beamform");
    CHECK(r.exit_code == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli coverage - fixture summaries and interference")
{
    const auto dir = scratch_dir("cli_cov");
    const auto r = run_tool("coverage '" + fixtures + "/survey.csv' --ap-lat 51.877 --ap-lon 0.947 --grid 0.5 --out '" +
                            dir.string() + "'");
    REQUIRE(r.exit_code == 0);
    const auto counts = parse_summary(r.out);
    CHECK(counts.at("records") == "450");
    CHECK(counts.at("malformed") == "2");
    CHECK(r.err.find("survey.csv:43:") != std::string::npos);

    const auto summaries = parse_csv(read_file(dir / "summaries.csv"));
    const auto expected = parse_csv(read_file(fixtures + "/survey_expected.csv"));
    REQUIRE(summaries.size() == expected.size());
    for (std::size_t i = 1; i < expected.size(); ++i)
    {
        const auto &e = expected[i];
        auto it = std::find_if(summaries.begin() + 1, summaries.end(), [&](const auto &s) {
            return s[0] == e[0] && std::abs(std::stod(s[5]) - std::stod(e[1])) < 1e-9 &&
                   std::abs(std::stod(s[6]) - std::stod(e[2])) < 1e-9;
        });
        REQUIRE(it != summaries.end());
        CHECK((*it)[7] == e[3]);
        CHECK(std::abs(std::stod((*it)[8]) - std::stod(e[4])) < 1e-9);
        CHECK(std::abs(std::stod((*it)[9]) - std::stod(e[5])) < 1e-9);
    }

    const auto pairs = parse_csv(read_file(dir / "interference.csv"));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[1][6] == "1");
    CHECK(std::abs(std::stod(pairs[1][4]) - 7.0 / 22.0) < 1e-12);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli coverage - path loss fit")
{
    const auto dir = scratch_dir("cli_fit");
    const auto r = run_tool("coverage '" + fixtures + "/fit_survey.csv' --ap-lat 51.877 --ap-lon 0.947 --fit " +
                            "--tx-eirp 20 --out '" + dir.string() + "'");
    REQUIRE(r.exit_code == 0);
    const auto fit = parse_csv(read_file(dir / "fit.csv"));
    const auto expected = parse_csv(read_file(fixtures + "/fit_expected.csv"));
    REQUIRE(fit.size() == 2);
    CHECK(fit[1][0] == expected[1][0]);
    CHECK(std::abs(std::stod(fit[1][1]) - std::stod(expected[1][1])) < 1e-9);
    CHECK(std::abs(std::stod(fit[1][2]) - std::stod(expected[1][2])) < 1e-8);
    // 300 samples, 2 dB shadowing: standard error of the exponent is about 0.026.
    CHECK(std::abs(std::stod(fit[1][1]) - 2.7) < 0.1);
    CHECK(fit[1][4] == "300");
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli coverage - kml input and errors")
{
    const auto dir = scratch_dir("cli_cov_err");
    auto r = run_tool("coverage '" + fixtures + "/placemarks.kml' --format kml --out '" + dir.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(parse_summary(r.out).at("malformed") == "1");

    std::ofstream(dir / "empty.csv").close();
    r = run_tool("coverage '" + (dir / "empty.csv").string() + "' --out '" + dir.string() + "'");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("no valid records") != std::string::npos);

    r = run_tool("coverage '" + (dir / "missing.csv").string() + "'");
    CHECK(r.exit_code == 2);
    r = run_tool("coverage '" + fixtures + "/survey.csv' --format xml");
    CHECK(r.exit_code == 1);
    r = run_tool("coverage '" + fixtures + "/survey.csv' --fit --out '" + dir.string() + "'");
    CHECK(r.exit_code == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli throughput - caps, validation and monotone sweep")
{
    auto r = run_tool("throughput --standard ac --streams 3");
    REQUIRE(r.exit_code == 0);
    auto t = parse_csv(r.out);
    REQUIRE(t.size() == 31);
    CHECK(t[0] == std::vector<std::string>{"distance_m", "rate_mbps", "snr_db"});
    CHECK(std::stod(t[1][1]) == 1300.0);
    for (std::size_t i = 2; i < t.size(); ++i)
        CHECK(std::stod(t[i][1]) <= std::stod(t[i - 1][1]));

    r = run_tool("throughput --standard n --streams 3 --exponent 3.5");
    t = parse_csv(r.out);
    CHECK(std::stod(t[1][1]) == 450.0);
    for (std::size_t i = 2; i < t.size(); ++i)
        CHECK(std::stod(t[i][1]) <= std::stod(t[i - 1][1]));

    r = run_tool("throughput --standard n --width 80");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("20 and 40 MHz") != std::string::npos);
    CHECK(run_tool("throughput --standard n --modulation qam256").exit_code == 1);
    CHECK(run_tool("throughput --standard ax").exit_code == 1);
    CHECK(run_tool("throughput --from 5 --to 1").exit_code == 1);

    const auto dir = scratch_dir("cli_tp");
    r = run_tool("throughput --standard ac --streams 1 --out '" + dir.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(parse_summary(r.out).at("max_client_rate_mbps") == "450");
    CHECK(parse_csv(read_file(dir / "throughput.csv")).size() == 31);
    CHECK(std::filesystem::exists(dir / "manifest.json"));
    std::filesystem::remove_all(dir);
}
