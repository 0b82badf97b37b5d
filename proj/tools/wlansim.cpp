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

#include "wlansim/beamform_report.hpp"
#include "wlansim/channel_plan.hpp"
#include "wlansim/csv.hpp"
#include "wlansim/errors.hpp"
#include "wlansim/manifest.hpp"
#include "wlansim/measurement_ingest.hpp"
#include "wlansim/scenario_io.hpp"
#include "wlansim/throughput_model.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace wlansim;

namespace
{

enum ExitCode
{
    exit_ok = 0,
    exit_validation = 1,
    exit_io = 2,
    exit_internal = 3,
};

std::string default_output_dir()
{
    const char *env = std::getenv("WLANSIM_OUTPUT_DIR");
    return env && *env ? env : ".";
}

// Collects the files written by one invocation for the manifest.
class OutputDir
{
  public:
    explicit OutputDir(fs::path dir) : dir_(std::move(dir))
    {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec || !fs::is_directory(dir_))
            throw IoError("cannot create output directory '" + dir_.string() + "'");
    }

    void write(const std::string &name, const std::function<void(std::ostream &)> &body)
    {
        const fs::path path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("cannot write '" + path.string() + "'");
        body(out);
        out.close();
        if (!out)
            throw IoError("error while writing '" + path.string() + "'");
        files_.push_back({name, ""});
    }

    void finish(RunManifest manifest)
    {
        manifest.timestamp = run_timestamp();
        manifest.outputs = files_;
        write_manifest(dir_, std::move(manifest));
    }

  private:
    fs::path dir_;
    std::vector<ManifestOutput> files_;
};

// ---------------------------------------------------------------- channels

struct ChannelsArgs
{
    std::string plan = "all";
    std::vector<int> overlap;
};

int cmd_channels(const ChannelsArgs &args)
{
    if (!args.overlap.empty())
    {
        const int a = args.overlap[0], b = args.overlap[1];
        const auto pa = plan_containing(a);
        if (!pa)
            throw NotFoundError("channel " + std::to_string(a) + " is not in any channel plan");
        const auto pb = plan_containing(b);
        if (!pb)
            throw NotFoundError("channel " + std::to_string(b) + " is not in any channel plan");
        const double f = overlap_fraction(find_channel(a, *pa), find_channel(b, *pb));
        std::cout << csv::format(f) << '\n';
        return exit_ok;
    }

    std::vector<Channel> rows;
    if (args.plan == "all")
    {
        rows = list_plan(Plan::Ism24);
        const auto unii = list_plan(Plan::Unii);
        rows.insert(rows.end(), unii.begin(), unii.end());
    }
    else if (auto plan = parse_plan(args.plan))
        rows = list_plan(*plan);
    else if (auto band = parse_band(args.plan))
    {
        const auto span = list_channels(*band);
        rows.assign(span.begin(), span.end());
    }
    else
        throw ValidationError("unknown plan '" + args.plan + "' (expected all, ism24, unii, unii-a, unii-b or unii-c)");
    write_channels_csv(std::cout, rows);
    return exit_ok;
}

// ---------------------------------------------------------------- beamform

struct BeamformArgs
{
    std::string scenario;
    std::string out = default_output_dir();
    std::optional<std::int64_t> iterations;
    std::int64_t stride = 100;
    std::size_t fft_size = 1024;
    std::size_t pattern_points = 721;
};

int cmd_beamform(const BeamformArgs &args)
{
    Scenario s = load_scenario(args.scenario);
    if (args.iterations)
    {
        s.iterations = *args.iterations;
        require_valid(s);
    }
    if (args.stride < 0)
        throw ValidationError("--stride must be >= 0");
    if (args.fft_size == 0)
        throw ValidationError("--fft-size must be positive");
    if (args.pattern_points < 2)
        throw ValidationError("--pattern-points must be at least 2");

    RunOptions opts;
    opts.weight_stride = args.stride;
    const auto trace = run<double>(s, opts);
    const auto summary = summarize_run(s, trace, args.fft_size);

    OutputDir dir(args.out);
    dir.write("trace.csv", [&](std::ostream &o) { write_trace_csv(o, trace); });
    dir.write("weights.csv", [&](std::ostream &o) { write_weights_csv(o, trace); });
    const auto grid = angle_grid(-std::numbers::pi / 2, std::numbers::pi / 2, args.pattern_points);
    dir.write("pattern.csv", [&](std::ostream &o) { write_pattern_csv(o, array_pattern(trace.final_weights, s.array, grid)); });

    const std::size_t len = trace.output.size();
    if (len > 0)
    {
        const std::size_t tail = std::min(args.fft_size, len);
        const std::span<const std::complex<double>> before(trace.element0.data() + len - tail, tail);
        const std::span<const std::complex<double>> after(trace.output.data() + len - tail, tail);
        dir.write("spectrum_before.csv", [&](std::ostream &o) { write_spectrum_csv(o, dft_magnitude<double>(before, args.fft_size)); });
        dir.write("spectrum_after.csv", [&](std::ostream &o) { write_spectrum_csv(o, dft_magnitude<double>(after, args.fft_size)); });
    }

    RunManifest m;
    m.command = "beamform";
    m.input_path = args.scenario;
    m.input_sha256 = sha256_file(args.scenario);
    m.seed = s.seed;
    dir.finish(m);

    auto opt = [](const std::optional<double> &v) { return v ? csv::format(*v) : std::string("n/a"); };
    std::cout << "iterations=" << s.iterations << " final_error_power=" << csv::format(summary.final_error_power)
              << " null_depth_db=" << opt(summary.null_depth_db)
              << " desired_change_db=" << opt(summary.suppression ? std::optional(summary.suppression->desired_change_db) : std::nullopt)
              << " interferer_change_db=" << opt(summary.suppression ? std::optional(summary.suppression->interferer_change_db) : std::nullopt)
              << " plateau_at=" << (summary.plateau_at ? std::to_string(*summary.plateau_at) : "none")
              << " skipped_updates=" << trace.skipped_updates << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- coverage

struct CoverageArgs
{
    std::string log;
    std::string format = "csv";
    std::string out = default_output_dir();
    std::optional<double> ap_lat, ap_lon;
    double grid = 1.0;
    double threshold = -80.0;
    bool fit = false;
    double tx_eirp = 20.0;
    std::string fit_bssid;
};

int cmd_coverage(const CoverageArgs &args)
{
    const auto format = parse_log_format(args.format);
    if (!format)
        throw ValidationError("unknown log format '" + args.format + "' (expected csv or kml)");
    if (args.ap_lat.has_value() != args.ap_lon.has_value())
        throw ValidationError("--ap-lat and --ap-lon must be given together");
    std::optional<GeoPoint> ap;
    if (args.ap_lat)
        ap = make_geo_point(*args.ap_lat, *args.ap_lon);
    if (args.fit && !ap)
        throw ValidationError("--fit needs the AP position (--ap-lat, --ap-lon)");
    std::optional<MacAddress> fit_only;
    if (!args.fit_bssid.empty())
    {
        fit_only = MacAddress::parse(args.fit_bssid);
        if (!fit_only)
            throw ValidationError("invalid --fit-bssid '" + args.fit_bssid + "'");
    }

    const ParseResult parsed = parse_log_file(args.log, *format);
    for (const auto &issue : parsed.issues)
        std::cerr << args.log << ":" << issue.line << ": " << issue.message << '\n';
    std::cout << "records=" << parsed.records.size() << " malformed=" << parsed.issues.size() << '\n';

    SummaryOptions so;
    so.ap_position = ap;
    so.grid_m = args.grid;
    const auto summaries = summarize(parsed.records, so);

    std::map<Plan, std::vector<ApSummary>> by_plan;
    for (const auto &s : summaries)
        by_plan[*plan_containing(s.channel_id)].push_back(s);
    std::vector<InterferencePair> pairs;
    for (const auto &[plan, group] : by_plan)
    {
        const auto p = interference_report(group, plan, {.coverage_threshold_dbm = args.threshold});
        pairs.insert(pairs.end(), p.begin(), p.end());
    }

    struct FitRow
    {
        MacAddress bssid;
        FitResult fit;
    };
    std::vector<FitRow> fits;
    if (args.fit)
    {
        std::map<MacAddress, std::vector<DistanceRssi>> samples;
        for (const auto &r : parsed.records)
            if (!fit_only || r.bssid == *fit_only)
                samples[r.bssid].push_back({haversine_distance(*ap, r.pos), r.rssi_dbm});
        if (samples.empty())
            throw ValidationError("no records for the requested fit");
        for (const auto &[bssid, pts] : samples)
            fits.push_back({bssid, fit_path_loss(pts, args.tx_eirp)});
    }

    OutputDir dir(args.out);
    dir.write("summaries.csv", [&](std::ostream &o) { write_summaries_csv(o, summaries); });
    dir.write("interference.csv", [&](std::ostream &o) { write_interference_csv(o, pairs); });
    if (args.fit)
        dir.write("fit.csv", [&](std::ostream &o) {
            o << "bssid,exponent,reference_loss_db,residual_rms_db,sample_count\n";
            for (const auto &f : fits)
                csv::write_row(o, {f.bssid.to_string(), csv::format(f.fit.exponent), csv::format(f.fit.reference_loss_db),
                                   csv::format(f.fit.residual_rms_db), std::to_string(f.fit.sample_count)});
        });

    RunManifest m;
    m.command = "coverage";
    m.input_path = args.log;
    m.input_sha256 = sha256_file(args.log);
    dir.finish(m);

    std::size_t interfering = 0;
    for (const auto &p : pairs)
        interfering += p.interfering;
    std::cout << "groups=" << summaries.size() << " radio_pairs=" << pairs.size() << " interfering=" << interfering
              << '\n';
    for (const auto &f : fits)
        std::cout << "fit " << f.bssid.to_string() << " exponent=" << csv::format(f.fit.exponent)
                  << " reference_loss_db=" << csv::format(f.fit.reference_loss_db)
                  << " residual_rms_db=" << csv::format(f.fit.residual_rms_db) << " samples=" << f.fit.sample_count
                  << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- throughput

struct ThroughputArgs
{
    std::string standard = "ac";
    int streams = 3;
    std::optional<int> width;
    std::string modulation;
    double eirp = 20.0;
    double rx_gain = 0.0;
    double exponent = 2.0;
    double freq = 5.18e9;
    std::optional<double> noise_floor;
    bool fixed_width = false;
    double from = 1.0;
    double to = 30.0;
    double step = 1.0;
    std::string out;
};

int cmd_throughput(const ThroughputArgs &args)
{
    const auto standard = parse_standard(args.standard);
    if (!standard)
        throw ValidationError("unknown standard '" + args.standard + "' (expected n or ac)");
    PhyConfig cfg = default_phy_config(*standard, args.streams);
    if (args.width)
        cfg.channel_width_mhz = *args.width;
    if (!args.modulation.empty())
    {
        const auto mod = parse_modulation(args.modulation);
        if (!mod)
            throw ValidationError("unknown modulation '" + args.modulation + "' (expected qam64 or qam256)");
        cfg.modulation = *mod;
    }
    validate(cfg);
    if (!(args.step > 0.0) || !(args.from > 0.0) || args.to < args.from)
        throw ValidationError("distance sweep needs 0 < --from <= --to and --step > 0");

    std::vector<double> distances;
    for (std::size_t i = 0;; ++i)
    {
        const double d = args.from + static_cast<double>(i) * args.step;
        if (d > args.to + 1e-9 * args.step)
            break;
        distances.push_back(d);
    }
    const auto model = args.exponent == 2.0 ? PathLossModel::free_space(args.freq)
                                            : PathLossModel::log_distance(args.freq, args.exponent);
    LinkBudget link;
    link.tx_eirp_dbm = args.eirp;
    link.rx_gain_db = args.rx_gain;
    link.noise_floor_dbm = args.noise_floor;
    link.dynamic_bandwidth = !args.fixed_width;
    const auto curve = throughput_vs_distance(cfg, model, link, distances, default_staircase(cfg));

    if (args.out.empty())
    {
        write_curve_csv(std::cout, curve);
        return exit_ok;
    }
    OutputDir dir(args.out);
    dir.write("throughput.csv", [&](std::ostream &o) { write_curve_csv(o, curve); });
    RunManifest m;
    m.command = "throughput";
    // No input file: the digest covers the resolved configuration instead.
    std::ostringstream config;
    config << "standard=" << to_string(cfg.standard) << " streams=" << cfg.spatial_streams
           << " width_mhz=" << cfg.channel_width_mhz << " bits_per_symbol=" << bits_per_symbol(cfg.modulation)
           << " eirp_dbm=" << csv::format(args.eirp) << " rx_gain_db=" << csv::format(args.rx_gain)
           << " exponent=" << csv::format(args.exponent) << " freq_hz=" << csv::format(args.freq)
           << " noise_floor_dbm=" << (args.noise_floor ? csv::format(*args.noise_floor) : "default")
           << " fixed_width=" << args.fixed_width << " from=" << csv::format(args.from)
           << " to=" << csv::format(args.to) << " step=" << csv::format(args.step);
    m.input_path = config.str();
    m.input_sha256 = sha256_hex(config.str());
    dir.finish(m);
    std::cout << "max_client_rate_mbps=" << csv::format(max_client_rate(cfg.standard, cfg.spatial_streams))
              << " points=" << curve.size() << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"WLAN coverage, interference and adaptive beamforming simulator"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    ChannelsArgs ch;
    auto *channels = app.add_subcommand("channels", "List channel plans or the overlap of two channels");
    channels->add_option("--plan", ch.plan, "all, ism24, unii, unii-a, unii-b or unii-c")->capture_default_str();
    channels->add_option("--overlap", ch.overlap, "Two channel ids; prints their spectral overlap fraction")
        ->expected(2);

    BeamformArgs bf;
    auto *beamform = app.add_subcommand("beamform", "Run the NLMS beamformer on a scenario file");
    beamform->add_option("scenario", bf.scenario, "Scenario JSON file")->required();
    beamform->add_option("--out", bf.out, "Output directory (default: $WLANSIM_OUTPUT_DIR or .)");
    beamform->add_option("--iterations", bf.iterations, "Override the scenario's iteration count");
    beamform->add_option("--stride", bf.stride, "Weight snapshot stride, 0 for first and last only")
        ->capture_default_str();
    beamform->add_option("--fft-size", bf.fft_size, "Spectrum transform size")->capture_default_str();
    beamform->add_option("--pattern-points", bf.pattern_points, "Angles in the exported pattern")
        ->capture_default_str();

    CoverageArgs cv;
    auto *coverage = app.add_subcommand("coverage", "Summarize a survey log and report interfering APs");
    coverage->add_option("log", cv.log, "Survey log file")->required();
    coverage->add_option("--format", cv.format, "csv or kml")->capture_default_str();
    coverage->add_option("--out", cv.out, "Output directory (default: $WLANSIM_OUTPUT_DIR or .)");
    coverage->add_option("--ap-lat", cv.ap_lat, "AP latitude, degrees");
    coverage->add_option("--ap-lon", cv.ap_lon, "AP longitude, degrees");
    coverage->add_option("--grid", cv.grid, "Location cell size, meters")->capture_default_str();
    coverage->add_option("--threshold", cv.threshold, "Coverage threshold, dBm")->capture_default_str();
    coverage->add_flag("--fit", cv.fit, "Fit a log-distance path loss model per BSSID");
    coverage->add_option("--tx-eirp", cv.tx_eirp, "AP EIRP for the fit, dBm")->capture_default_str();
    coverage->add_option("--fit-bssid", cv.fit_bssid, "Fit only this BSSID");

    ThroughputArgs tp;
    auto *throughput = app.add_subcommand("throughput", "Rate versus distance curve");
    throughput->add_option("--standard", tp.standard, "n or ac")->capture_default_str();
    throughput->add_option("--streams", tp.streams, "Spatial streams")->capture_default_str();
    throughput->add_option("--width", tp.width, "Channel width, MHz (default: 40 for n, 80 for ac)");
    throughput->add_option("--modulation", tp.modulation, "qam64 or qam256");
    throughput->add_option("--eirp", tp.eirp, "Transmit EIRP, dBm")->capture_default_str();
    throughput->add_option("--rx-gain", tp.rx_gain, "Receive antenna gain, dB")->capture_default_str();
    throughput->add_option("--exponent", tp.exponent, "Path loss exponent (2 = free space)")->capture_default_str();
    throughput->add_option("--freq", tp.freq, "Carrier frequency, Hz")->capture_default_str();
    throughput->add_option("--noise-floor", tp.noise_floor, "Noise floor at the configured width, dBm");
    throughput->add_flag("--fixed-width", tp.fixed_width, "Do not fall back to narrower widths");
    throughput->add_option("--from", tp.from, "First distance, m")->capture_default_str();
    throughput->add_option("--to", tp.to, "Last distance, m")->capture_default_str();
    throughput->add_option("--step", tp.step, "Distance step, m")->capture_default_str();
    throughput->add_option("--out", tp.out, "Write throughput.csv and a manifest here instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try
    {
        if (*channels)
            return cmd_channels(ch);
        if (*beamform)
            return cmd_beamform(bf);
        if (*coverage)
            return cmd_coverage(cv);
        if (*throughput)
            return cmd_throughput(tp);
        return exit_internal;
    }
    catch (const IoError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
    catch (const std::logic_error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    catch (const std::exception &e)
    {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}
