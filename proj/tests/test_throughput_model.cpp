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

#include "wlansim/errors.hpp"
#include "wlansim/throughput_model.hpp"

#include <random>
#include <sstream>

using namespace wlansim;

namespace
{

std::vector<double> sweep(double from, double to, double step)
{
    std::vector<double> d;
    for (double x = from; x <= to + 1e-9; x += step)
        d.push_back(x);
    return d;
}

} // namespace

TEST_CASE("max client rate - tabulated cells")
{
    CHECK(max_client_rate(Standard::N80211, 1) == 150.0);
    CHECK(max_client_rate(Standard::N80211, 3) == 450.0);
    CHECK(max_client_rate(Standard::AC80211, 1) == 450.0);
    CHECK(max_client_rate(Standard::AC80211, 3) == 1300.0);
    CHECK_THROWS_AS(max_client_rate(Standard::AC80211, 2), NotFoundError);
    CHECK_THROWS_AS(max_client_rate(Standard::N80211, 8), NotFoundError);
}

TEST_CASE("bits per symbol")
{
    CHECK(bits_per_symbol(Modulation::QAM64) == 6);
    CHECK(bits_per_symbol(Modulation::QAM256) == 8);
    CHECK(bits_per_symbol(Modulation::QAM256) * 3 == bits_per_symbol(Modulation::QAM64) * 4);
    CHECK((1 << bits_per_symbol(Modulation::QAM64)) == 64);
    CHECK((1 << bits_per_symbol(Modulation::QAM256)) == 256);
}

TEST_CASE("phy config validation")
{
    CHECK_NOTHROW(validate(default_phy_config(Standard::N80211, 3)));
    CHECK_NOTHROW(validate(default_phy_config(Standard::AC80211, 8)));
    CHECK_NOTHROW(validate(PhyConfig{Standard::AC80211, 160, 1, Modulation::QAM256}));
    CHECK_THROWS_AS(validate(PhyConfig{Standard::N80211, 80, 1, Modulation::QAM64}), ValidationError);
    CHECK_THROWS_AS(validate(PhyConfig{Standard::N80211, 40, 1, Modulation::QAM256}), ValidationError);
    CHECK_THROWS_AS(validate(PhyConfig{Standard::N80211, 40, 5, Modulation::QAM64}), ValidationError);
    CHECK_THROWS_AS(validate(PhyConfig{Standard::AC80211, 80, 9, Modulation::QAM256}), ValidationError);
    CHECK_THROWS_AS(validate(PhyConfig{Standard::AC80211, 30, 1, Modulation::QAM256}), ValidationError);
    try
    {
        validate(PhyConfig{Standard::N80211, 80, 1, Modulation::QAM64});
    }
    catch (const ValidationError &e)
    {
        CHECK(std::string(e.what()).find("20 and 40 MHz") != std::string::npos);
    }
}

TEST_CASE("noise floor scales with width")
{
    CHECK(noise_floor_dbm(20) == -90.0);
    CHECK(noise_floor_dbm(40) == -87.0);
    CHECK(noise_floor_dbm(80) == -84.0);
    CHECK(noise_floor_dbm(160) == -81.0);
}

TEST_CASE("default staircase")
{
    const auto ac = default_staircase(default_phy_config(Standard::AC80211, 3));
    REQUIRE(ac.steps().size() == 10);
    CHECK(ac.steps().front().min_snr_db == 5.0);
    CHECK(ac.steps().back().min_snr_db == 32.0);
    CHECK(ac.steps().back().rate_mbps == 1300.0);
    CHECK(ac.rate_for(4.99) == 0.0);
    CHECK(ac.rate_for(100.0) == 1300.0);

    const auto n = default_staircase(default_phy_config(Standard::N80211, 1));
    REQUIRE(n.steps().size() == 8);
    CHECK(n.steps().back().rate_mbps == 150.0);
    CHECK(n.steps().front().rate_mbps == Catch::Approx(15.0));

    // 64-QAM-limited 802.11ac loses exactly the 8/6 modulation gain at the top.
    const auto ac64 = default_staircase(PhyConfig{Standard::AC80211, 80, 3, Modulation::QAM64});
    REQUIRE(ac64.steps().size() == 8);
    CHECK(ac64.steps().back().rate_mbps == Catch::Approx(1300.0 * 6.0 / 8.0).epsilon(1e-12));

    CHECK_THROWS_AS(RateStaircase({{10.0, 5.0}, {10.0, 6.0}}), ValidationError);
    CHECK_THROWS_AS(RateStaircase({{10.0, 5.0}, {12.0, 4.0}}), ValidationError);
}

TEST_CASE("throughput vs distance - cap, outage and errors")
{
    const auto cfg = default_phy_config(Standard::AC80211, 3);
    const auto model = PathLossModel::free_space(5.18e9);
    const auto stairs = default_staircase(cfg);
    const std::vector<double> near{1e-6};
    CHECK(throughput_vs_distance(cfg, model, {}, near, stairs).front().rate_mbps == 1300.0);

    const std::vector<double> far{1e6};
    const auto out = throughput_vs_distance(cfg, model, {}, far, stairs);
    CHECK(out.front().snr_db < 5.0);
    CHECK(out.front().rate_mbps == 0.0);

    CHECK_THROWS_AS(throughput_vs_distance(cfg, model, {}, std::vector<double>{}, stairs), std::domain_error);
    CHECK_THROWS_AS(throughput_vs_distance(cfg, model, {}, std::vector<double>{2.0, 1.0}, stairs), ValidationError);
    CHECK_THROWS_AS(throughput_vs_distance(cfg, model, {}, std::vector<double>{0.0, 1.0}, stairs), ValidationError);

    // A custom table above the cap is clipped.
    const RateStaircase generous({{0.0, 5000.0}});
    CHECK(throughput_vs_distance(cfg, model, {}, std::vector<double>{3.0}, generous).front().rate_mbps == 1300.0);
}

TEST_CASE("throughput vs distance - narrower width at the cell edge")
{
    const auto cfg = default_phy_config(Standard::AC80211, 1);
    const auto model = PathLossModel::free_space(5.18e9);
    const auto stairs = default_staircase(cfg);
    const double first_rate = stairs.steps().front().rate_mbps;
    const std::vector<double> d{10.0};

    // 3 dB at 80 MHz is below the first threshold; at 40 MHz it is 6 dB.
    LinkBudget link{3.0 + noise_floor_dbm(80) + model.loss_db(10.0)};
    auto p = throughput_vs_distance(cfg, model, link, d, stairs).front();
    CHECK(std::abs(p.snr_db - 3.0) < 1e-9);
    CHECK(p.width_mhz == 40);
    CHECK(p.rate_mbps == 0.5 * first_rate);

    // 0 dB at 80 MHz needs the 20 MHz fallback.
    link.tx_eirp_dbm -= 3.0;
    p = throughput_vs_distance(cfg, model, link, d, stairs).front();
    CHECK(p.width_mhz == 20);
    CHECK(p.rate_mbps == 0.25 * first_rate);

    link.dynamic_bandwidth = false;
    p = throughput_vs_distance(cfg, model, link, d, stairs).front();
    CHECK(p.width_mhz == 80);
    CHECK(p.rate_mbps == 0.0);

    // Plenty of SNR: the configured width wins.
    link.tx_eirp_dbm += 60.0;
    link.dynamic_bandwidth = true;
    p = throughput_vs_distance(cfg, model, link, d, stairs).front();
    CHECK(p.width_mhz == 80);
    CHECK(p.rate_mbps == 450.0);
}

TEST_CASE("throughput vs distance - link budget arithmetic")
{
    const auto cfg = default_phy_config(Standard::N80211, 1);
    const auto model = PathLossModel::free_space(5.0e9);
    const LinkBudget link{17.0, 2.0, -95.0};
    const auto p = throughput_vs_distance(cfg, model, link, std::vector<double>{10.0}, default_staircase(cfg));
    CHECK(std::abs(p.front().snr_db - (17.0 - friis_path_loss(10.0, 5.0e9) + 2.0 + 95.0)) < 1e-12);
}

TEST_CASE("throughput vs distance - ac dominates n and both are non-increasing")
{
    const auto distances = sweep(1.0, 30.0, 0.25);
    for (double exponent : {2.0, 2.7, 3.5})
        for (double eirp : {10.0, 20.0, 30.0})
        {
            const auto model = PathLossModel::log_distance(5.18e9, exponent);
            const auto ac_cfg = default_phy_config(Standard::AC80211, 3);
            const auto n_cfg = default_phy_config(Standard::N80211, 3);
            const auto ac = throughput_vs_distance(ac_cfg, model, {eirp}, distances, default_staircase(ac_cfg));
            const auto n = throughput_vs_distance(n_cfg, model, {eirp}, distances, default_staircase(n_cfg));
            for (std::size_t i = 0; i < distances.size(); ++i)
            {
                CHECK(ac[i].rate_mbps >= n[i].rate_mbps);
                if (i > 0)
                {
                    CHECK(ac[i].rate_mbps <= ac[i - 1].rate_mbps);
                    CHECK(n[i].rate_mbps <= n[i - 1].rate_mbps);
                }
            }
        }
}

TEST_CASE("throughput vs distance - monotone for random staircases")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> gap(0.5, 6.0), bump(0.0, 100.0);
    const auto cfg = default_phy_config(Standard::AC80211, 1);
    const auto distances = sweep(0.5, 200.0, 0.5);
    for (int trial = 0; trial < 50; ++trial)
    {
        std::vector<RateStep> steps;
        double snr = -5.0, rate = 0.0;
        for (int i = 0; i < 12; ++i)
            steps.push_back({snr += gap(rng), rate += bump(rng)});
        const auto curve = throughput_vs_distance(cfg, PathLossModel::log_distance(5e9, 2.0 + trial * 0.03), {},
                                                  distances, RateStaircase(steps));
        for (std::size_t i = 1; i < curve.size(); ++i)
            CHECK(curve[i].rate_mbps <= curve[i - 1].rate_mbps);
    }
}

TEST_CASE("contention degradation")
{
    CHECK(contention_degradation(300.0, {}) == 300.0);
    const std::vector<CoChannelNeighbor> saturated{{1.0, 1.0}};
    CHECK(contention_degradation(300.0, saturated) == 0.0);
    const std::vector<CoChannelNeighbor> two{{0.77, 0.3}, {1.0, 0.2}};
    CHECK(std::abs(contention_degradation(100.0, two) - 100.0 * (1.0 - 0.431)) < 1e-12);
    const std::vector<CoChannelNeighbor> crowded{{1.0, 0.6}, {1.0, 0.7}};
    CHECK(contention_degradation(100.0, crowded) == 0.0);
    const std::vector<CoChannelNeighbor> bad{{1.2, 0.5}};
    CHECK_THROWS_AS(contention_degradation(100.0, bad), ValidationError);

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial)
    {
        std::vector<CoChannelNeighbor> ns(trial % 5, CoChannelNeighbor{});
        for (auto &nb : ns)
            nb = {u(rng), u(rng)};
        const double rate = 1000.0 * u(rng);
        const double out = contention_degradation(rate, ns);
        CHECK(out >= 0.0);
        CHECK(out <= rate);
    }
}

TEST_CASE("curve CSV")
{
    const std::vector<CurvePoint> curve{{1.0, 1300.0, 40.5}, {2.0, 975.0, 34.5}};
    std::ostringstream out;
    write_curve_csv(out, curve);
    CHECK(out.str() == "distance_m,rate_mbps,snr_db\n1,1300,40.5\n2,975,34.5\n");
}
