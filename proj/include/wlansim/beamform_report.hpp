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

#include "wlansim/csv.hpp"
#include "wlansim/nlms_beamformer.hpp"
#include "wlansim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

namespace wlansim
{

// CSV: n,error_power,output_re,output_im
template <typename Scalar>
void write_trace_csv(std::ostream &out, const ConvergenceTrace<Scalar> &trace)
{
    out << "n,error_power,output_re,output_im\n";
    for (std::size_t n = 0; n < trace.error_power.size(); ++n)
        csv::write_row(out, {std::to_string(n), csv::format(trace.error_power[n]), csv::format(trace.output[n].real()),
                             csv::format(trace.output[n].imag())});
}

// CSV: n,element,re,im
template <typename Scalar>
void write_weights_csv(std::ostream &out, const ConvergenceTrace<Scalar> &trace)
{
    out << "n,element,re,im\n";
    for (const auto &snap : trace.weights)
        for (Eigen::Index k = 0; k < snap.w.size(); ++k)
            csv::write_row(out, {std::to_string(snap.n), std::to_string(k), csv::format(snap.w[k].real()),
                                 csv::format(snap.w[k].imag())});
}

// CSV: angle_rad,gain_db
inline void write_pattern_csv(std::ostream &out, std::span<const PatternPoint> pattern)
{
    out << "angle_rad,gain_db\n";
    for (const auto &p : pattern)
        csv::write_row(out, {csv::format(p.angle_rad), csv::format(p.gain_db)});
}

struct BeamformSummary
{
    double final_error_power = 0.0; // mean |e|^2 over the last window
    std::optional<double> desired_gain_db;
    std::optional<double> null_depth_db; // desired gain minus the strongest interferer's gain
    std::optional<SuppressionReport> suppression;
    std::size_t spectrum_size = 0;
    std::optional<std::int64_t> plateau_at;
};

// Bin of a normalized frequency in a size-point transform.
inline std::size_t frequency_bin(double normalized_freq, std::size_t size)
{
    const auto n = static_cast<long long>(size);
    const long long k = std::llround(normalized_freq * static_cast<double>(size)) % n;
    return static_cast<std::size_t>(k < 0 ? k + n : k);
}

// The spectra compare the last `spectrum_size` samples of element 0 with the
// array output; the suppression report needs a desired and an interferer
// sinusoid on distinct bins.
template <typename Scalar>
BeamformSummary summarize_run(const Scenario &scenario, const ConvergenceTrace<Scalar> &trace,
                              std::size_t spectrum_size = 1024, std::size_t window = 100)
{
    BeamformSummary s;
    s.spectrum_size = spectrum_size;
    s.plateau_at = trace.plateau_at;
    const std::size_t len = trace.error_power.size();
    if (len > 0)
    {
        const std::size_t w = std::clamp<std::size_t>(window, 1, len);
        double sum = 0.0;
        for (std::size_t i = len - w; i < len; ++i)
            sum += static_cast<double>(trace.error_power[i]);
        s.final_error_power = sum / static_cast<double>(w);
    }

    const Source *desired = nullptr;
    const Source *tone_interferer = nullptr;
    std::optional<double> worst;
    for (const Source &src : scenario.sources)
    {
        if (src.role == SourceRole::Desired)
        {
            if (!desired)
                desired = &src;
            continue;
        }
        const double g = pattern_gain_db(trace.final_weights, scenario.array, src.angle_rad);
        worst = worst ? std::max(*worst, g) : g;
        if (!tone_interferer && src.waveform == WaveformKind::Sinusoid)
            tone_interferer = &src;
    }
    if (!desired)
        return s;
    s.desired_gain_db = pattern_gain_db(trace.final_weights, scenario.array, desired->angle_rad);
    if (worst)
        s.null_depth_db = *s.desired_gain_db - *worst;

    if (len == 0 || spectrum_size == 0 || !tone_interferer || desired->waveform != WaveformKind::Sinusoid)
        return s;
    const std::size_t db = frequency_bin(desired->normalized_freq, spectrum_size);
    const std::size_t ib = frequency_bin(tone_interferer->normalized_freq, spectrum_size);
    if (db == ib)
        return s;
    const std::size_t tail = std::min(spectrum_size, len);
    const std::span<const std::complex<Scalar>> before(trace.element0.data() + len - tail, tail);
    const std::span<const std::complex<Scalar>> after(trace.output.data() + len - tail, tail);
    s.suppression = suppression_report<Scalar>(before, after, db, ib, spectrum_size);
    return s;
}

} // namespace wlansim
