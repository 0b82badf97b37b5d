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

#include <optional>

namespace wlansim
{

template <typename Scalar>
struct BeamformerState
{
    ComplexVector<Scalar> w;
    Scalar mu = Scalar(0.32);
    std::int64_t n = 0;
    Scalar eps = Scalar(0); // added to ||x||^2 in the update denominator

    static BeamformerState zeros(int num_elements, Scalar mu, Scalar eps = Scalar(0))
    {
        return {ComplexVector<Scalar>::Zero(num_elements), mu, 0, eps};
    }
};

template <typename Scalar>
struct StepResult
{
    std::complex<Scalar> y;
    std::complex<Scalar> e;
    BeamformerState<Scalar> state;
    bool skipped = false; // ||x||^2 + eps was zero; weights left unchanged
};

/// One normalized LMS iteration:
///   y = w^H x,  e = d - y,  w' = w + mu / (||x||^2 + eps) * x * conj(e).
template <typename Scalar>
StepResult<Scalar> step(const BeamformerState<Scalar> &state, const Snapshot<Scalar> &snap)
{
    if (snap.x.size() != state.w.size())
        throw DimensionError("snapshot length " + std::to_string(snap.x.size()) + " does not match " +
                             std::to_string(state.w.size()) + " weights");
    if (!(state.mu >= Scalar(0)) || !(state.eps >= Scalar(0)))
        throw ValidationError("beamformer state requires mu >= 0 and eps >= 0");

    StepResult<Scalar> r{state.w.dot(snap.x), {}, state, false};
    r.e = snap.d - r.y;
    const Scalar denom = snap.x.squaredNorm() + state.eps;
    if (denom > Scalar(0))
        r.state.w += (state.mu / denom) * std::conj(r.e) * snap.x;
    else
        r.skipped = true;
    ++r.state.n;
    return r;
}

struct StabilityInputs
{
    double input_power = 1.0; // E[|u(n)|^2]
    double error_power = 1.0; // E[|e(n)|^2]
    double deviation = 1.0;   // D(n), taken as given
};

// 2 * (input_power / error_power) * deviation. Reported, never enforced.
double stability_upper_bound(const StabilityInputs &s);

struct RunOptions
{
    std::int64_t weight_stride = 100; // 0 records only the initial and final weights
    std::int64_t plateau_window = 100;
    double plateau_tolerance = 1e-3;
    bool stop_at_plateau = false;
};

template <typename Scalar>
struct WeightSnapshot
{
    std::int64_t n = 0;
    ComplexVector<Scalar> w;
};

template <typename Scalar>
struct ConvergenceTrace
{
    std::vector<Scalar> error_power;                 // |e(n)|^2
    std::vector<std::complex<Scalar>> output;        // y(n)
    std::vector<std::complex<Scalar>> element0;      // x_0(n), the single-element input
    std::vector<WeightSnapshot<Scalar>> weights;     // w(n) before step n, plus the final w
    ComplexVector<Scalar> final_weights;
    std::optional<std::int64_t> plateau_at;
    std::int64_t skipped_updates = 0;
    Scalar eps = Scalar(0);
};

/// First window boundary at which the mean of |e|^2 over a window changed by
/// less than `tolerance` relative to the previous window.
template <typename Scalar>
std::optional<std::int64_t> detect_plateau(std::span<const Scalar> error_power, std::int64_t window,
                                           double tolerance)
{
    if (window < 1)
        return std::nullopt;
    const auto count = static_cast<std::int64_t>(error_power.size()) / window;
    double previous = 0.0;
    for (std::int64_t k = 0; k < count; ++k)
    {
        double sum = 0.0;
        for (std::int64_t i = k * window; i < (k + 1) * window; ++i)
            sum += static_cast<double>(error_power[i]);
        const double mean = sum / static_cast<double>(window);
        if (k > 0 && (previous > 0.0 ? std::abs(mean - previous) / previous < tolerance : mean == 0.0))
            return (k + 1) * window;
        previous = mean;
    }
    return std::nullopt;
}

/// Trains the beamformer against the scenario's desired waveform from zero
/// weights. The regularizer is 1e-12 times the expected snapshot energy.
template <typename Scalar>
ConvergenceTrace<Scalar> run(const Scenario &scenario, const RunOptions &options = {})
{
    require_valid(scenario);
    const auto iters = scenario.iterations;
    ConvergenceTrace<Scalar> trace;
    trace.eps = static_cast<Scalar>(1e-12 * expected_snapshot_energy(scenario));
    trace.error_power.reserve(iters);
    trace.output.reserve(iters);
    trace.element0.reserve(iters);

    auto state = BeamformerState<Scalar>::zeros(scenario.array.num_elements,
                                                static_cast<Scalar>(scenario.step_size), trace.eps);
    std::int64_t checked = 0;
    for (std::int64_t n = 0; n < iters; ++n)
    {
        if (n == 0 || (options.weight_stride > 0 && n % options.weight_stride == 0))
            trace.weights.push_back({n, state.w});
        const auto snap = synthesize<Scalar>(scenario, n);
        auto r = step(state, snap);
        trace.error_power.push_back(std::norm(r.e));
        trace.output.push_back(r.y);
        trace.element0.push_back(snap.x[0]);
        trace.skipped_updates += r.skipped;
        state = std::move(r.state);

        if (options.stop_at_plateau && options.plateau_window > 0 && (n + 1) % options.plateau_window == 0 &&
            n + 1 > checked)
        {
            checked = n + 1;
            if ((trace.plateau_at = detect_plateau<Scalar>(trace.error_power, options.plateau_window,
                                                           options.plateau_tolerance)))
                break;
        }
    }
    if (!options.stop_at_plateau)
        trace.plateau_at =
            detect_plateau<Scalar>(trace.error_power, options.plateau_window, options.plateau_tolerance);
    trace.weights.push_back({state.n, state.w});
    trace.final_weights = std::move(state.w);
    return trace;
}

} // namespace wlansim
