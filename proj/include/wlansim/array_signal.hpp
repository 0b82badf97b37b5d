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

#include "wlansim/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace wlansim
{

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

struct ArrayConfig
{
    int num_elements = 8;
    double spacing = 0.5; // wavelengths
};

enum class SourceRole
{
    Desired,
    Interferer,
};

enum class WaveformKind
{
    Sinusoid,      // exp(j 2 pi f n), f normalized to the sample rate
    RandomSymbols, // unit-power QPSK drawn from the scenario stream
};

struct Source
{
    SourceRole role = SourceRole::Desired;
    double angle_rad = 0.0; // from broadside, positive toward increasing element index
    WaveformKind waveform = WaveformKind::Sinusoid;
    double normalized_freq = 0.0;
    double amplitude = 1.0;
};

// A beamforming experiment. carrier_hz and sampling_hz are metadata only;
// signals are synthesized at complex baseband.
struct Scenario
{
    double carrier_hz = 5.0e9;
    double sampling_hz = 10.0e9;
    ArrayConfig array;
    double step_size = 0.32;
    std::int64_t iterations = 5000;
    std::uint64_t seed = 1;
    double noise_power = 0.01;
    std::vector<Source> sources;
};

// Field-level diagnostics; empty when the scenario is usable.
std::vector<std::string> validate(const Scenario &scenario);

// Throws ValidationError listing every diagnostic.
void require_valid(const Scenario &scenario);

// 8-element half-wavelength array, mu 0.32, desired tone at +pi/4, interferer
// tone at -pi/4, SIR 0 dB, SNR 20 dB.
Scenario default_scenario();

// Mean ||x||^2 of a snapshot: N * (sum of source powers + noise power).
double expected_snapshot_energy(const Scenario &scenario);

template <typename Scalar>
struct Snapshot
{
    ComplexVector<Scalar> x;
    std::complex<Scalar> d;
    std::int64_t index = 0;
};

// Element k = exp(-j 2 pi k spacing sin(theta)).
template <typename Scalar>
ComplexVector<Scalar> steering_vector(double theta, const ArrayConfig &cfg)
{
    ComplexVector<Scalar> a(cfg.num_elements);
    const double step = -2.0 * std::numbers::pi * cfg.spacing * std::sin(theta);
    for (int k = 0; k < cfg.num_elements; ++k)
    {
        const double phase = step * k;
        a[k] = std::complex<Scalar>(static_cast<Scalar>(std::cos(phase)), static_cast<Scalar>(std::sin(phase)));
    }
    return a;
}

/// Snapshot n of the scenario. Each index draws from its own generator seeded
/// by (seed, n), so any n can be produced independently and reproducibly:
/// source symbols are drawn first in source order, then the noise vector.
/// d(n) is the clean desired component as seen by element 0.
template <typename Scalar>
Snapshot<Scalar> synthesize(const Scenario &scenario, std::int64_t n)
{
    using C = std::complex<Scalar>;
    bool has_desired = false;
    for (const Source &s : scenario.sources)
        has_desired |= s.role == SourceRole::Desired;
    if (!has_desired)
        throw ValidationError("scenario has no desired source");

    const auto un = static_cast<std::uint64_t>(n);
    std::seed_seq seq{static_cast<std::uint32_t>(scenario.seed), static_cast<std::uint32_t>(scenario.seed >> 32),
                      static_cast<std::uint32_t>(un), static_cast<std::uint32_t>(un >> 32)};
    std::mt19937_64 rng(seq);

    Snapshot<Scalar> snap;
    snap.index = n;
    snap.x = ComplexVector<Scalar>::Zero(scenario.array.num_elements);
    snap.d = C(0);
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    for (const Source &src : scenario.sources)
    {
        std::complex<double> s;
        if (src.waveform == WaveformKind::Sinusoid)
        {
            const double phase = 2.0 * std::numbers::pi * src.normalized_freq * static_cast<double>(n);
            s = {std::cos(phase), std::sin(phase)};
        }
        else
        {
            const auto bits = rng();
            s = {(bits & 1u) ? -inv_sqrt2 : inv_sqrt2, (bits & 2u) ? -inv_sqrt2 : inv_sqrt2};
        }
        const C sample(static_cast<Scalar>(src.amplitude * s.real()), static_cast<Scalar>(src.amplitude * s.imag()));
        snap.x += sample * steering_vector<Scalar>(src.angle_rad, scenario.array);
        if (src.role == SourceRole::Desired)
            snap.d += sample;
    }
    if (scenario.noise_power > 0.0)
    {
        std::normal_distribution<double> gauss(0.0, std::sqrt(scenario.noise_power / 2.0));
        for (int k = 0; k < scenario.array.num_elements; ++k)
        {
            const double re = gauss(rng);
            const double im = gauss(rng);
            snap.x[k] += C(static_cast<Scalar>(re), static_cast<Scalar>(im));
        }
    }
    return snap;
}

// Complex array response w^H a(theta).
template <typename Derived>
auto array_response(const Eigen::MatrixBase<Derived> &w, const ArrayConfig &cfg, double theta)
{
    using C = typename Derived::Scalar;
    using Scalar = typename C::value_type;
    if (w.size() != cfg.num_elements)
        throw DimensionError("weight length " + std::to_string(w.size()) + " does not match " +
                             std::to_string(cfg.num_elements) + " elements");
    return w.dot(steering_vector<Scalar>(theta, cfg));
}

inline constexpr double pattern_floor_db = -80.0;

// 20 log10 |w^H a(theta)|, clamped at pattern_floor_db.
template <typename Derived>
double pattern_gain_db(const Eigen::MatrixBase<Derived> &w, const ArrayConfig &cfg, double theta)
{
    const double mag = static_cast<double>(std::abs(array_response(w, cfg, theta)));
    if (!(mag > 0.0))
        return pattern_floor_db;
    return std::max(pattern_floor_db, 20.0 * std::log10(mag));
}

struct PatternPoint
{
    double angle_rad = 0.0;
    double gain_db = 0.0;
};

template <typename Derived>
std::vector<PatternPoint> array_pattern(const Eigen::MatrixBase<Derived> &w, const ArrayConfig &cfg,
                                        std::span<const double> grid)
{
    std::vector<PatternPoint> out;
    out.reserve(grid.size());
    for (double theta : grid)
        out.push_back({theta, pattern_gain_db(w, cfg, theta)});
    return out;
}

// count points evenly spaced over [lo, hi].
std::vector<double> angle_grid(double lo, double hi, std::size_t count);

} // namespace wlansim
