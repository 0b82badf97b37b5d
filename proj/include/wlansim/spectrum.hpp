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

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <iosfwd>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace wlansim
{

enum class Window
{
    None,
    Hann, // applied over the signal samples, not the zero padding
};

struct SpectrumBin
{
    double normalized_freq = 0.0; // k / size, in [0, 1)
    double magnitude = 0.0;
};

struct SpectrumResult
{
    std::vector<SpectrumBin> bins;
    std::size_t size = 0;
};

// Full complex size-point transform of the zero-padded signal.
template <typename Scalar>
std::vector<std::complex<Scalar>> dft(std::span<const std::complex<Scalar>> signal, std::size_t size,
                                      Window window = Window::None)
{
    if (signal.empty())
        throw std::domain_error("dft: empty signal");
    if (size < signal.size())
        throw ValidationError("dft: transform size " + std::to_string(size) + " is shorter than the signal (" +
                              std::to_string(signal.size()) + ")");
    std::vector<std::complex<Scalar>> padded(size, std::complex<Scalar>(0));
    const std::size_t len = signal.size();
    for (std::size_t i = 0; i < len; ++i)
    {
        Scalar gain(1);
        if (window == Window::Hann && len > 1)
            gain = static_cast<Scalar>(0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (len - 1)));
        padded[i] = gain * signal[i];
    }
    if (size == 1)
        return padded; // kissfft does not handle a one-point plan
    std::vector<std::complex<Scalar>> out;
    Eigen::FFT<Scalar> fft;
    fft.fwd(out, padded);
    return out;
}

template <typename Scalar>
SpectrumResult dft_magnitude(std::span<const std::complex<Scalar>> signal, std::size_t size,
                             Window window = Window::None)
{
    const auto spec = dft<Scalar>(signal, size, window);
    SpectrumResult r;
    r.size = size;
    r.bins.reserve(size);
    for (std::size_t k = 0; k < size; ++k)
        r.bins.push_back({static_cast<double>(k) / static_cast<double>(size), static_cast<double>(std::abs(spec[k]))});
    return r;
}

struct SuppressionReport
{
    double desired_change_db = 0.0;
    double interferer_change_db = 0.0;
};

/// Change of the two probed bins' magnitudes, after relative to before, in dB.
template <typename Scalar>
SuppressionReport suppression_report(std::span<const std::complex<Scalar>> before,
                                     std::span<const std::complex<Scalar>> after, std::size_t desired_bin,
                                     std::size_t interferer_bin, std::size_t size)
{
    if (desired_bin == interferer_bin)
        throw ValidationError("suppression_report: desired and interferer bins must differ");
    if (desired_bin >= size || interferer_bin >= size)
        throw ValidationError("suppression_report: bin index outside the transform");
    const auto b = dft_magnitude<Scalar>(before, size);
    const auto a = dft_magnitude<Scalar>(after, size);
    auto change = [&](std::size_t bin) {
        const double ref = b.bins[bin].magnitude;
        if (!(ref > 0.0))
            throw std::domain_error("suppression_report: zero magnitude at bin " + std::to_string(bin) +
                                    " before processing");
        return 20.0 * std::log10(a.bins[bin].magnitude / ref);
    };
    return {change(desired_bin), change(interferer_bin)};
}

inline constexpr double spectrum_floor_db = -300.0;

// CSV: normalized_freq,magnitude,magnitude_db
void write_spectrum_csv(std::ostream &out, const SpectrumResult &spectrum);

} // namespace wlansim
