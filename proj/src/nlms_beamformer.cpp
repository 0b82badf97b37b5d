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

#include "wlansim/nlms_beamformer.hpp"

#include <stdexcept>

namespace wlansim
{

double stability_upper_bound(const StabilityInputs &s)
{
    if (!(s.input_power > 0.0) || !(s.error_power > 0.0))
        throw std::domain_error("stability_upper_bound: signal and error powers must be positive");
    if (!(s.deviation > 0.0))
        throw std::domain_error("stability_upper_bound: deviation must be positive");
    return 2.0 * (s.input_power / s.error_power) * s.deviation;
}

} // namespace wlansim
