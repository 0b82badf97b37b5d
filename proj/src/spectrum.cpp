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

#include "wlansim/spectrum.hpp"

#include "wlansim/csv.hpp"

#include <algorithm>
#include <ostream>

namespace wlansim
{

void write_spectrum_csv(std::ostream &out, const SpectrumResult &spectrum)
{
    out << "normalized_freq,magnitude,magnitude_db\n";
    for (const SpectrumBin &b : spectrum.bins)
    {
        const double db = b.magnitude > 0.0 ? std::max(spectrum_floor_db, 20.0 * std::log10(b.magnitude))
                                            : spectrum_floor_db;
        csv::write_row(out, {csv::format(b.normalized_freq), csv::format(b.magnitude), csv::format(db)});
    }
}

} // namespace wlansim
