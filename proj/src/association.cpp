// SPDX-License-Identifier: Apache-2.0
//
// aerial-d2d: stochastic-geometry toolkit for D2D-enabled aerial networks
// Copyright (C) 2026 The aerial-d2d authors
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

#include "aerial_d2d/association.hpp"

#include "aerial_d2d/rng.hpp"

#include <cmath>
#include <limits>

namespace aerial_d2d::assoc {

AssociationRecord associate(const pointprocess::Point &endpoint, const pointprocess::PointPattern &platforms,
                            double L)
{
    AssociationRecord rec{endpoint, std::nullopt, std::nullopt, std::nullopt};
    if (platforms.empty()) return rec;
    const auto &nearest = platforms.points[pointprocess::nearest_point_index(endpoint, platforms)];
    const double h = pointprocess::distance(endpoint, nearest);
    rec.platform = nearest;
    rec.horizontal_distance_m = h;
    rec.slant_distance_m = std::hypot(h, L);
    return rec;
}

modeselect::LinkState build_link_state(const pointprocess::Point &tx, const pointprocess::Point &rx,
                                       const pointprocess::PointPattern &platforms, const LinkInputs &in,
                                       std::uint64_t rng_seed)
{
    const double d = pointprocess::distance(tx, rx);
    if (!(d > 0.0)) throw DegeneratePairError("build_link_state: transmitter and receiver coincide");

    Rng rng = make_rng(rng_seed);
    const bool drawn = uniform01(rng) < in.p_assoc;

    constexpr double inf = std::numeric_limits<double>::infinity();
    const auto up = associate(tx, platforms, in.altitude);
    const auto down = associate(rx, platforms, in.altitude);

    modeselect::LinkState link;
    link.d = d;
    link.r_ul = up.slant_distance_m.value_or(inf);
    link.r_dl = down.slant_distance_m.value_or(inf);
    link.tx_associated = drawn && up.platform.has_value();
    link.rss_dd = channel::rss(in.power.p_dd, channel::d2d_attenuation(in.carrier), d, in.env.alpha);
    return link;
}

} // namespace aerial_d2d::assoc
