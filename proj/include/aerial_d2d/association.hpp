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

#ifndef AERIAL_D2D_ASSOCIATION_HPP
#define AERIAL_D2D_ASSOCIATION_HPP

#include "aerial_d2d/channel.hpp"
#include "aerial_d2d/modeselect.hpp"
#include "aerial_d2d/pointprocess.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace aerial_d2d::assoc {

struct AssociationRecord
{
    pointprocess::Point endpoint;
    std::optional<pointprocess::Point> platform;
    std::optional<double> horizontal_distance_m;
    std::optional<double> slant_distance_m;
};

class DegeneratePairError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Binds an endpoint to its nearest platform; empty optionals when there are none.
AssociationRecord associate(const pointprocess::Point &endpoint, const pointprocess::PointPattern &platforms,
                            double L);

struct LinkInputs
{
    double altitude = 0.0;
    channel::EnvironmentProfile env;
    channel::CarrierConfig carrier;
    modeselect::PowerConfig power;
    double p_assoc = 0.5;
};

// Assembles the decision inputs for one Tx/Rx pair. UL and DL attach to the
// platform nearest their own endpoint. The association draw is Bernoulli(p_assoc)
// from rng_seed and is forced false when there are no platforms. Without
// platforms r_ul and r_dl are left at +inf.
modeselect::LinkState build_link_state(const pointprocess::Point &tx, const pointprocess::Point &rx,
                                       const pointprocess::PointPattern &platforms, const LinkInputs &in,
                                       std::uint64_t rng_seed);

} // namespace aerial_d2d::assoc

#endif
