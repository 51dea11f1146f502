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

#ifndef AERIAL_D2D_MODESELECT_HPP
#define AERIAL_D2D_MODESELECT_HPP

#include "aerial_d2d/channel.hpp"
#include "aerial_d2d/specfun.hpp"

#include <string>
#include <string_view>

namespace aerial_d2d::modeselect {

// Transmit powers and the D2D admission threshold, all in watts.
struct PowerConfig
{
    double p_dd = 0.0;
    double p_ul = 0.0;
    double p_dl = 0.0;
    double rss_threshold = 0.0;

    void validate() const;
};

enum class Scheme
{
    TDDS, // threshold D2D distance first, RSS fallback for unassociated transmitters
    RSSS  // D2D RSS first
};

struct SchemeConfig
{
    Scheme scheme = Scheme::TDDS;
    double association_probability = 0.5;
    double region_radius = 500.0;
    double altitude = 100.0;

    void validate() const;
};

struct LinkState
{
    double d = 0.0;
    double r_ul = 0.0;
    double r_dl = 0.0;
    bool tx_associated = false;
    double rss_dd = 0.0;
};

enum class ModeDecision
{
    D2D,
    Standard,
    NoService
};

std::string_view to_string(Scheme s) noexcept;
std::string_view to_string(ModeDecision m) noexcept;
Scheme parse_scheme(std::string_view text);

// Distance at which the D2D RSS drops to the threshold: (P_DD A_DD / RSS_th)^(1/alpha).
double r_bar_th(const PowerConfig &power, double a_dd, double alpha);

// Distance at which D2D RSS equals the weaker of the UL and DL RSS.
double dth_instantaneous(double r_ul, double r_dl, const PowerConfig &power, double a_ul, double a_dl,
                         double a_dd, double alpha);

// A(h_bar, L) with the mean horizontal offset h_bar = 1 / (2 sqrt(lambda_B)).
double a_tilde(double lambda_retained, double L, const channel::EnvironmentProfile &env,
               const channel::CarrierConfig &carrier);

// Closed-form average threshold distance (incomplete-gamma form). Both
// exponentially scaled gamma terms are evaluated without overflow, so
// altitudes of several km are fine.
double avg_dth(const PowerConfig &power, double lambda_retained, double L, const channel::EnvironmentProfile &env,
               const channel::CarrierConfig &carrier);

// Same quantity by direct 2-D quadrature over (r_UL, r_DL) with the
// approximate distance density and A_UL = A_DL = A_tilde. Independent route
// used to check avg_dth.
double avg_dth_quadrature(const PowerConfig &power, double lambda_retained, double L,
                          const channel::EnvironmentProfile &env, const channel::CarrierConfig &carrier,
                          const specfun::QuadratureSpec &quad = {1e-13, 1e-11, 4000});

ModeDecision tdds_decide(const LinkState &link, double d_bar_th, const PowerConfig &power);
ModeDecision rsss_decide(const LinkState &link, double d_bar_th, const PowerConfig &power);
ModeDecision decide(Scheme scheme, const LinkState &link, double d_bar_th, const PowerConfig &power);

// Probability that a receiver uniform on the disk (transmitter at the centre)
// ends up in D2D mode.
double p_d2d_tdds(double d_bar_th, const SchemeConfig &scheme, const PowerConfig &power, double a_dd,
                  double alpha);
double p_d2d_rsss(const SchemeConfig &scheme, const PowerConfig &power, double a_dd, double alpha);
double p_d2d(double d_bar_th, const SchemeConfig &scheme, const PowerConfig &power, double a_dd, double alpha);

} // namespace aerial_d2d::modeselect

#endif
