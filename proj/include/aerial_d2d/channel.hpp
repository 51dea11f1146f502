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

#ifndef AERIAL_D2D_CHANNEL_HPP
#define AERIAL_D2D_CHANNEL_HPP

#include <string>
#include <string_view>
#include <vector>

namespace aerial_d2d::channel {

// Unit in which the elevation angle arctan(L/h) enters the LOS sigmoid. The
// preset constants (a, b) are fitted for degrees.
enum class AngleUnit
{
    Degrees,
    Radians
};

// LOS-model constants and D2D path-loss exponent for one environment class.
struct EnvironmentProfile
{
    std::string name;
    double a = 0.0;
    double b = 0.0;
    double eta_los_db = 0.0;
    double eta_nlos_db = 0.0;
    double alpha = 0.0;
    AngleUnit angle_unit = AngleUnit::Degrees;

    void validate() const;
};

struct CarrierConfig
{
    double f_c = 2.5e9;
    double c = 299792458.0;

    void validate() const;
};

EnvironmentProfile high_rise_urban();
EnvironmentProfile dense_urban();
EnvironmentProfile urban();
EnvironmentProfile suburban();

// Looks up one of the presets above by its snake_case name.
// Throws std::invalid_argument for unknown names.
EnvironmentProfile environment_preset(std::string_view name);
std::vector<std::string> environment_preset_names();

// P_LOS(h, L) = 1 / (1 + a exp(-b [theta - a])), theta = arctan(L / h).
// h = 0 is the platform straight overhead (theta = 90 deg).
double los_probability(double h, double L, const EnvironmentProfile &env);

// Air-to-ground path loss in dB at horizontal offset h and altitude L.
double atg_pathloss_db(double h, double L, const EnvironmentProfile &env, const CarrierConfig &carrier);

// Linear gain prefactor A(h, L) such that the received fraction is A * r^-2.
double atg_attenuation(double h, double L, const EnvironmentProfile &env, const CarrierConfig &carrier);

// A_DD = (c / (4 pi f_c))^2.
double d2d_attenuation(const CarrierConfig &carrier);

// Power-law received signal strength p_tx * attenuation * distance^-exponent.
double rss(double p_tx, double attenuation, double distance, double exponent);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

} // namespace aerial_d2d::channel

#endif
