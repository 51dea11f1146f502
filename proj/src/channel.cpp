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

#include "aerial_d2d/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aerial_d2d::channel {

namespace {

void check_geometry(double h, double L)
{
    if (!std::isfinite(h) || h < 0.0) throw std::domain_error("horizontal distance h must be finite and >= 0");
    if (!std::isfinite(L) || !(L > 0.0)) throw std::domain_error("altitude L must be finite and > 0");
}

double free_space_factor(const CarrierConfig &carrier)
{
    return 4.0 * std::numbers::pi * carrier.f_c / carrier.c;
}

} // namespace

void EnvironmentProfile::validate() const
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("EnvironmentProfile: a and b must be > 0");
    if (!(eta_los_db >= 0.0) || !(eta_nlos_db >= eta_los_db))
        throw std::domain_error("EnvironmentProfile: require eta_nlos_db >= eta_los_db >= 0");
    if (!(alpha > 2.0) || !std::isfinite(alpha))
        throw std::domain_error("EnvironmentProfile: alpha must be > 2");
}

void CarrierConfig::validate() const
{
    if (!std::isfinite(f_c) || !(f_c > 0.0)) throw std::domain_error("CarrierConfig: f_c must be > 0");
    if (!std::isfinite(c) || !(c > 0.0)) throw std::domain_error("CarrierConfig: c must be > 0");
}

EnvironmentProfile high_rise_urban() { return {"high_rise_urban", 27.23, 0.08, 2.3, 34.0, 3.5}; }
EnvironmentProfile dense_urban() { return {"dense_urban", 12.08, 0.11, 1.6, 23.0, 3.1}; }
EnvironmentProfile urban() { return {"urban", 4.88, 0.43, 1.0, 20.0, 2.9}; }
EnvironmentProfile suburban() { return {"suburban", 4.88, 0.43, 0.1, 21.0, 2.7}; }

EnvironmentProfile environment_preset(std::string_view name)
{
    if (name == "high_rise_urban") return high_rise_urban();
    if (name == "dense_urban") return dense_urban();
    if (name == "urban") return urban();
    if (name == "suburban") return suburban();
    throw std::invalid_argument("unknown environment preset '" + std::string(name) + "'");
}

std::vector<std::string> environment_preset_names()
{
    return {"high_rise_urban", "dense_urban", "urban", "suburban"};
}

double los_probability(double h, double L, const EnvironmentProfile &env)
{
    check_geometry(h, L);
    double theta = std::atan2(L, h);
    if (env.angle_unit == AngleUnit::Degrees) theta *= 180.0 / std::numbers::pi;
    return 1.0 / (1.0 + env.a * std::exp(-env.b * (theta - env.a)));
}

double atg_pathloss_db(double h, double L, const EnvironmentProfile &env, const CarrierConfig &carrier)
{
    const double p_los = los_probability(h, L, env);
    const double r = std::hypot(h, L);
    return 20.0 * std::log10(free_space_factor(carrier)) + 20.0 * std::log10(r) + p_los * env.eta_los_db +
           (1.0 - p_los) * env.eta_nlos_db;
}

double atg_attenuation(double h, double L, const EnvironmentProfile &env, const CarrierConfig &carrier)
{
    const double p_los = los_probability(h, L, env);
    const double excess_db = p_los * (env.eta_los_db - env.eta_nlos_db) + env.eta_nlos_db;
    return d2d_attenuation(carrier) * std::pow(10.0, -excess_db / 10.0);
}

double d2d_attenuation(const CarrierConfig &carrier)
{
    const double inv = 1.0 / free_space_factor(carrier);
    return inv * inv;
}

double rss(double p_tx, double attenuation, double distance, double exponent)
{
    if (!(p_tx >= 0.0)) throw std::domain_error("rss: p_tx must be >= 0");
    if (!(distance > 0.0)) throw std::domain_error("rss: distance must be > 0");
    if (!(exponent > 0.0)) throw std::domain_error("rss: exponent must be > 0");
    return p_tx * attenuation * std::pow(distance, -exponent);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

} // namespace aerial_d2d::channel
