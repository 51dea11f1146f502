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

#include "catch_amalgamated.hpp"

#include "aerial_d2d/channel.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace aerial_d2d::channel;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const CarrierConfig kCarrier3e8{2.5e9, 3e8};

double hand_los(double h, double L, double a, double b)
{
    const double theta = std::atan2(L, h) * 180.0 / std::numbers::pi;
    return 1.0 / (1.0 + a * std::exp(-b * (theta - a)));
}

} // namespace

TEST_CASE("LOS probability - examples")
{
    const auto hr = high_rise_urban();
    CHECK_THAT(los_probability(0.0, 100.0, hr), WithinAbs(0.8477782407924895, 1e-12));
    CHECK_THAT(los_probability(1e12, 100.0, hr), WithinRel(4.140789979607711e-3, 1e-9));

    EnvironmentProfile flat = hr;
    flat.a = 1.0;
    flat.b = 0.0;
    for (double h : {0.0, 10.0, 1e4})
        for (double L : {1.0, 100.0, 5000.0}) CHECK(los_probability(h, L, flat) == 0.5);
}

TEST_CASE("LOS probability - radians option")
{
    auto env = high_rise_urban();
    env.angle_unit = AngleUnit::Radians;
    const double theta = std::atan2(100.0, 0.0);
    CHECK_THAT(los_probability(0.0, 100.0, env), WithinRel(1.0 / (1.0 + 27.23 * std::exp(-0.08 * (theta - 27.23))),
                                                           1e-12));
    // Radian angles never get near a = 27.23, so P_LOS stays tiny.
    CHECK(los_probability(0.0, 100.0, env) < 0.01);
}

TEST_CASE("LOS probability - monotone in h and L for random profiles")
{
    std::mt19937_64 gen(8);
    // Profiles kept away from double saturation (P_LOS rounding to exactly 0 or 1).
    std::uniform_real_distribution<double> ua(5.0, 30.0), ub(0.02, 0.2), uh(0.0, 2000.0), uL(1.0, 2000.0);
    for (int t = 0; t < 500; ++t)
    {
        EnvironmentProfile env{"random", ua(gen), ub(gen), 1.0, 20.0, 3.0};
        const double h = uh(gen), L = uL(gen);
        const double p = los_probability(h, L, env);
        REQUIRE(p > 0.0);
        REQUIRE(p < 1.0);
        REQUIRE(los_probability(h + 10.0, L, env) < p);
        REQUIRE(los_probability(h + 1.0, L + 10.0, env) > los_probability(h + 1.0, L, env));
    }
}

TEST_CASE("Path loss - unit free-space case")
{
    EnvironmentProfile lossless{"lossless", 1.0, 1.0, 0.0, 0.0, 3.0};
    const CarrierConfig unit{1.0, 4.0 * std::numbers::pi};
    CHECK_THAT(atg_pathloss_db(0.0, 1.0, lossless, unit), WithinAbs(0.0, 1e-12));
    CHECK_THAT(atg_attenuation(5.0, 7.0, lossless, unit), WithinAbs(1.0, 1e-15));
    CHECK_THAT(d2d_attenuation(unit), WithinAbs(1.0, 1e-15));
}

TEST_CASE("Path loss - high-rise hand evaluation")
{
    const auto hr = high_rise_urban();
    const CarrierConfig carrier;
    const double p = hand_los(100.0, 100.0, 27.23, 0.08);
    const double expected = 20.0 * std::log10(4.0 * std::numbers::pi * 2.5e9 / 299792458.0) +
                            20.0 * std::log10(std::sqrt(2.0) * 100.0) + p * 2.3 + (1.0 - p) * 34.0;
    CHECK_THAT(atg_pathloss_db(100.0, 100.0, hr, carrier), WithinAbs(expected, 1e-10));
}

TEST_CASE("Path loss - non-decreasing in h for high-rise at L = 100")
{
    const auto hr = high_rise_urban();
    double prev = atg_pathloss_db(0.0, 100.0, hr, {});
    for (double h = 1.0; h <= 1000.0; h += 1.0)
    {
        const double pl = atg_pathloss_db(h, 100.0, hr, {});
        REQUIRE(pl >= prev);
        prev = pl;
    }
}

TEST_CASE("Attenuation - examples")
{
    EnvironmentProfile lossless{"lossless", 27.23, 0.08, 0.0, 0.0, 3.5};
    EnvironmentProfile ten{"ten", 27.23, 0.08, 10.0, 10.0, 3.5};
    const double base = 9.118906527810402e-05;
    CHECK_THAT(atg_attenuation(30.0, 100.0, lossless, kCarrier3e8), WithinRel(base, 1e-12));
    CHECK_THAT(atg_attenuation(30.0, 100.0, ten, kCarrier3e8), WithinRel(base * 0.1, 1e-12));
    CHECK_THAT(atg_attenuation(30.0, 100.0, ten, kCarrier3e8), WithinRel(9.1189e-6, 1e-4));

    const auto hr = high_rise_urban();
    const double p = 0.8477782407924895;
    CHECK_THAT(atg_attenuation(0.0, 100.0, hr, kCarrier3e8),
               WithinRel(base * std::pow(10.0, -(p * (2.3 - 34.0) + 34.0) / 10.0), 1e-10));
}

TEST_CASE("D2D attenuation")
{
    CHECK_THAT(d2d_attenuation(kCarrier3e8), WithinRel(9.1189e-5, 1e-4));
    CHECK_THAT(d2d_attenuation({5e9, 3e8}), WithinRel(d2d_attenuation(kCarrier3e8) / 4.0, 1e-14));
}

TEST_CASE("Attenuation - bounds")
{
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> uh(0.0, 5000.0), uL(1.0, 5000.0);
    for (const auto &name : environment_preset_names())
    {
        const auto env = environment_preset(name);
        const double ff = d2d_attenuation({});
        const double lo = ff * std::pow(10.0, -env.eta_nlos_db / 10.0);
        const double hi = ff * std::pow(10.0, -env.eta_los_db / 10.0);
        for (int t = 0; t < 200; ++t)
        {
            const double a = atg_attenuation(uh(gen), uL(gen), env, {});
            REQUIRE(a >= lo * (1.0 - 1e-14));
            REQUIRE(a <= hi * (1.0 + 1e-14));
        }
    }
}

TEST_CASE("Attenuation - dB and linear forms agree")
{
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> uh(0.0, 3000.0), uL(1.0, 3000.0), uf(1e8, 6e10);
    const auto names = environment_preset_names();
    for (int t = 0; t < 1000; ++t)
    {
        const auto env = environment_preset(names[t % names.size()]);
        const CarrierConfig carrier{uf(gen), 299792458.0};
        const double h = uh(gen), L = uL(gen);
        const double r2 = h * h + L * L;
        const double linear_db = -10.0 * std::log10(atg_attenuation(h, L, env, carrier) / r2);
        REQUIRE_THAT(linear_db, WithinAbs(atg_pathloss_db(h, L, env, carrier), 1e-9));
    }
}

TEST_CASE("RSS - power law")
{
    CHECK(rss(1.0, 1.0, 1.0, 3.5) == 1.0);
    CHECK_THAT(rss(1.0, 9.1189e-5, 100.0, 3.5), WithinRel(9.1189e-5 * std::pow(100.0, -3.5), 1e-14));
    CHECK_THAT(rss(1.0, 9.1189e-5, 100.0, 3.5), WithinRel(9.1189e-12, 1e-12));
    CHECK_THROWS_AS(rss(1.0, 1.0, 0.0, 3.5), std::domain_error);

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.1, 100.0);
    for (int t = 0; t < 500; ++t)
    {
        const double p = u(gen), a = u(gen) * 1e-5, d = u(gen), e = 2.0 + u(gen) / 50.0;
        REQUIRE(rss(2.0 * p, a, d, e) == 2.0 * rss(p, a, d, e));
        REQUIRE(rss(p, a, d * 1.01, e) < rss(p, a, d, e));
    }
}

TEST_CASE("dBm conversions")
{
    CHECK_THAT(dbm_to_watts(30.0), WithinRel(1.0, 1e-14));
    CHECK_THAT(dbm_to_watts(-90.0), WithinRel(1e-12, 1e-14));
    CHECK_THAT(watts_to_dbm(dbm_to_watts(23.0)), WithinAbs(23.0, 1e-12));
}

TEST_CASE("Environment presets")
{
    const auto hr = environment_preset("high_rise_urban");
    CHECK(hr.alpha == 3.5);
    CHECK(hr.a == 27.23);
    CHECK(hr.b == 0.08);
    CHECK(hr.eta_los_db == 2.3);
    CHECK(hr.eta_nlos_db == 34.0);
    const auto sub = suburban();
    CHECK(sub.alpha == 2.7);
    CHECK(sub.eta_los_db == 0.1);
    CHECK(environment_preset_names().size() == 4);
    CHECK_THROWS_AS(environment_preset("lunar"), std::invalid_argument);
    EnvironmentProfile bad = hr;
    bad.alpha = 2.0;
    CHECK_THROWS(bad.validate());
}
