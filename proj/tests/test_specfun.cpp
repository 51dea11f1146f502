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

#include "aerial_d2d/nearestdist.hpp"
#include "aerial_d2d/rng.hpp"
#include "aerial_d2d/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace aerial_d2d;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Upper incomplete gamma - reference values")
{
    CHECK_THAT(specfun::upper_incomplete_gamma(1.0, 0.0), WithinAbs(1.0, 1e-14));
    CHECK_THAT(specfun::upper_incomplete_gamma(1.0, 2.0), WithinRel(std::exp(-2.0), 1e-12));
    CHECK_THAT(specfun::upper_incomplete_gamma(2.0, 0.0), WithinAbs(1.0, 1e-14));
    CHECK_THAT(specfun::upper_incomplete_gamma(1.5, 0.0), WithinRel(std::sqrt(std::numbers::pi) / 2.0, 1e-12));

    // mpmath gammainc at 30 digits
    struct Ref { double s, x, value; };
    const Ref refs[] = {
        {0.5, 0.1, 1.16046248479374423}, {0.5, 1.0, 0.278805585280661976}, {0.5, 10.0, 1.37262662354498577e-05},
        {0.5, 50.0, 2.70116756720147330e-23}, {9.0 / 7.0, 0.1, 0.861651549609253109},
        {9.0 / 7.0, 1.0, 0.439458138268077063}, {9.0 / 7.0, 10.0, 9.00035295999441881e-05},
        {9.0 / 7.0, 50.0, 5.93111602949843795e-22}, {1.5, 1.0, 0.507282233811773310},
        {2.5, 10.0, 1.66131731177946006e-03}};
    for (const auto &r : refs)
    {
        INFO("s=" << r.s << " x=" << r.x);
        CHECK_THAT(specfun::upper_incomplete_gamma(r.s, r.x), WithinRel(r.value, 1e-10));
    }
}

TEST_CASE("Upper incomplete gamma - quadrature oracle at s = 9/7")
{
    const double s = 9.0 / 7.0;
    const auto f = [s](double t) { return std::pow(t, s - 1.0) * std::exp(-t); };
    const double oracle = specfun::integrate_to_infinity(f, 0.5, {1e-14, 1e-12, 4000}, 5.0);
    CHECK_THAT(specfun::upper_incomplete_gamma(s, 0.5), WithinAbs(oracle, 1e-8));
    CHECK_THAT(oracle, WithinAbs(0.656655479123830017, 1e-10));
}

TEST_CASE("Upper incomplete gamma - recurrence")
{
    for (double s : {0.5, 9.0 / 7.0, 1.5})
        for (double x : {0.1, 1.0, 10.0})
        {
            const double lhs = specfun::upper_incomplete_gamma(s + 1.0, x);
            const double rhs = s * specfun::upper_incomplete_gamma(s, x) + std::pow(x, s) * std::exp(-x);
            INFO("s=" << s << " x=" << x);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
        }
}

TEST_CASE("Upper incomplete gamma - monotone and continuous across the series/fraction split")
{
    for (double s : {0.5, 9.0 / 7.0, 1.5, 2.0})
    {
        double prev = specfun::upper_incomplete_gamma(s, 0.0);
        for (double x = 0.01; x < 20.0; x += 0.01)
        {
            const double v = specfun::upper_incomplete_gamma(s, x);
            REQUIRE(v < prev);
            prev = v;
        }
        const double split = s + 1.0;
        const double below = specfun::upper_incomplete_gamma(s, std::nextafter(split, 0.0));
        const double above = specfun::upper_incomplete_gamma(s, split);
        CHECK_THAT(below, WithinRel(above, 1e-10));
    }
}

TEST_CASE("Scaled incomplete gamma stays finite for large arguments")
{
    const double s = 9.0 / 7.0;
    for (double x : {1.0, 5.0, 30.0})
        CHECK_THAT(specfun::scaled_upper_incomplete_gamma(s, x),
                   WithinRel(std::exp(x) * specfun::upper_incomplete_gamma(s, x), 1e-10));
    const double big = specfun::scaled_upper_incomplete_gamma(s, 800.0);
    CHECK(std::isfinite(big));
    // e^x Gamma(s,x) ~ x^(s-1) (1 + (s-1)/x) for large x
    CHECK_THAT(big, WithinRel(std::pow(800.0, s - 1.0) * (1.0 + (s - 1.0) / 800.0), 1e-5));
}

TEST_CASE("Upper incomplete gamma - domain errors")
{
    CHECK_THROWS_AS(specfun::upper_incomplete_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::upper_incomplete_gamma(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::upper_incomplete_gamma(std::numeric_limits<double>::quiet_NaN(), 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(specfun::upper_incomplete_gamma(1.0, std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("Integrate - basic cases")
{
    CHECK_THAT(specfun::integrate([](double t) { return t * t; }, 0.0, 1.0), WithinAbs(1.0 / 3.0, 1e-14));
    CHECK_THAT(specfun::integrate_to_infinity([](double t) { return std::exp(-t); }, 0.0), WithinAbs(1.0, 1e-10));
    CHECK(specfun::integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(specfun::integrate([](double t) { return t; }, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::integrate([](double t) { return 1.0 / (t - 0.5) / 0.0; }, 0.0, 1.0),
                    std::domain_error);
}

TEST_CASE("Integrate - convergence failure carries the best estimate")
{
    const auto f = [](double t) { return std::sin(1.0 / t) / t; };
    try
    {
        specfun::integrate(f, 1e-6, 1.0, {1e-15, 1e-15, 5});
        FAIL("expected ConvergenceError");
    }
    catch (const specfun::ConvergenceError &e)
    {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error_bound() > 0.0);
    }
}

TEST_CASE("Integrate - deterministic")
{
    const auto f = [](double t) { return std::exp(-t) * std::cos(3.0 * t); };
    const double a = specfun::integrate(f, 0.0, 10.0);
    const double b = specfun::integrate(f, 0.0, 10.0);
    CHECK(a == b);
}

TEST_CASE("Integrate - linearity on random polynomials")
{
    std::mt19937_64 gen(20260417);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        double p[6], q[6];
        for (int i = 0; i < 6; ++i) p[i] = coef(gen), q[i] = coef(gen);
        const double alpha = coef(gen), beta = coef(gen);
        const double a = coef(gen), b = a + std::abs(coef(gen)) + 0.1;
        auto poly = [](const double *c) {
            return [c](double t) {
                double v = 0.0;
                for (int i = 5; i >= 0; --i) v = v * t + c[i];
                return v;
            };
        };
        const auto f = poly(p), g = poly(q);
        const double lhs = specfun::integrate([&](double t) { return alpha * f(t) + beta * g(t); }, a, b);
        const double rhs = alpha * specfun::integrate(f, a, b) + beta * specfun::integrate(g, a, b);
        REQUIRE_THAT(lhs, WithinAbs(rhs, 1e-9 * std::max(1.0, std::abs(rhs))));
    }
}

TEST_CASE("Integrate - distance-law hazard against a fixed-step Simpson oracle")
{
    const auto params = nearestdist::DistancePdfParams::from_parent(2e-5, 100.0, 100.0);
    const auto rate = [&](double y) {
        return 2.0 * std::numbers::pi * y * params.lambda_parent *
               nearestdist::retention_kernel(std::sqrt(std::max(0.0, y * y - 100.0 * 100.0)), params);
    };
    const double a = 100.0, b = 250.0;
    const int n = 100000;
    const double h = (b - a) / n;
    double simpson = rate(a) + rate(b);
    for (int i = 1; i < n; ++i) simpson += (i % 2 ? 4.0 : 2.0) * rate(a + i * h);
    simpson *= h / 3.0;

    const double value = nearestdist::cumulative_hazard(b, params);
    CHECK(value > 0.0);
    CHECK(std::isfinite(value));
    CHECK_THAT(value, WithinRel(simpson, 1e-8));
}
