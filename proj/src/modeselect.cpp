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

#include "aerial_d2d/modeselect.hpp"

#include "aerial_d2d/nearestdist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aerial_d2d::modeselect {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

} // namespace

void PowerConfig::validate() const
{
    for (double v : {p_dd, p_ul, p_dl, rss_threshold})
        if (!std::isfinite(v) || !(v > 0.0))
            throw std::domain_error("PowerConfig: all powers and the RSS threshold must be > 0");
}

void SchemeConfig::validate() const
{
    if (!(association_probability >= 0.0 && association_probability <= 1.0))
        throw std::domain_error("SchemeConfig: association_probability must lie in [0, 1]");
    if (!std::isfinite(region_radius) || !(region_radius > 0.0))
        throw std::domain_error("SchemeConfig: region_radius must be > 0");
    if (!std::isfinite(altitude) || !(altitude > 0.0))
        throw std::domain_error("SchemeConfig: altitude must be > 0");
}

std::string_view to_string(Scheme s) noexcept
{
    return s == Scheme::TDDS ? "TDDS" : "RSSS";
}

std::string_view to_string(ModeDecision m) noexcept
{
    switch (m)
    {
    case ModeDecision::D2D: return "D2D";
    case ModeDecision::Standard: return "Standard";
    case ModeDecision::NoService: return "NoService";
    }
    return "?";
}

Scheme parse_scheme(std::string_view text)
{
    if (text == "TDDS" || text == "tdds") return Scheme::TDDS;
    if (text == "RSSS" || text == "rsss") return Scheme::RSSS;
    throw std::invalid_argument("unknown scheme '" + std::string(text) + "' (expected TDDS or RSSS)");
}

double r_bar_th(const PowerConfig &power, double a_dd, double alpha)
{
    return std::pow(power.p_dd * a_dd / power.rss_threshold, 1.0 / alpha);
}

double dth_instantaneous(double r_ul, double r_dl, const PowerConfig &power, double a_ul, double a_dl, double a_dd,
                         double alpha)
{
    if (!(r_ul > 0.0) || !(r_dl > 0.0)) throw std::domain_error("dth_instantaneous: distances must be > 0");
    const double rss_ul = power.p_ul * a_ul / (r_ul * r_ul);
    const double rss_dl = power.p_dl * a_dl / (r_dl * r_dl);
    if (rss_dl >= rss_ul)
        return std::pow(power.p_dd * a_dd / (power.p_ul * a_ul), 1.0 / alpha) * std::pow(r_ul, 2.0 / alpha);
    return std::pow(power.p_dd * a_dd / (power.p_dl * a_dl), 1.0 / alpha) * std::pow(r_dl, 2.0 / alpha);
}

double a_tilde(double lambda_retained, double L, const channel::EnvironmentProfile &env,
               const channel::CarrierConfig &carrier)
{
    if (!(lambda_retained > 0.0)) throw std::domain_error("a_tilde: lambda_retained must be > 0");
    const double h_bar = 1.0 / (2.0 * std::sqrt(lambda_retained));
    return channel::atg_attenuation(h_bar, L, env, carrier);
}

double avg_dth(const PowerConfig &power, double lambda_retained, double L, const channel::EnvironmentProfile &env,
               const channel::CarrierConfig &carrier)
{
    const double alpha = env.alpha;
    const double s = (alpha + 1.0) / alpha;
    const double x = lambda_retained * kPi * L * L;
    const double a_dd = channel::d2d_attenuation(carrier);
    const double a_t = a_tilde(lambda_retained, L, env, carrier);
    const double ratio = (power.p_ul + power.p_dl) / power.p_ul;

    // e^x G(s,x) - e^{2x} ratio^{-s} G(s, ratio x), with e^{2x} G(s, ratio x)
    // rewritten as e^{(2 - ratio) x} * [e^{ratio x} G(s, ratio x)].
    const double first = specfun::scaled_upper_incomplete_gamma(s, x);
    const double second = std::exp((2.0 - ratio) * x) * std::pow(ratio, -s) *
                          specfun::scaled_upper_incomplete_gamma(s, ratio * x);
    const double lead = 2.0 * std::pow(power.p_dd * a_dd / (kPi * lambda_retained * power.p_ul * a_t), 1.0 / alpha);
    return lead * (first - second);
}

double avg_dth_quadrature(const PowerConfig &power, double lambda_retained, double L,
                          const channel::EnvironmentProfile &env, const channel::CarrierConfig &carrier,
                          const specfun::QuadratureSpec &quad)
{
    const double alpha = env.alpha;
    const double a_dd = channel::d2d_attenuation(carrier);
    const double a_t = a_tilde(lambda_retained, L, env, carrier);
    auto f = [lambda_retained, L](double r) { return nearestdist::pdf_approx(r, lambda_retained, L); };
    const double hint = std::min(1.0 / std::sqrt(lambda_retained * kPi), 1.0 / (lambda_retained * kPi * L));

    // Branch where the link with power `p_own` is the weaker one: its distance
    // r sets d_th, and the other link's distance runs up to sqrt(p_other/p_own) r.
    auto branch = [&](double p_own, double p_other) {
        const double k = std::pow(power.p_dd * a_dd / (p_own * a_t), 1.0 / alpha);
        const double stretch = std::sqrt(p_other / p_own);
        auto outer = [&](double r) {
            const double upper = std::max(L, stretch * r);
            const double inner = specfun::integrate(f, L, upper, quad);
            return k * std::pow(r, 2.0 / alpha) * f(r) * inner;
        };
        return specfun::integrate_to_infinity(outer, L, quad, hint);
    };
    return branch(power.p_ul, power.p_dl) + branch(power.p_dl, power.p_ul);
}

ModeDecision tdds_decide(const LinkState &link, double d_bar_th, const PowerConfig &power)
{
    if (link.d <= d_bar_th) return ModeDecision::D2D;
    if (link.tx_associated) return ModeDecision::Standard;
    if (link.rss_dd >= power.rss_threshold) return ModeDecision::D2D;
    return ModeDecision::NoService;
}

ModeDecision rsss_decide(const LinkState &link, double d_bar_th, const PowerConfig &power)
{
    if (link.rss_dd >= power.rss_threshold) return ModeDecision::D2D;
    if (link.d > d_bar_th && link.tx_associated) return ModeDecision::Standard;
    return ModeDecision::NoService;
}

ModeDecision decide(Scheme scheme, const LinkState &link, double d_bar_th, const PowerConfig &power)
{
    return scheme == Scheme::TDDS ? tdds_decide(link, d_bar_th, power) : rsss_decide(link, d_bar_th, power);
}

double p_d2d_tdds(double d_bar_th, const SchemeConfig &scheme, const PowerConfig &power, double a_dd, double alpha)
{
    const double d = d_bar_th;
    const double r = r_bar_th(power, a_dd, alpha);
    const double R = scheme.region_radius;
    const double R2 = R * R;
    const double q = 1.0 - scheme.association_probability;

    if (d <= r && r <= R) return clamp01(d * d / R2 + (r * r - d * d) * q / R2);
    if (d <= R && R < r) return clamp01(d * d / R2 + (1.0 - d * d / R2) * q);
    if (r <= d && d <= R) return clamp01(d * d / R2);
    return 1.0;
}

double p_d2d_rsss(const SchemeConfig &scheme, const PowerConfig &power, double a_dd, double alpha)
{
    // r_bar_th <= R is the same test as RSS_th >= P_DD A_DD / R^alpha.
    const double r = r_bar_th(power, a_dd, alpha);
    const double R = scheme.region_radius;
    if (r <= R) return clamp01(r * r / (R * R));
    return 1.0;
}

double p_d2d(double d_bar_th, const SchemeConfig &scheme, const PowerConfig &power, double a_dd, double alpha)
{
    return scheme.scheme == Scheme::TDDS ? p_d2d_tdds(d_bar_th, scheme, power, a_dd, alpha)
                                         : p_d2d_rsss(scheme, power, a_dd, alpha);
}

} // namespace aerial_d2d::modeselect
