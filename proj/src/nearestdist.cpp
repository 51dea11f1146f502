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

#include "aerial_d2d/nearestdist.hpp"

#include "aerial_d2d/pointprocess.hpp"
#include "aerial_d2d/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aerial_d2d::nearestdist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxResamples = 1000;

// Horizontal offset at which g(., delta) stops contributing.
double kink_radius(const DistancePdfParams &p)
{
    return std::sqrt(p.altitude * p.altitude + 4.0 * p.delta * p.delta);
}

double hazard_rate(double y, const DistancePdfParams &p)
{
    const double h = std::sqrt(std::max(0.0, y * y - p.altitude * p.altitude));
    return 2.0 * kPi * y * p.lambda_parent * retention_kernel(h, p);
}

double hazard_between(double lo, double hi, const DistancePdfParams &p, const specfun::QuadratureSpec &quad)
{
    if (hi <= lo) return 0.0;
    auto rate = [&p](double y) { return hazard_rate(y, p); };
    const double kink = kink_radius(p);
    if (lo < kink && kink < hi)
        return specfun::integrate(rate, lo, kink, quad) + specfun::integrate(rate, kink, hi, quad);
    return specfun::integrate(rate, lo, hi, quad);
}

} // namespace

DistancePdfParams DistancePdfParams::from_parent(double lambda_parent, double delta, double altitude)
{
    DistancePdfParams p{lambda_parent, 0.0, delta, altitude};
    p.lambda_retained = pointprocess::mhcp_density({lambda_parent, delta});
    return p;
}

void DistancePdfParams::validate() const
{
    if (!std::isfinite(altitude) || !(altitude > 0.0))
        throw std::domain_error("DistancePdfParams: altitude must be > 0");
    const double expected = pointprocess::mhcp_density({lambda_parent, delta});
    if (!(std::abs(lambda_retained - expected) <= 1e-12 * expected))
        throw std::domain_error("DistancePdfParams: lambda_retained inconsistent with lambda_parent and delta");
}

double lens_area_g(double x, double delta)
{
    if (!(x >= 0.0) || !(delta >= 0.0)) throw std::domain_error("lens_area_g: require x >= 0, delta >= 0");
    if (x > 2.0 * delta) return 0.0;
    if (x == 0.0) return kPi * delta * delta;
    return 2.0 * delta * delta * std::acos(x / (2.0 * delta)) - 0.5 * x * std::sqrt(4.0 * delta * delta - x * x);
}

double retention_kernel(double x, const DistancePdfParams &params)
{
    const double exposed = std::max(0.0, kPi * params.delta * params.delta - lens_area_g(x, params.delta));
    const double z = params.lambda_parent * exposed;
    if (z < 1e-6) return 1.0 - z / 2.0 + z * z / 6.0;
    return -std::expm1(-z) / z;
}

double cumulative_hazard(double r, const DistancePdfParams &params, const specfun::QuadratureSpec &quad)
{
    return hazard_between(params.altitude, r, params, quad);
}

double pdf_exact(double r, const DistancePdfParams &params, const specfun::QuadratureSpec &quad)
{
    if (r < params.altitude) return 0.0;
    return hazard_rate(r, params) * std::exp(-cumulative_hazard(r, params, quad));
}

double cdf_exact(double r, const DistancePdfParams &params, const specfun::QuadratureSpec &quad)
{
    if (r <= params.altitude) return 0.0;
    return -std::expm1(-cumulative_hazard(r, params, quad));
}

std::vector<double> pdf_exact_on_grid(const std::vector<double> &radii, const DistancePdfParams &params,
                                      const specfun::QuadratureSpec &quad)
{
    if (!std::is_sorted(radii.begin(), radii.end()))
        throw std::invalid_argument("pdf_exact_on_grid: radii must be sorted");
    std::vector<double> out;
    out.reserve(radii.size());
    double hazard = 0.0;
    double last = params.altitude;
    for (double r : radii)
    {
        if (r < params.altitude)
        {
            out.push_back(0.0);
            continue;
        }
        hazard += hazard_between(last, r, params, quad);
        last = r;
        out.push_back(hazard_rate(r, params) * std::exp(-hazard));
    }
    return out;
}

double pdf_approx(double r, double lambda_retained, double L)
{
    if (!(lambda_retained > 0.0)) throw std::domain_error("pdf_approx: lambda_retained must be > 0");
    if (r < L) return 0.0;
    return 2.0 * lambda_retained * kPi * r * std::exp(-lambda_retained * kPi * (r * r - L * L));
}

double cdf_approx(double r, double lambda_retained, double L)
{
    if (!(lambda_retained > 0.0)) throw std::domain_error("cdf_approx: lambda_retained must be > 0");
    if (r <= L) return 0.0;
    return -std::expm1(-lambda_retained * kPi * (r * r - L * L));
}

double evaluation_upper_edge(double lambda_retained, double L)
{
    return L + 5.0 / std::sqrt(lambda_retained * kPi);
}

std::vector<double> evaluation_grid(double lambda_retained, double L, int n)
{
    if (n < 2) throw std::invalid_argument("evaluation_grid: n must be >= 2");
    const double hi = evaluation_upper_edge(lambda_retained, L);
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = L + (hi - L) * i / (n - 1);
    return grid;
}

NearestDistanceSample sample_nearest_distance(const DistancePdfParams &params, double region_radius,
                                              std::uint64_t rng_seed)
{
    const pointprocess::MhcpParams mhcp{params.lambda_parent, params.delta};
    for (int attempt = 0; attempt < kMaxResamples; ++attempt)
    {
        const auto platforms = pointprocess::sample_mhcp(mhcp, region_radius, derive_seed(rng_seed, attempt));
        if (platforms.empty()) continue;
        const double h = pointprocess::nearest_point_distance({0.0, 0.0}, platforms);
        return {std::hypot(h, params.altitude), attempt};
    }
    throw pointprocess::NoCoverageError("sample_nearest_distance: no platform in " +
                                        std::to_string(kMaxResamples) + " realisations");
}

} // namespace aerial_d2d::nearestdist
