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

#ifndef AERIAL_D2D_NEARESTDIST_HPP
#define AERIAL_D2D_NEARESTDIST_HPP

#include "aerial_d2d/specfun.hpp"

#include <cstdint>
#include <vector>

namespace aerial_d2d::nearestdist {

// Parameters of the user-to-nearest-platform slant distance law under MHCP
// platform placement at altitude L.
struct DistancePdfParams
{
    double lambda_parent = 0.0;
    double lambda_retained = 0.0;
    double delta = 0.0;
    double altitude = 0.0;

    // Fills lambda_retained from the hard-core thinning formula.
    static DistancePdfParams from_parent(double lambda_parent, double delta, double altitude);

    void validate() const;
};

// Lens area of two radius-delta disks whose centres are x apart; 0 beyond 2 delta.
double lens_area_g(double x, double delta);

// (1 - exp(-z)) / z with z = lambda_P (pi delta^2 - g(x, delta)); tends to 1 as x -> 0
// and to the MHCP retention probability for x > 2 delta.
double retention_kernel(double x, const DistancePdfParams &params);

// H(r) = int_L^r 2 pi y lambda_P k(sqrt(y^2 - L^2)) dy; zero for r <= L.
double cumulative_hazard(double r, const DistancePdfParams &params, const specfun::QuadratureSpec &quad = {});

// Exact-form density of the slant distance r: H'(r) exp(-H(r)). Zero for r < L.
double pdf_exact(double r, const DistancePdfParams &params, const specfun::QuadratureSpec &quad = {});
double cdf_exact(double r, const DistancePdfParams &params, const specfun::QuadratureSpec &quad = {});

// Rayleigh-type approximation 2 lambda_B pi r exp(-lambda_B pi (r^2 - L^2)). Zero for r < L.
double pdf_approx(double r, double lambda_retained, double L);
double cdf_approx(double r, double lambda_retained, double L);

// Evaluates pdf_exact at increasing radii, accumulating the hazard piecewise
// instead of restarting the integral from L at every point.
std::vector<double> pdf_exact_on_grid(const std::vector<double> &radii, const DistancePdfParams &params,
                                      const specfun::QuadratureSpec &quad = {});

// n uniform points on [L, L + 5 / sqrt(lambda_B pi)].
std::vector<double> evaluation_grid(double lambda_retained, double L, int n = 500);
double evaluation_upper_edge(double lambda_retained, double L);

struct NearestDistanceSample
{
    double distance = 0.0;
    int resamples = 0; // empty realisations that were skipped
};

// One MHCP realisation on the disk of radius region_radius; returns the slant
// distance from the disk centre to its nearest platform. Empty realisations
// are redrawn with the next sub-seed.
NearestDistanceSample sample_nearest_distance(const DistancePdfParams &params, double region_radius,
                                              std::uint64_t rng_seed);

} // namespace aerial_d2d::nearestdist

#endif
