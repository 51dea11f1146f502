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

#ifndef AERIAL_D2D_POINTPROCESS_HPP
#define AERIAL_D2D_POINTPROCESS_HPP

#include "aerial_d2d/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace aerial_d2d::pointprocess {

struct Point
{
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point &a, const Point &b) noexcept;

// Finite planar point set on the disk of radius region_radius centred at the origin.
struct PointPattern
{
    std::vector<Point> points;
    double region_radius = 0.0;

    bool empty() const noexcept { return points.empty(); }
    std::size_t size() const noexcept { return points.size(); }
};

// Matern type II hard-core parameters: parent intensity and hard-core distance.
struct MhcpParams
{
    double lambda_parent = 0.0;
    double delta = 0.0;

    void validate() const;
};

// Thrown by nearest_point_distance when there is nothing to associate with.
class NoCoverageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Homogeneous PPP on the disk: Poisson(density*pi*R^2) points, uniform positions.
PointPattern sample_ppp(double density, double region_radius, std::uint64_t rng_seed);
PointPattern sample_ppp(double density, double region_radius, Rng &rng);

// Type II thinning. Each parent draws a uniform mark on [0,1); a parent is
// kept iff no other parent closer than delta has a strictly smaller mark
// (equal marks compare by index). Output keeps the input's region.
PointPattern mhcp_thin(const PointPattern &parents, double delta, std::uint64_t rng_seed);
PointPattern mhcp_thin(const PointPattern &parents, double delta, Rng &rng);

// Full MHCP realisation on the disk of radius R. Parents are drawn on R + delta
// and the thinned pattern is cropped back to R, so points near the rim are
// thinned against the same neighbourhood as interior points.
PointPattern sample_mhcp(const MhcpParams &params, double region_radius, std::uint64_t rng_seed);
PointPattern sample_mhcp(const MhcpParams &params, double region_radius, Rng &rng);

// Retained intensity (1 - exp(-pi lambda_P delta^2)) / (pi delta^2); lambda_P at delta = 0.
double mhcp_density(const MhcpParams &params);

// Inverse of mhcp_density in lambda_parent. Throws std::domain_error when the
// requested intensity is not reachable, i.e. lambda_retained >= 1/(pi delta^2).
double parent_density_for(double lambda_retained, double delta);

// Minimum Euclidean distance from origin to the pattern. Throws NoCoverageError if empty.
double nearest_point_distance(const Point &origin, const PointPattern &pattern);

// Index of the nearest point, same error behaviour.
std::size_t nearest_point_index(const Point &origin, const PointPattern &pattern);

Point uniform_in_disk(double radius, Rng &rng);

} // namespace aerial_d2d::pointprocess

#endif
