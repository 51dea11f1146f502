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

#include "aerial_d2d/pointprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace aerial_d2d::pointprocess {

namespace {

void check_region(double region_radius)
{
    if (!std::isfinite(region_radius) || !(region_radius > 0.0))
        throw std::domain_error("region_radius must be finite and > 0");
}

// Uniform cell grid with cell side >= delta; neighbours closer than delta are
// always within the 3x3 block around a point's cell.
class CellGrid
{
  public:
    CellGrid(const std::vector<Point> &pts, double extent, double delta)
    {
        constexpr int max_cells_per_side = 512;
        cell_ = std::max(delta, 2.0 * extent / max_cells_per_side);
        origin_ = -extent;
        side_ = std::max(1, static_cast<int>(std::ceil(2.0 * extent / cell_)));
        start_.assign(static_cast<std::size_t>(side_) * side_ + 1, 0);
        cell_of_.resize(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
        {
            cell_of_[i] = index(cell_coord(pts[i].x), cell_coord(pts[i].y));
            ++start_[cell_of_[i] + 1];
        }
        for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
        members_.resize(pts.size());
        std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
        for (std::size_t i = 0; i < pts.size(); ++i) members_[fill[cell_of_[i]]++] = i;
    }

    int cell_coord(double v) const
    {
        const int c = static_cast<int>(std::floor((v - origin_) / cell_));
        return std::clamp(c, 0, side_ - 1);
    }

    template <typename Fn>
    void for_each_near(const Point &p, Fn &&fn) const
    {
        const int cx = cell_coord(p.x);
        const int cy = cell_coord(p.y);
        for (int gx = std::max(0, cx - 1); gx <= std::min(side_ - 1, cx + 1); ++gx)
            for (int gy = std::max(0, cy - 1); gy <= std::min(side_ - 1, cy + 1); ++gy)
            {
                const std::size_t c = index(gx, gy);
                for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) fn(members_[k]);
            }
    }

  private:
    std::size_t index(int gx, int gy) const
    {
        return static_cast<std::size_t>(gx) * static_cast<std::size_t>(side_) + static_cast<std::size_t>(gy);
    }

    double cell_ = 1.0;
    double origin_ = 0.0;
    int side_ = 1;
    std::vector<std::size_t> start_;
    std::vector<std::size_t> cell_of_;
    std::vector<std::size_t> members_;
};

} // namespace

double distance(const Point &a, const Point &b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

void MhcpParams::validate() const
{
    if (!std::isfinite(lambda_parent) || !(lambda_parent > 0.0))
        throw std::domain_error("MhcpParams: lambda_parent must be > 0");
    if (!std::isfinite(delta) || delta < 0.0)
        throw std::domain_error("MhcpParams: delta must be >= 0");
}

// Rejection from the bounding square: 4/pi pairs per point on average and no
// trigonometry, which is cheaper than the polar transform here.
Point uniform_in_disk(double radius, Rng &rng)
{
    for (;;)
    {
        const double x = 2.0 * uniform01(rng) - 1.0;
        const double y = 2.0 * uniform01(rng) - 1.0;
        if (x * x + y * y <= 1.0) return {radius * x, radius * y};
    }
}

PointPattern sample_ppp(double density, double region_radius, Rng &rng)
{
    if (!std::isfinite(density) || density < 0.0)
        throw std::domain_error("sample_ppp: density must be >= 0");
    check_region(region_radius);

    PointPattern out;
    out.region_radius = region_radius;
    const double mean = density * std::numbers::pi * region_radius * region_radius;
    if (mean == 0.0) return out;

    std::poisson_distribution<long> count_dist(mean);
    const long n = count_dist(rng);
    out.points.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out.points.push_back(uniform_in_disk(region_radius, rng));
    return out;
}

PointPattern sample_ppp(double density, double region_radius, std::uint64_t rng_seed)
{
    Rng rng = make_rng(rng_seed);
    return sample_ppp(density, region_radius, rng);
}

PointPattern mhcp_thin(const PointPattern &parents, double delta, Rng &rng)
{
    if (!std::isfinite(delta) || delta < 0.0)
        throw std::domain_error("mhcp_thin: delta must be >= 0");

    const auto &pts = parents.points;
    std::vector<double> marks(pts.size());
    for (auto &m : marks) m = uniform01(rng);

    PointPattern out;
    out.region_radius = parents.region_radius;
    if (delta == 0.0 || pts.size() < 2)
    {
        out.points = pts;
        return out;
    }

    double extent = parents.region_radius;
    for (const auto &p : pts) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    const CellGrid grid(pts, extent, delta);
    const double delta2 = delta * delta;

    out.points.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        bool kept = true;
        grid.for_each_near(pts[i], [&](std::size_t j) {
            if (!kept || j == i) return;
            const double dx = pts[i].x - pts[j].x;
            const double dy = pts[i].y - pts[j].y;
            if (dx * dx + dy * dy >= delta2) return;
            if (marks[j] < marks[i] || (marks[j] == marks[i] && j < i)) kept = false;
        });
        if (kept) out.points.push_back(pts[i]);
    }
    return out;
}

PointPattern mhcp_thin(const PointPattern &parents, double delta, std::uint64_t rng_seed)
{
    Rng rng = make_rng(rng_seed);
    return mhcp_thin(parents, delta, rng);
}

PointPattern sample_mhcp(const MhcpParams &params, double region_radius, Rng &rng)
{
    params.validate();
    check_region(region_radius);
    const PointPattern parents = sample_ppp(params.lambda_parent, region_radius + params.delta, rng);
    PointPattern thinned = mhcp_thin(parents, params.delta, rng);

    const double r2 = region_radius * region_radius;
    std::erase_if(thinned.points, [r2](const Point &p) { return p.x * p.x + p.y * p.y > r2; });
    thinned.region_radius = region_radius;
    return thinned;
}

PointPattern sample_mhcp(const MhcpParams &params, double region_radius, std::uint64_t rng_seed)
{
    Rng rng = make_rng(rng_seed);
    return sample_mhcp(params, region_radius, rng);
}

double mhcp_density(const MhcpParams &params)
{
    params.validate();
    if (params.delta == 0.0) return params.lambda_parent;
    const double area = std::numbers::pi * params.delta * params.delta;
    // -expm1 keeps full precision when lambda_P * area is tiny
    return -std::expm1(-params.lambda_parent * area) / area;
}

double parent_density_for(double lambda_retained, double delta)
{
    if (!std::isfinite(lambda_retained) || !(lambda_retained > 0.0))
        throw std::domain_error("parent_density_for: lambda_retained must be > 0");
    if (!std::isfinite(delta) || delta < 0.0)
        throw std::domain_error("parent_density_for: delta must be >= 0");
    if (delta == 0.0) return lambda_retained;
    const double area = std::numbers::pi * delta * delta;
    const double fill = lambda_retained * area;
    if (fill >= 1.0)
        throw std::domain_error("parent_density_for: retained density must stay below 1/(pi delta^2) = " +
                                std::to_string(1.0 / area));
    return -std::log1p(-fill) / area;
}

std::size_t nearest_point_index(const Point &origin, const PointPattern &pattern)
{
    if (pattern.empty()) throw NoCoverageError("nearest_point_distance: empty pattern");
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pattern.points.size(); ++i)
    {
        const double dx = pattern.points[i].x - origin.x;
        const double dy = pattern.points[i].y - origin.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2)
        {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

double nearest_point_distance(const Point &origin, const PointPattern &pattern)
{
    return distance(origin, pattern.points[nearest_point_index(origin, pattern)]);
}

} // namespace aerial_d2d::pointprocess
