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

#include "aerial_d2d/montecarlo.hpp"

#include "aerial_d2d/association.hpp"
#include "aerial_d2d/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace aerial_d2d::montecarlo {

namespace {

constexpr std::uint64_t kChunk = 512;
constexpr int kMaxResamples = 1000;

// Draws MHCP realisations until one is non-empty.
pointprocess::PointPattern nonempty_platforms(const DeploymentConfig &dep, Rng &rng, std::uint32_t &empties)
{
    for (int i = 0; i < kMaxResamples; ++i)
    {
        auto p = pointprocess::sample_mhcp(dep.mhcp(), dep.region_radius, rng);
        if (!p.empty()) return p;
        ++empties;
    }
    throw pointprocess::NoCoverageError("no platform in " + std::to_string(kMaxResamples) + " realisations");
}

} // namespace

double DeploymentConfig::lambda_retained() const
{
    return pointprocess::mhcp_density(mhcp());
}

void DeploymentConfig::validate() const
{
    mhcp().validate();
    if (!std::isfinite(region_radius) || !(region_radius > 0.0))
        throw std::domain_error("deployment.region_radius must be > 0");
    if (!std::isfinite(altitude) || !(altitude > 0.0)) throw std::domain_error("deployment.altitude must be > 0");
    if (!(lambda_tx >= 0.0) || !(lambda_rx >= 0.0))
        throw std::domain_error("deployment.lambda_tx and lambda_rx must be >= 0");
}

modeselect::SchemeConfig ExperimentConfig::scheme_config() const
{
    return {scheme, association_probability, deployment.region_radius, deployment.altitude};
}

void ExperimentConfig::validate() const
{
    deployment.validate();
    env.validate();
    carrier.validate();
    power.validate();
    scheme_config().validate();
    if (n_replicates < 1) throw std::domain_error("n_replicates must be >= 1");
    if (worker_count < 1) throw std::domain_error("worker_count must be >= 1");
    if (d_bar_th_override && !(*d_bar_th_override >= 0.0))
        throw std::domain_error("d_bar_th override must be >= 0");
}

std::vector<ReplicateOutcome> run_replicates(std::uint64_t n, std::uint64_t base_seed, unsigned workers,
                                             const std::function<ReplicateOutcome(std::uint64_t, std::uint64_t)> &fn)
{
    std::vector<ReplicateOutcome> out(n);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try
        {
            for (;;)
            {
                const std::uint64_t begin = next.fetch_add(kChunk);
                if (begin >= n) return;
                const std::uint64_t end = std::min(n, begin + kChunk);
                for (std::uint64_t i = begin; i < end; ++i) out[i] = fn(i, derive_seed(base_seed, i));
            }
        }
        catch (...)
        {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(n);
        }
    };

    const unsigned n_threads = std::max(1u, workers);
    if (n_threads == 1)
        work();
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

double decision_threshold(const ExperimentConfig &config)
{
    if (config.d_bar_th_override) return *config.d_bar_th_override;
    return modeselect::avg_dth(config.power, config.deployment.lambda_retained(), config.deployment.altitude,
                               config.env, config.carrier);
}

EstimateWithCI estimate_p_d2d(const ExperimentConfig &config)
{
    config.validate();
    const double d_bar = decision_threshold(config);
    const auto &dep = config.deployment;
    const assoc::LinkInputs inputs{dep.altitude, config.env, config.carrier, config.power,
                                   config.association_probability};

    auto replicate = [&](std::uint64_t, std::uint64_t seed) {
        Rng rng = make_rng(seed);
        const auto platforms = pointprocess::sample_mhcp(dep.mhcp(), dep.region_radius, rng);
        const pointprocess::Point tx{0.0, 0.0};
        pointprocess::Point rx = pointprocess::uniform_in_disk(dep.region_radius, rng);
        while (rx.x == 0.0 && rx.y == 0.0) rx = pointprocess::uniform_in_disk(dep.region_radius, rng);
        const auto link = assoc::build_link_state(tx, rx, platforms, inputs, rng());
        const auto mode = modeselect::decide(config.scheme, link, d_bar, config.power);
        return ReplicateOutcome{mode == modeselect::ModeDecision::D2D ? 1.0 : 0.0,
                                platforms.empty() ? 1u : 0u};
    };

    const auto outcomes = run_replicates(config.n_replicates, config.base_seed, config.worker_count, replicate);
    EstimateWithCI est;
    double hits = 0.0;
    for (const auto &o : outcomes)
    {
        hits += o.value;
        est.empty_realizations += o.empty_realizations;
    }
    est.n = outcomes.size();
    est.mean = hits / static_cast<double>(est.n);
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(est.n));
    return est;
}

EstimateWithCI estimate_avg_dth(const ExperimentConfig &config)
{
    config.validate();
    const auto &dep = config.deployment;
    const double a_dd = channel::d2d_attenuation(config.carrier);
    const double a_t = modeselect::a_tilde(dep.lambda_retained(), dep.altitude, config.env, config.carrier);
    const double alpha = config.env.alpha;

    auto replicate = [&](std::uint64_t, std::uint64_t seed) {
        Rng rng = make_rng(seed);
        std::uint32_t empties = 0;
        const pointprocess::Point centre{0.0, 0.0};
        const double h_ul = pointprocess::nearest_point_distance(centre, nonempty_platforms(dep, rng, empties));
        const double h_dl = pointprocess::nearest_point_distance(centre, nonempty_platforms(dep, rng, empties));
        const double r_ul = std::hypot(h_ul, dep.altitude);
        const double r_dl = std::hypot(h_dl, dep.altitude);
        return ReplicateOutcome{modeselect::dth_instantaneous(r_ul, r_dl, config.power, a_t, a_t, a_dd, alpha),
                                empties};
    };

    const auto outcomes = run_replicates(config.n_replicates, config.base_seed, config.worker_count, replicate);
    EstimateWithCI est;
    est.n = outcomes.size();
    double sum = 0.0;
    for (const auto &o : outcomes)
    {
        sum += o.value;
        est.empty_realizations += o.empty_realizations;
    }
    est.mean = sum / static_cast<double>(est.n);
    double ss = 0.0;
    for (const auto &o : outcomes) ss += (o.value - est.mean) * (o.value - est.mean);
    const double var = est.n > 1 ? ss / static_cast<double>(est.n - 1) : 0.0;
    est.std_error = std::sqrt(var / static_cast<double>(est.n));
    return est;
}

Histogram pdf_histogram(const ExperimentConfig &config, int n_bins)
{
    if (n_bins < 2) throw std::invalid_argument("pdf_histogram: n_bins must be >= 2");
    // Only the geometry matters here; powers and the channel may be left unset.
    config.deployment.validate();
    if (config.n_replicates < 1) throw std::domain_error("n_replicates must be >= 1");
    if (config.worker_count < 1) throw std::domain_error("worker_count must be >= 1");
    const auto &dep = config.deployment;
    const auto params = nearestdist::DistancePdfParams::from_parent(dep.lambda_parent, dep.delta, dep.altitude);
    const double lo = dep.altitude;
    const double hi = nearestdist::evaluation_upper_edge(params.lambda_retained, lo);
    const double width = (hi - lo) / n_bins;

    auto replicate = [&](std::uint64_t, std::uint64_t seed) {
        const auto s = nearestdist::sample_nearest_distance(params, dep.region_radius, seed);
        return ReplicateOutcome{s.distance, static_cast<std::uint32_t>(s.resamples)};
    };
    const auto outcomes = run_replicates(config.n_replicates, config.base_seed, config.worker_count, replicate);

    Histogram h;
    h.bins.resize(static_cast<std::size_t>(n_bins));
    for (int i = 0; i < n_bins; ++i)
    {
        auto &b = h.bins[static_cast<std::size_t>(i)];
        b.lo = lo + width * i;
        b.hi = (i + 1 == n_bins) ? hi : lo + width * (i + 1);
        b.center = 0.5 * (b.lo + b.hi);
    }
    for (const auto &o : outcomes)
    {
        h.empty_realizations += o.empty_realizations;
        if (o.value < lo || o.value > hi)
        {
            ++h.n_outside;
            continue;
        }
        const auto idx = std::min<std::size_t>(static_cast<std::size_t>((o.value - lo) / width),
                                               static_cast<std::size_t>(n_bins - 1));
        ++h.bins[idx].count;
    }
    h.n_samples = outcomes.size();
    const double inside = static_cast<double>(h.n_samples - h.n_outside);
    if (inside > 0.0)
        for (auto &b : h.bins)
        {
            const double w = b.hi - b.lo;
            const double frac = static_cast<double>(b.count) / inside;
            b.density = frac / w;
            b.std_error = std::sqrt(frac * (1.0 - frac) / inside) / w;
        }
    return h;
}

std::vector<BinComparison> compare_to_cdf(const Histogram &hist, const std::function<double(double)> &cdf,
                                          double k_sigma)
{
    std::vector<BinComparison> out;
    out.reserve(hist.bins.size());
    const double n = static_cast<double>(hist.n_samples - hist.n_outside);
    for (const auto &b : hist.bins)
    {
        const double w = b.hi - b.lo;
        const double p = std::clamp(cdf(b.hi) - cdf(b.lo), 0.0, 1.0);
        BinComparison c;
        c.expected_density = p / w;
        c.model_std_error = n > 0.0 ? std::sqrt(p * (1.0 - p) / n) / w : 0.0;
        c.within = std::abs(b.density - c.expected_density) <= k_sigma * c.model_std_error;
        out.push_back(c);
    }
    return out;
}

} // namespace aerial_d2d::montecarlo
