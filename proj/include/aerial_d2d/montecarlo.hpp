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

#ifndef AERIAL_D2D_MONTECARLO_HPP
#define AERIAL_D2D_MONTECARLO_HPP

#include "aerial_d2d/channel.hpp"
#include "aerial_d2d/modeselect.hpp"
#include "aerial_d2d/nearestdist.hpp"
#include "aerial_d2d/pointprocess.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace aerial_d2d::montecarlo {

struct DeploymentConfig
{
    double lambda_parent = 0.0;   // MHCP parent intensity, 1/m^2
    double delta = 0.0;           // hard-core distance, m
    double region_radius = 500.0; // simulation disk R, m
    double altitude = 100.0;      // platform altitude L, m
    double lambda_tx = 1e-3;      // kept for completeness; one Tx/Rx pair per replicate
    double lambda_rx = 1e-3;

    double lambda_retained() const;
    pointprocess::MhcpParams mhcp() const { return {lambda_parent, delta}; }
    void validate() const;
};

struct ExperimentConfig
{
    DeploymentConfig deployment;
    channel::EnvironmentProfile env = channel::high_rise_urban();
    channel::CarrierConfig carrier;
    modeselect::PowerConfig power;
    modeselect::Scheme scheme = modeselect::Scheme::TDDS;
    double association_probability = 0.5;
    std::uint64_t n_replicates = 10000;
    std::uint64_t base_seed = 1;
    unsigned worker_count = 1;
    // Replaces the closed-form average threshold distance when set.
    std::optional<double> d_bar_th_override;

    modeselect::SchemeConfig scheme_config() const;
    void validate() const;
};

struct EstimateWithCI
{
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
    std::uint64_t empty_realizations = 0;
};

struct HistogramBin
{
    double lo = 0.0;
    double hi = 0.0;
    double center = 0.0;
    std::uint64_t count = 0;
    double density = 0.0;
    double std_error = 0.0;
};

struct Histogram
{
    std::vector<HistogramBin> bins;
    std::uint64_t n_samples = 0;
    std::uint64_t n_outside = 0;
    std::uint64_t empty_realizations = 0;
};

struct ReplicateOutcome
{
    double value = 0.0;
    std::uint32_t empty_realizations = 0;
};

// Runs fn(index, seed) for index in [0, n) on `workers` threads, seeds from
// derive_seed(base_seed, index). Outcomes come back in index order whatever
// the scheduling, so reductions over them are bit-reproducible.
std::vector<ReplicateOutcome> run_replicates(std::uint64_t n, std::uint64_t base_seed, unsigned workers,
                                             const std::function<ReplicateOutcome(std::uint64_t, std::uint64_t)> &fn);

// d_bar_th used by the decision rules: the override if present, else avg_dth.
double decision_threshold(const ExperimentConfig &config);

// Fraction of replicates that end in D2D mode. Per replicate: one MHCP
// platform draw, Tx at the disk centre, Rx uniform on the disk, decoupled
// nearest-platform association and a Bernoulli(p) association flag.
EstimateWithCI estimate_p_d2d(const ExperimentConfig &config);

// Sample mean of the instantaneous threshold distance with A_UL = A_DL = A_tilde.
// r_UL and r_DL come from two independent platform realisations, each
// measured from its disk centre.
EstimateWithCI estimate_avg_dth(const ExperimentConfig &config);

// Normalised histogram of n_replicates nearest-distance draws over
// [L, L + 5 / sqrt(lambda_B pi)].
Histogram pdf_histogram(const ExperimentConfig &config, int n_bins);

struct BinComparison
{
    double expected_density = 0.0;  // bin mass under the reference CDF / bin width
    double model_std_error = 0.0;   // binomial SE of the density under the reference law
    bool within = false;            // |observed - expected| <= k_sigma * model_std_error
};

// Checks each bin against a reference CDF. The standard error comes from the
// reference bin probability, so empty tail bins are judged fairly.
std::vector<BinComparison> compare_to_cdf(const Histogram &hist, const std::function<double(double)> &cdf,
                                          double k_sigma = 3.0);

} // namespace aerial_d2d::montecarlo

#endif
