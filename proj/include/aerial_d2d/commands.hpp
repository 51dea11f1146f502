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

#ifndef AERIAL_D2D_COMMANDS_HPP
#define AERIAL_D2D_COMMANDS_HPP

#include "aerial_d2d/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aerial_d2d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitConvergence = 3;

// Seed used when neither --seed nor mc.seed is given.
inline constexpr const char *kSeedEnvVar = "AERIAL_D2D_SEED";
std::uint64_t default_seed();

std::string tool_version();

struct CommandOptions
{
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    std::optional<double> l_min;
    std::optional<double> l_max;
    std::optional<int> n_points;
};

// Writes r_m,pdf_exact,pdf_approx,hist_density,hist_stderr plus <out>.manifest.
int cmd_pdf(const CommandOptions &opts, std::ostream &log);

// Writes one row per (scheme, environment, RSS threshold, L) plus <out>.manifest.
int cmd_pd2d_sweep(const CommandOptions &opts, std::ostream &log);

// Evaluates one closed-form expression from key=value arguments and prints
// the value with 10 significant digits followed by its unit.
int cmd_eval(const std::string &expression, const std::vector<std::string> &params, std::ostream &out,
             std::ostream &err);

// Runs `body`, mapping ConfigError -> 2, ConvergenceError -> 3, other errors -> 1.
template <typename Fn>
int guarded(std::ostream &err, Fn &&body);

struct PdfSummary
{
    double mean_abs_error = 0.0;
    std::size_t grid_points = 0;
    std::size_t bins_within_3se = 0;
    std::size_t bins = 0;
};

// Pure computation behind cmd_pdf; returns the CSV text.
std::string render_pdf_csv(const RunConfig &cfg, PdfSummary &summary);

// Pure computation behind cmd_pd2d_sweep; returns the CSV text.
std::string render_sweep_csv(const RunConfig &cfg);

} // namespace aerial_d2d::cli

#include "aerial_d2d/detail/guarded.hpp"

#endif
