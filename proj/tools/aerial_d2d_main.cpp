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

#include "aerial_d2d/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace aerial_d2d::cli;

int main(int argc, char **argv)
{
    CLI::App app{"Stochastic-geometry evaluation of D2D-enabled aerial networks", "aerial-d2d"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    CommandOptions opts;
    unsigned workers = 0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", opts.config_path, "Key-value configuration file")->required();
        sub->add_option("--out", opts.out_path, "Output CSV path")->required();
        sub->add_option("--seed", seed, "Base RNG seed (overrides mc.seed)");
        sub->add_option("--workers", workers, "Worker threads (overrides mc.workers)")->check(CLI::PositiveNumber);
    };

    auto *pdf = app.add_subcommand("pdf", "Nearest-platform distance PDF: exact, approximate and simulated");
    add_common(pdf);

    auto *sweep = app.add_subcommand("pd2d-sweep", "D2D mode probability versus platform altitude");
    add_common(sweep);
    double l_min = 0, l_max = 0;
    int n_points = 0;
    sweep->add_option("--l-min", l_min, "Smallest altitude in metres");
    sweep->add_option("--l-max", l_max, "Largest altitude in metres");
    sweep->add_option("--n-points", n_points, "Number of altitudes")->check(CLI::Range(2, 1000000));

    auto *eval = app.add_subcommand("eval", "Evaluate one closed-form expression");
    std::string expression;
    std::vector<std::string> params;
    eval->add_option("expression", expression, "mhcp_density | avg_dth | p_d2d | plos | atg_attenuation")
        ->required();
    eval->add_option("params", params, "key=value arguments");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    auto apply = [&](CLI::App *sub) {
        if (sub->count("--seed")) opts.seed = seed;
        if (sub->count("--workers")) opts.workers = workers;
    };

    if (*pdf)
    {
        apply(pdf);
        return guarded(std::cerr, [&] { return cmd_pdf(opts, std::cerr); });
    }
    if (*sweep)
    {
        apply(sweep);
        if (sweep->count("--l-min")) opts.l_min = l_min;
        if (sweep->count("--l-max")) opts.l_max = l_max;
        if (sweep->count("--n-points")) opts.n_points = n_points;
        return guarded(std::cerr, [&] { return cmd_pd2d_sweep(opts, std::cerr); });
    }
    return cmd_eval(expression, params, std::cout, std::cerr);
}
