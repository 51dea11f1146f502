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

#ifndef AERIAL_D2D_CONFIG_HPP
#define AERIAL_D2D_CONFIG_HPP

#include "aerial_d2d/montecarlo.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aerial_d2d::cli {

// Invalid or missing configuration. what() is "<key>: <problem>".
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string key, const std::string &problem)
        : std::runtime_error(key + ": " + problem), key_(std::move(key)) {}

    const std::string &key() const noexcept { return key_; }

  private:
    std::string key_;
};

// Flat "section.key = value" text format. '#' starts a comment, blank lines
// are ignored, a repeated key is an error. Values may be comma-separated lists.
class KeyValueConfig
{
  public:
    static KeyValueConfig parse(std::string_view text, const std::string &origin = "<string>");
    static KeyValueConfig load(const std::string &path);

    bool has(const std::string &key) const;
    std::string require_string(const std::string &key) const;
    std::string get_string(const std::string &key, const std::string &fallback) const;
    double require_double(const std::string &key) const;
    double get_double(const std::string &key, double fallback) const;
    std::optional<double> find_double(const std::string &key) const;
    std::uint64_t get_uint(const std::string &key, std::uint64_t fallback) const;
    std::vector<std::string> get_list(const std::string &key, const std::vector<std::string> &fallback) const;
    std::vector<double> require_double_list(const std::string &key) const;

    void set(const std::string &key, const std::string &value);
    // Throws ConfigError on the first key not in `allowed`.
    void check_known(const std::vector<std::string> &allowed) const;

    const std::map<std::string, std::string> &entries() const noexcept { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

double parse_double(const std::string &key, const std::string &text);

// Every key the experiment loader understands.
const std::vector<std::string> &known_keys();

// Fully resolved run description shared by the pdf and pd2d-sweep commands.
struct RunConfig
{
    montecarlo::ExperimentConfig experiment;
    std::vector<channel::EnvironmentProfile> environments;
    std::vector<modeselect::Scheme> schemes;
    std::vector<double> rss_thresholds_dbm;
    double p_dd_dbm = 0.0;
    double p_ul_dbm = 0.0;
    double p_dl_dbm = 0.0;
    bool lambda_from_retained = false;
    double lambda_retained_requested = 0.0;
    int pdf_bins = 60;
    int pdf_grid_points = 500;
    double sweep_l_min = 0.0;
    double sweep_l_max = 0.0;
    int sweep_n_points = 0;
};

enum class Purpose
{
    Pdf,
    Sweep
};

// Builds a RunConfig; keys required depend on `purpose`. `default_seed`
// applies when the file has no mc.seed.
RunConfig load_run_config(const KeyValueConfig &kv, Purpose purpose, std::uint64_t default_seed);

// Config-format echo of every effective parameter, loadable as a config file.
std::string render_resolved(const RunConfig &cfg, Purpose purpose);

// Locale-independent shortest round-trip formatting.
std::string format_number(double v);
std::string format_number(double v, int significant_digits);

} // namespace aerial_d2d::cli

#endif
