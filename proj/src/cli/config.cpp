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

#include "aerial_d2d/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace aerial_d2d::cli {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string &value)
{
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        auto t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

channel::EnvironmentProfile custom_profile(const KeyValueConfig &kv)
{
    channel::EnvironmentProfile env;
    env.name = "custom";
    env.a = kv.require_double("env.a");
    env.b = kv.require_double("env.b");
    env.eta_los_db = kv.require_double("env.eta_los_db");
    env.eta_nlos_db = kv.require_double("env.eta_nlos_db");
    env.alpha = kv.require_double("env.alpha");
    return env;
}

channel::AngleUnit parse_angle_unit(const std::string &text)
{
    if (text == "degrees") return channel::AngleUnit::Degrees;
    if (text == "radians") return channel::AngleUnit::Radians;
    throw ConfigError("env.angle_unit", "expected 'degrees' or 'radians', got '" + text + "'");
}

std::string join(const std::vector<std::string> &items)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out;
}

} // namespace

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string format_number(double v, int significant_digits)
{
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, significant_digits);
    return std::string(buf.data(), res.ptr);
}

double parse_double(const std::string &key, const std::string &text)
{
    double v = 0.0;
    const char *begin = text.data();
    const char *end = begin + text.size();
    if (!text.empty() && *begin == '+') ++begin;
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v))
        throw ConfigError(key, "invalid number '" + text + "'");
    return v;
}

KeyValueConfig KeyValueConfig::parse(std::string_view text, const std::string &origin)
{
    KeyValueConfig cfg;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto content = trim(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        const std::string where = origin + ":" + std::to_string(line_no);
        if (eq == std::string::npos) throw ConfigError(where, "expected 'key = value'");
        const auto key = trim(std::string_view(content).substr(0, eq));
        const auto value = trim(std::string_view(content).substr(eq + 1));
        if (key.empty()) throw ConfigError(where, "empty key");
        if (cfg.values_.count(key)) throw ConfigError(key, "duplicate key at " + where);
        cfg.values_[key] = value;
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path, "cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

bool KeyValueConfig::has(const std::string &key) const { return values_.count(key) != 0; }

std::string KeyValueConfig::require_string(const std::string &key) const
{
    const auto it = values_.find(key);
    if (it == values_.end() || it->second.empty()) throw ConfigError(key, "required");
    return it->second;
}

std::string KeyValueConfig::get_string(const std::string &key, const std::string &fallback) const
{
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double KeyValueConfig::require_double(const std::string &key) const
{
    return parse_double(key, require_string(key));
}

double KeyValueConfig::get_double(const std::string &key, double fallback) const
{
    return find_double(key).value_or(fallback);
}

std::optional<double> KeyValueConfig::find_double(const std::string &key) const
{
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return parse_double(key, it->second);
}

std::uint64_t KeyValueConfig::get_uint(const std::string &key, std::uint64_t fallback) const
{
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::uint64_t v = 0;
    const auto &s = it->second;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ConfigError(key, "invalid non-negative integer '" + s + "'");
    return v;
}

std::vector<std::string> KeyValueConfig::get_list(const std::string &key,
                                                  const std::vector<std::string> &fallback) const
{
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    auto items = split_list(it->second);
    if (items.empty()) throw ConfigError(key, "empty list");
    return items;
}

std::vector<double> KeyValueConfig::require_double_list(const std::string &key) const
{
    std::vector<double> out;
    for (const auto &item : split_list(require_string(key))) out.push_back(parse_double(key, item));
    if (out.empty()) throw ConfigError(key, "required");
    return out;
}

void KeyValueConfig::set(const std::string &key, const std::string &value) { values_[key] = value; }

void KeyValueConfig::check_known(const std::vector<std::string> &allowed) const
{
    for (const auto &[key, value] : values_)
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError(key, "unknown key");
}

const std::vector<std::string> &known_keys()
{
    static const std::vector<std::string> keys = {
        "deployment.lambda_parent", "deployment.lambda_retained", "deployment.delta",
        "deployment.region_radius", "deployment.altitude",       "deployment.lambda_tx",
        "deployment.lambda_rx",     "carrier.f_c_hz",            "carrier.c",
        "env.profiles",             "env.angle_unit",            "env.a",
        "env.b",                    "env.eta_los_db",            "env.eta_nlos_db",
        "env.alpha",                "power.p_dd_dbm",            "power.p_ul_dbm",
        "power.p_dl_dbm",           "power.rss_threshold_dbm",   "scheme.type",
        "scheme.association_probability", "scheme.d_bar_th_m",   "mc.replicates",
        "mc.seed",                  "mc.workers",                "pdf.n_bins",
        "pdf.n_grid",               "sweep.l_min_m",             "sweep.l_max_m",
        "sweep.n_points"};
    return keys;
}

RunConfig load_run_config(const KeyValueConfig &kv, Purpose purpose, std::uint64_t default_seed)
{
    kv.check_known(known_keys());
    const bool sweep = purpose == Purpose::Sweep;
    RunConfig cfg;
    auto &ex = cfg.experiment;
    auto &dep = ex.deployment;

    dep.delta = kv.require_double("deployment.delta");
    if (dep.delta < 0.0) throw ConfigError("deployment.delta", "must be >= 0");
    if (kv.has("deployment.lambda_parent"))
    {
        if (kv.has("deployment.lambda_retained"))
            throw ConfigError("deployment.lambda_retained", "conflicts with deployment.lambda_parent; give one");
        dep.lambda_parent = kv.require_double("deployment.lambda_parent");
        if (!(dep.lambda_parent > 0.0)) throw ConfigError("deployment.lambda_parent", "must be > 0");
    }
    else if (kv.has("deployment.lambda_retained"))
    {
        cfg.lambda_from_retained = true;
        cfg.lambda_retained_requested = kv.require_double("deployment.lambda_retained");
        try
        {
            dep.lambda_parent = pointprocess::parent_density_for(cfg.lambda_retained_requested, dep.delta);
        }
        catch (const std::domain_error &e)
        {
            throw ConfigError("deployment.lambda_retained", e.what());
        }
    }
    else
        throw ConfigError("deployment.lambda_parent", "required");

    dep.region_radius = kv.require_double("deployment.region_radius");
    if (!(dep.region_radius > 0.0)) throw ConfigError("deployment.region_radius", "must be > 0");
    if (sweep)
        dep.altitude = kv.get_double("deployment.altitude", 100.0);
    else
        dep.altitude = kv.require_double("deployment.altitude");
    if (!(dep.altitude > 0.0)) throw ConfigError("deployment.altitude", "must be > 0");
    dep.lambda_tx = kv.get_double("deployment.lambda_tx", 1e-3);
    dep.lambda_rx = kv.get_double("deployment.lambda_rx", 1e-3);

    ex.carrier.f_c = kv.get_double("carrier.f_c_hz", 2.5e9);
    ex.carrier.c = kv.get_double("carrier.c", 299792458.0);
    if (!(ex.carrier.f_c > 0.0)) throw ConfigError("carrier.f_c_hz", "must be > 0");
    if (!(ex.carrier.c > 0.0)) throw ConfigError("carrier.c", "must be > 0");

    const auto unit = parse_angle_unit(kv.get_string("env.angle_unit", "degrees"));
    for (const auto &name : kv.get_list("env.profiles", {"high_rise_urban"}))
    {
        channel::EnvironmentProfile env;
        if (name == "custom")
            env = custom_profile(kv);
        else
        {
            try
            {
                env = channel::environment_preset(name);
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError("env.profiles", e.what());
            }
        }
        env.angle_unit = unit;
        try
        {
            env.validate();
        }
        catch (const std::domain_error &e)
        {
            throw ConfigError("env.profiles", e.what());
        }
        cfg.environments.push_back(env);
    }
    ex.env = cfg.environments.front();

    auto power_key = [&](const char *key) { return sweep ? kv.require_double(key) : kv.get_double(key, 0.0); };
    cfg.p_dd_dbm = power_key("power.p_dd_dbm");
    cfg.p_ul_dbm = power_key("power.p_ul_dbm");
    cfg.p_dl_dbm = power_key("power.p_dl_dbm");
    cfg.rss_thresholds_dbm =
        sweep ? kv.require_double_list("power.rss_threshold_dbm")
              : std::vector<double>{kv.get_double("power.rss_threshold_dbm", -90.0)};
    ex.power.p_dd = channel::dbm_to_watts(cfg.p_dd_dbm);
    ex.power.p_ul = channel::dbm_to_watts(cfg.p_ul_dbm);
    ex.power.p_dl = channel::dbm_to_watts(cfg.p_dl_dbm);
    ex.power.rss_threshold = channel::dbm_to_watts(cfg.rss_thresholds_dbm.front());

    const auto scheme_names = sweep ? kv.get_list("scheme.type", {}) : kv.get_list("scheme.type", {"TDDS"});
    if (scheme_names.empty()) throw ConfigError("scheme.type", "required");
    for (const auto &name : scheme_names)
    {
        try
        {
            cfg.schemes.push_back(modeselect::parse_scheme(name));
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError("scheme.type", e.what());
        }
    }
    ex.scheme = cfg.schemes.front();
    ex.association_probability = sweep ? kv.require_double("scheme.association_probability")
                                       : kv.get_double("scheme.association_probability", 0.5);
    if (!(ex.association_probability >= 0.0 && ex.association_probability <= 1.0))
        throw ConfigError("scheme.association_probability", "must lie in [0, 1]");
    if (const auto o = kv.find_double("scheme.d_bar_th_m"))
    {
        if (*o < 0.0) throw ConfigError("scheme.d_bar_th_m", "must be >= 0");
        ex.d_bar_th_override = *o;
    }

    ex.n_replicates = kv.get_uint("mc.replicates", 10000);
    ex.base_seed = kv.get_uint("mc.seed", default_seed);
    ex.worker_count = static_cast<unsigned>(kv.get_uint("mc.workers", 1));
    if (ex.worker_count < 1) throw ConfigError("mc.workers", "must be >= 1");

    cfg.pdf_bins = static_cast<int>(kv.get_uint("pdf.n_bins", 60));
    cfg.pdf_grid_points = static_cast<int>(kv.get_uint("pdf.n_grid", 500));
    if (cfg.pdf_bins < 2) throw ConfigError("pdf.n_bins", "must be >= 2");
    if (cfg.pdf_grid_points < 2) throw ConfigError("pdf.n_grid", "must be >= 2");

    if (sweep)
    {
        cfg.sweep_l_min = kv.require_double("sweep.l_min_m");
        cfg.sweep_l_max = kv.require_double("sweep.l_max_m");
        cfg.sweep_n_points = static_cast<int>(kv.get_uint("sweep.n_points", 0));
        if (!kv.has("sweep.n_points")) throw ConfigError("sweep.n_points", "required");
        if (!(cfg.sweep_l_min > 0.0)) throw ConfigError("sweep.l_min_m", "must be > 0");
        if (!(cfg.sweep_l_max >= cfg.sweep_l_min)) throw ConfigError("sweep.l_max_m", "must be >= sweep.l_min_m");
        if (cfg.sweep_n_points < 2) throw ConfigError("sweep.n_points", "must be >= 2");
    }

    try
    {
        auto probe = ex;
        probe.n_replicates = std::max<std::uint64_t>(1, probe.n_replicates);
        for (const auto &env : cfg.environments)
        {
            probe.env = env;
            probe.validate();
        }
    }
    catch (const std::domain_error &e)
    {
        throw ConfigError("config", e.what());
    }
    return cfg;
}

std::string render_resolved(const RunConfig &cfg, Purpose purpose)
{
    const auto &ex = cfg.experiment;
    const auto &dep = ex.deployment;
    std::ostringstream out;
    auto line = [&out](const std::string &key, const std::string &value, const std::string &note = {}) {
        out << key << " = " << value;
        if (!note.empty()) out << "  # " << note;
        out << '\n';
    };

    line("deployment.lambda_parent", format_number(dep.lambda_parent),
         cfg.lambda_from_retained ? "from lambda_retained = " + format_number(cfg.lambda_retained_requested)
                                  : "retained " + format_number(dep.lambda_retained()) + " /m^2");
    line("deployment.delta", format_number(dep.delta));
    line("deployment.region_radius", format_number(dep.region_radius));
    line("deployment.altitude", format_number(dep.altitude));
    line("deployment.lambda_tx", format_number(dep.lambda_tx));
    line("deployment.lambda_rx", format_number(dep.lambda_rx));
    line("carrier.f_c_hz", format_number(ex.carrier.f_c));
    line("carrier.c", format_number(ex.carrier.c));

    std::vector<std::string> env_names;
    bool has_custom = false;
    for (const auto &e : cfg.environments)
    {
        env_names.push_back(e.name);
        has_custom = has_custom || e.name == "custom";
    }
    line("env.profiles", join(env_names));
    line("env.angle_unit", ex.env.angle_unit == channel::AngleUnit::Degrees ? "degrees" : "radians");
    if (has_custom)
    {
        const auto &c = *std::find_if(cfg.environments.begin(), cfg.environments.end(),
                                      [](const auto &e) { return e.name == "custom"; });
        line("env.a", format_number(c.a));
        line("env.b", format_number(c.b));
        line("env.eta_los_db", format_number(c.eta_los_db));
        line("env.eta_nlos_db", format_number(c.eta_nlos_db));
        line("env.alpha", format_number(c.alpha));
    }

    line("power.p_dd_dbm", format_number(cfg.p_dd_dbm), format_number(ex.power.p_dd) + " W");
    line("power.p_ul_dbm", format_number(cfg.p_ul_dbm), format_number(ex.power.p_ul) + " W");
    line("power.p_dl_dbm", format_number(cfg.p_dl_dbm), format_number(ex.power.p_dl) + " W");
    std::vector<std::string> th, th_w;
    for (double v : cfg.rss_thresholds_dbm)
    {
        th.push_back(format_number(v));
        th_w.push_back(format_number(channel::dbm_to_watts(v)));
    }
    line("power.rss_threshold_dbm", join(th), join(th_w) + " W");

    std::vector<std::string> schemes;
    for (auto s : cfg.schemes) schemes.emplace_back(modeselect::to_string(s));
    line("scheme.type", join(schemes));
    line("scheme.association_probability", format_number(ex.association_probability));
    if (ex.d_bar_th_override) line("scheme.d_bar_th_m", format_number(*ex.d_bar_th_override));

    line("mc.replicates", std::to_string(ex.n_replicates));
    line("mc.seed", std::to_string(ex.base_seed));
    line("mc.workers", std::to_string(ex.worker_count));
    if (purpose == Purpose::Pdf)
    {
        line("pdf.n_bins", std::to_string(cfg.pdf_bins));
        line("pdf.n_grid", std::to_string(cfg.pdf_grid_points));
    }
    else
    {
        line("sweep.l_min_m", format_number(cfg.sweep_l_min));
        line("sweep.l_max_m", format_number(cfg.sweep_l_max));
        line("sweep.n_points", std::to_string(cfg.sweep_n_points));
    }
    return out.str();
}

} // namespace aerial_d2d::cli
