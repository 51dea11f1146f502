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

#include "aerial_d2d/channel.hpp"
#include "aerial_d2d/modeselect.hpp"
#include "aerial_d2d/montecarlo.hpp"
#include "aerial_d2d/nearestdist.hpp"
#include "aerial_d2d/pointprocess.hpp"
#include "aerial_d2d/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#ifndef AERIAL_D2D_VERSION
#define AERIAL_D2D_VERSION "dev"
#endif

namespace aerial_d2d::cli {

namespace {

const specfun::QuadratureSpec kPdfQuad{1e-13, 1e-10, 2000};

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string manifest_text(const RunConfig &cfg, Purpose purpose, const std::string &command,
                          const std::string &config_path)
{
    std::ostringstream out;
    out << "# aerial-d2d run manifest; load with --config to replay\n";
    out << "# command: " << command << '\n';
    out << "# config_path: " << config_path << '\n';
    out << "# tool_version: " << tool_version() << '\n';
    out << "# base_seed: " << cfg.experiment.base_seed << '\n';
    out << render_resolved(cfg, purpose);
    return out.str();
}

KeyValueConfig load_with_overrides(const CommandOptions &opts)
{
    if (opts.config_path.empty()) throw ConfigError("--config", "required");
    auto kv = KeyValueConfig::load(opts.config_path);
    if (opts.seed) kv.set("mc.seed", std::to_string(*opts.seed));
    if (opts.workers) kv.set("mc.workers", std::to_string(*opts.workers));
    if (opts.l_min) kv.set("sweep.l_min_m", format_number(*opts.l_min));
    if (opts.l_max) kv.set("sweep.l_max_m", format_number(*opts.l_max));
    if (opts.n_points) kv.set("sweep.n_points", std::to_string(*opts.n_points));
    return kv;
}

std::string cell(double v) { return format_number(v, 12); }

} // namespace

std::uint64_t default_seed()
{
    if (const char *env = std::getenv(kSeedEnvVar))
    {
        const std::string text(env);
        std::uint64_t v = 0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
            throw ConfigError(kSeedEnvVar, "invalid seed '" + text + "'");
        return v;
    }
    return 1;
}

std::string tool_version() { return AERIAL_D2D_VERSION; }

std::string render_pdf_csv(const RunConfig &cfg, PdfSummary &summary)
{
    const auto &ex = cfg.experiment;
    const auto &dep = ex.deployment;
    const auto params = nearestdist::DistancePdfParams::from_parent(dep.lambda_parent, dep.delta, dep.altitude);
    const auto grid = nearestdist::evaluation_grid(params.lambda_retained, dep.altitude, cfg.pdf_grid_points);
    const auto exact = nearestdist::pdf_exact_on_grid(grid, params, kPdfQuad);

    std::vector<double> approx(grid.size());
    double abs_err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        approx[i] = nearestdist::pdf_approx(grid[i], params.lambda_retained, dep.altitude);
        abs_err += std::abs(exact[i] - approx[i]);
    }
    summary = {};
    summary.grid_points = grid.size();
    summary.mean_abs_error = abs_err / static_cast<double>(grid.size());

    std::optional<montecarlo::Histogram> hist;
    if (ex.n_replicates > 0)
    {
        hist = montecarlo::pdf_histogram(ex, cfg.pdf_bins);
        const auto cmp = montecarlo::compare_to_cdf(
            *hist, [&](double r) { return nearestdist::cdf_exact(r, params, kPdfQuad); });
        summary.bins = cmp.size();
        summary.bins_within_3se = static_cast<std::size_t>(
            std::count_if(cmp.begin(), cmp.end(), [](const auto &c) { return c.within; }));
    }

    std::ostringstream csv;
    csv << "r_m,pdf_exact,pdf_approx,hist_density,hist_stderr\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        csv << cell(grid[i]) << ',' << cell(exact[i]) << ',' << cell(approx[i]) << ',';
        if (hist)
        {
            const auto &bins = hist->bins;
            const auto it = std::find_if(bins.begin(), bins.end(),
                                         [&](const auto &b) { return grid[i] >= b.lo && grid[i] < b.hi; });
            const auto &b = it == bins.end() ? bins.back() : *it;
            csv << cell(b.density) << ',' << cell(b.std_error);
        }
        else
            csv << ',';
        csv << '\n';
    }
    return csv.str();
}

std::string render_sweep_csv(const RunConfig &cfg)
{
    const auto &base = cfg.experiment;
    std::ostringstream csv;
    csv << "scheme,environment,rss_threshold_dbm,L_m,p_d2d_analytic,p_d2d_mc_mean,p_d2d_mc_stderr,d_bar_th_m,"
           "r_bar_th_m\n";

    std::uint64_t row = 0;
    for (const auto scheme : cfg.schemes)
        for (const auto &env : cfg.environments)
            for (const double th_dbm : cfg.rss_thresholds_dbm)
                for (int i = 0; i < cfg.sweep_n_points; ++i, ++row)
                {
                    auto ex = base;
                    ex.scheme = scheme;
                    ex.env = env;
                    ex.power.rss_threshold = channel::dbm_to_watts(th_dbm);
                    ex.deployment.altitude =
                        cfg.sweep_l_min + (cfg.sweep_l_max - cfg.sweep_l_min) * i / (cfg.sweep_n_points - 1);

                    const double a_dd = channel::d2d_attenuation(ex.carrier);
                    const double d_bar = montecarlo::decision_threshold(ex);
                    const double r_bar = modeselect::r_bar_th(ex.power, a_dd, env.alpha);
                    const double analytic = modeselect::p_d2d(d_bar, ex.scheme_config(), ex.power, a_dd, env.alpha);

                    csv << modeselect::to_string(scheme) << ',' << env.name << ',' << cell(th_dbm) << ','
                        << cell(ex.deployment.altitude) << ',' << cell(analytic) << ',';
                    if (ex.n_replicates > 0)
                    {
                        ex.base_seed = derive_seed(base.base_seed, row);
                        const auto est = montecarlo::estimate_p_d2d(ex);
                        csv << cell(est.mean) << ',' << cell(est.std_error);
                    }
                    else
                        csv << ',';
                    csv << ',' << cell(d_bar) << ',' << cell(r_bar) << '\n';
                }
    return csv.str();
}

int cmd_pdf(const CommandOptions &opts, std::ostream &log)
{
    const auto kv = load_with_overrides(opts);
    const auto cfg = load_run_config(kv, Purpose::Pdf, default_seed());
    if (opts.out_path.empty()) throw ConfigError("--out", "required");

    PdfSummary summary;
    const auto csv = render_pdf_csv(cfg, summary);
    write_file(opts.out_path, csv);
    write_file(opts.out_path + ".manifest", manifest_text(cfg, Purpose::Pdf, "pdf", opts.config_path));

    log << "mean_abs_error(pdf_exact, pdf_approx) = " << format_number(summary.mean_abs_error, 6) << " over "
        << summary.grid_points << " grid points\n";
    if (summary.bins > 0)
        log << "histogram bins within 3 SE of pdf_exact: " << summary.bins_within_3se << " / " << summary.bins
            << '\n';
    log << "wrote " << opts.out_path << '\n';
    return kExitOk;
}

int cmd_pd2d_sweep(const CommandOptions &opts, std::ostream &log)
{
    const auto kv = load_with_overrides(opts);
    const auto cfg = load_run_config(kv, Purpose::Sweep, default_seed());
    if (opts.out_path.empty()) throw ConfigError("--out", "required");

    write_file(opts.out_path, render_sweep_csv(cfg));
    write_file(opts.out_path + ".manifest", manifest_text(cfg, Purpose::Sweep, "pd2d-sweep", opts.config_path));
    log << "wrote " << opts.out_path << '\n';
    return kExitOk;
}

namespace {

class EvalArgs
{
  public:
    explicit EvalArgs(const std::vector<std::string> &params)
    {
        for (const auto &p : params)
        {
            const auto eq = p.find('=');
            if (eq == std::string::npos || eq == 0) throw ConfigError(p, "expected key=value");
            kv_.set(p.substr(0, eq), p.substr(eq + 1));
        }
    }

    // Records keys that are absent; throw_missing reports them together.
    bool need(std::initializer_list<const char *> keys)
    {
        bool ok = true;
        for (const char *k : keys)
            if (!kv_.has(k))
            {
                if (std::find(missing_.begin(), missing_.end(), k) == missing_.end()) missing_.emplace_back(k);
                ok = false;
            }
        return ok;
    }

    void throw_missing() const
    {
        if (missing_.empty()) return;
        std::string list;
        for (std::size_t i = 0; i < missing_.size(); ++i) list += (i ? ", " : "") + missing_[i];
        throw ConfigError("eval", "missing parameters: " + list);
    }

    bool has(const char *k) const { return kv_.has(k); }
    double num(const char *k) const { return kv_.require_double(k); }
    double num(const char *k, double fallback) const { return kv_.get_double(k, fallback); }
    std::string str(const char *k) const { return kv_.require_string(k); }

    channel::EnvironmentProfile env() const
    {
        channel::EnvironmentProfile e;
        try
        {
            e = channel::environment_preset(str("env"));
        }
        catch (const std::invalid_argument &ex)
        {
            throw ConfigError("env", ex.what());
        }
        const auto unit = kv_.get_string("angle_unit", "degrees");
        if (unit == "radians")
            e.angle_unit = channel::AngleUnit::Radians;
        else if (unit != "degrees")
            throw ConfigError("angle_unit", "expected 'degrees' or 'radians'");
        return e;
    }

    channel::CarrierConfig carrier() const { return {num("f_c", 2.5e9), num("c", 299792458.0)}; }

    double watts(const char *stem) const
    {
        const std::string dbm = std::string(stem) + "_dbm";
        const std::string w = std::string(stem) + "_w";
        if (kv_.has(w)) return kv_.require_double(w);
        return channel::dbm_to_watts(kv_.require_double(dbm));
    }

    bool need_power(const char *stem)
    {
        const std::string dbm = std::string(stem) + "_dbm";
        if (kv_.has(std::string(stem) + "_w") || kv_.has(dbm)) return true;
        missing_.push_back(dbm);
        return false;
    }

    double lambda_retained() const
    {
        if (kv_.has("lambda_retained")) return num("lambda_retained");
        return pointprocess::mhcp_density({num("lambda_parent"), num("delta")});
    }

    bool need_lambda()
    {
        if (kv_.has("lambda_retained")) return true;
        return need({"lambda_parent", "delta"});
    }

  private:
    KeyValueConfig kv_;
    std::vector<std::string> missing_;
};

} // namespace

int cmd_eval(const std::string &expression, const std::vector<std::string> &params, std::ostream &out,
             std::ostream &err)
{
    return guarded(err, [&] {
        EvalArgs args(params);
        double value = 0.0;
        std::string unit;

        if (expression == "mhcp_density")
        {
            args.need({"lambda_parent", "delta"});
            args.throw_missing();
            value = pointprocess::mhcp_density({args.num("lambda_parent"), args.num("delta")});
            unit = "1/m^2";
        }
        else if (expression == "plos")
        {
            args.need({"h", "L", "env"});
            args.throw_missing();
            value = channel::los_probability(args.num("h"), args.num("L"), args.env());
            unit = "(probability)";
        }
        else if (expression == "atg_attenuation")
        {
            args.need({"h", "L", "env"});
            args.throw_missing();
            value = channel::atg_attenuation(args.num("h"), args.num("L"), args.env(), args.carrier());
            unit = "(linear gain)";
        }
        else if (expression == "avg_dth")
        {
            args.need({"L", "env"});
            args.need_lambda();
            args.need_power("p_dd");
            args.need_power("p_ul");
            args.need_power("p_dl");
            args.throw_missing();
            const modeselect::PowerConfig power{args.watts("p_dd"), args.watts("p_ul"), args.watts("p_dl"), 1.0};
            value = modeselect::avg_dth(power, args.lambda_retained(), args.num("L"), args.env(), args.carrier());
            unit = "m";
        }
        else if (expression == "p_d2d")
        {
            args.need({"scheme", "R", "env"});
            args.need_power("p_dd");
            args.need_power("rss_threshold");
            args.throw_missing();
            modeselect::Scheme scheme{};
            try
            {
                scheme = modeselect::parse_scheme(args.str("scheme"));
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError("scheme", e.what());
            }
            const auto env = args.env();
            const auto carrier = args.carrier();
            modeselect::SchemeConfig sc{scheme, args.num("p", 0.5), args.num("R"), args.num("L", 100.0)};
            modeselect::PowerConfig power{args.watts("p_dd"), 1.0, 1.0, args.watts("rss_threshold")};
            const double a_dd = channel::d2d_attenuation(carrier);
            if (scheme == modeselect::Scheme::RSSS)
                value = modeselect::p_d2d_rsss(sc, power, a_dd, env.alpha);
            else
            {
                args.need({"p"});
                double d_bar = 0.0;
                if (args.has("d_bar_th"))
                {
                    args.throw_missing();
                    d_bar = args.num("d_bar_th");
                }
                else
                {
                    args.need({"L"});
                    args.need_lambda();
                    args.need_power("p_ul");
                    args.need_power("p_dl");
                    args.throw_missing();
                    power.p_ul = args.watts("p_ul");
                    power.p_dl = args.watts("p_dl");
                    d_bar = modeselect::avg_dth(power, args.lambda_retained(), args.num("L"), env, carrier);
                }
                value = modeselect::p_d2d_tdds(d_bar, sc, power, a_dd, env.alpha);
            }
            unit = "(probability)";
        }
        else
            throw ConfigError("expression", "unknown expression '" + expression +
                                                "' (mhcp_density, avg_dth, p_d2d, plos, atg_attenuation)");

        out << format_number(value, 10) << ' ' << unit << '\n';
        return kExitOk;
    });
}

} // namespace aerial_d2d::cli
