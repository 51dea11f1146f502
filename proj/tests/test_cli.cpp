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

#include "catch_amalgamated.hpp"

#include "aerial_d2d/commands.hpp"
#include "aerial_d2d/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace aerial_d2d::cli;

namespace {

struct ScratchDir
{
    fs::path path = fs::temp_directory_path() / ("aerial_d2d_test_cli_" + std::to_string(::getpid()));
    ScratchDir() { fs::create_directories(path); }
    ~ScratchDir()
    {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

fs::path scratch()
{
    static const ScratchDir dir;
    return dir.path;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path write_text(const std::string &name, const std::string &text)
{
    const auto p = scratch() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

struct RunResult
{
    int code = -1;
    std::string out, err;
};

RunResult run(const std::string &args, const std::string &env = "")
{
    const auto out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
    const std::string cmd = env + " \"" AERIAL_D2D_EXE "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                            err.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

const std::string kPdfConfig = R"(# small nearest-distance run
deployment.lambda_parent = 2e-5
deployment.delta = 100
deployment.region_radius = 500
deployment.altitude = 100
mc.replicates = 2000
mc.workers = 2
pdf.n_bins = 20
pdf.n_grid = 100
)";

const std::string kSweepConfig = R"(deployment.lambda_retained = 1e-4
deployment.delta = 50
deployment.region_radius = 500
env.profiles = high_rise_urban, suburban
power.p_dd_dbm = 23
power.p_ul_dbm = 0
power.p_dl_dbm = 0
power.rss_threshold_dbm = -100, -90
scheme.type = TDDS, RSSS
scheme.association_probability = 0.5
mc.replicates = 300
sweep.l_min_m = 100
sweep.l_max_m = 2000
sweep.n_points = 4
)";

} // namespace

TEST_CASE("CLI - missing parent intensity is a config error")
{
    const auto cfg = write_text("missing.conf", "deployment.delta = 100\ndeployment.altitude = 100\n");
    const auto r = run("pdf --config \"" + cfg.string() + "\" --out \"" + (scratch() / "x.csv").string() + "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("deployment.lambda_parent: required") != std::string::npos);
}

TEST_CASE("CLI - unknown keys and bad values are config errors")
{
    const auto typo = write_text("typo.conf", kPdfConfig + "deployment.lamda_parent = 1\n");
    auto r = run("pdf --config \"" + typo.string() + "\" --out \"" + (scratch() / "x.csv").string() + "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("deployment.lamda_parent") != std::string::npos);

    const auto bad = write_text("bad.conf", "deployment.lambda_parent = two\ndeployment.delta = 1\n"
                                            "deployment.altitude = 100\n");
    r = run("pdf --config \"" + bad.string() + "\" --out \"" + (scratch() / "x.csv").string() + "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("deployment.lambda_parent") != std::string::npos);

    r = run("pdf --config \"" + (scratch() / "does_not_exist.conf").string() + "\" --out x.csv");
    CHECK(r.code == 2);

    r = run("frobnicate");
    CHECK(r.code == 2);
}

TEST_CASE("CLI - pdf output is byte-identical across runs and replays from its manifest")
{
    const auto cfg = write_text("pdf.conf", kPdfConfig);
    const auto a = scratch() / "pdf_a.csv", b = scratch() / "pdf_b.csv", c = scratch() / "pdf_c.csv";
    REQUIRE(run("pdf --config \"" + cfg.string() + "\" --out \"" + a.string() + "\"").code == 0);
    REQUIRE(run("pdf --config \"" + cfg.string() + "\" --out \"" + b.string() + "\"").code == 0);
    const auto first = slurp(a);
    CHECK(first == slurp(b));
    CHECK(slurp(fs::path(a.string() + ".manifest")).find("# command: pdf") != std::string::npos);
    CHECK(first.rfind("r_m,pdf_exact,pdf_approx,hist_density,hist_stderr\n", 0) == 0);
    CHECK(std::count(first.begin(), first.end(), '\n') == 101);

    REQUIRE(run("pdf --config \"" + a.string() + ".manifest\" --out \"" + c.string() + "\"").code == 0);
    CHECK(first == slurp(c));

    const auto r = run("pdf --config \"" + cfg.string() + "\" --out \"" + c.string() + "\" --seed 2");
    REQUIRE(r.code == 0);
    CHECK(first != slurp(c));
    CHECK(r.err.find("mean_abs_error") != std::string::npos);
}

TEST_CASE("CLI - seed precedence")
{
    const auto cfg = write_text("seed.conf", kPdfConfig);
    const auto a = scratch() / "seed_a.csv", b = scratch() / "seed_b.csv", c = scratch() / "seed_c.csv";
    REQUIRE(run("pdf --config \"" + cfg.string() + "\" --out \"" + a.string() + "\"", "AERIAL_D2D_SEED=5").code == 0);
    REQUIRE(run("pdf --config \"" + cfg.string() + "\" --out \"" + b.string() + "\" --seed 5").code == 0);
    REQUIRE(run("pdf --config \"" + cfg.string() + "\" --out \"" + c.string() + "\"").code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != slurp(c));
    CHECK(slurp(fs::path(b.string() + ".manifest")).find("# base_seed: 5") != std::string::npos);

    const auto pinned = write_text("pinned.conf", kPdfConfig + "mc.seed = 5\n");
    REQUIRE(run("pdf --config \"" + pinned.string() + "\" --out \"" + c.string() + "\"", "AERIAL_D2D_SEED=9")
                .code == 0);
    CHECK(slurp(a) == slurp(c));
}

TEST_CASE("CLI - sweep output is deterministic and worker-independent")
{
    const auto cfg = write_text("sweep.conf", kSweepConfig);
    const auto a = scratch() / "sweep_a.csv", b = scratch() / "sweep_b.csv";
    REQUIRE(run("pd2d-sweep --config \"" + cfg.string() + "\" --out \"" + a.string() + "\"").code == 0);
    REQUIRE(run("pd2d-sweep --config \"" + cfg.string() + "\" --out \"" + b.string() + "\" --workers 3").code == 0);
    const auto text = slurp(a);
    CHECK(text == slurp(b));
    // 2 schemes x 2 environments x 2 thresholds x 4 altitudes, plus the header
    CHECK(std::count(text.begin(), text.end(), '\n') == 33);
    CHECK(text.rfind("scheme,environment,rss_threshold_dbm,L_m,p_d2d_analytic,p_d2d_mc_mean,p_d2d_mc_stderr,"
                     "d_bar_th_m,r_bar_th_m\n",
                     0) == 0);

    REQUIRE(run("pd2d-sweep --config \"" + cfg.string() + "\" --out \"" + b.string() + "\" --n-points 3").code == 0);
    const auto fewer = slurp(b);
    CHECK(std::count(fewer.begin(), fewer.end(), '\n') == 25);
}

TEST_CASE("CLI - sweep requires the power settings")
{
    const auto cfg = write_text("nopower.conf", "deployment.lambda_retained = 1e-4\ndeployment.delta = 50\n"
                                                "deployment.region_radius = 500\nscheme.type = TDDS\nscheme.association_probability = 0.5\n"
                                                "sweep.l_min_m = 100\nsweep.l_max_m = 200\nsweep.n_points = 2\n");
    const auto r = run("pd2d-sweep --config \"" + cfg.string() + "\" --out \"" + (scratch() / "x.csv").string() + "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("power.p_dd_dbm") != std::string::npos);
}

TEST_CASE("CLI - eval")
{
    auto r = run("eval mhcp_density lambda_parent=2e-5 delta=100");
    CHECK(r.code == 0);
    CHECK(r.out == "1.484953526e-05 1/m^2\n");

    r = run("eval plos h=0 L=100 env=high_rise_urban");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("0.8477782408", 0) == 0);

    r = run("eval p_d2d scheme=RSSS R=500 env=urban p_dd_dbm=23 rss_threshold_dbm=-150");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1 ", 0) == 0);

    r = run("eval atg_attenuation h=0 L=100 env=high_rise_urban");
    CHECK(r.code == 0);

    r = run("eval avg_dth L=500 env=high_rise_urban lambda_retained=1e-4 p_dd_dbm=23 p_ul_dbm=23 p_dl_dbm=23");
    CHECK(r.code == 0);

    r = run("eval avg_dth L=500 env=high_rise_urban");
    CHECK(r.code == 2);
    CHECK(r.err.find("p_dd_dbm") != std::string::npos);
    CHECK(r.err.find("lambda_parent") != std::string::npos);

    r = run("eval plos h=0 L=100");
    CHECK(r.code == 2);
    CHECK(r.err.find("env") != std::string::npos);

    r = run("eval plos h=0 L=100 env=mars");
    CHECK(r.code == 2);
}

TEST_CASE("CLI - in-process eval mirrors the binary")
{
    std::ostringstream out, err;
    CHECK(cmd_eval("mhcp_density", {"lambda_parent=2e-5", "delta=0"}, out, err) == kExitOk);
    CHECK(out.str() == "2e-05 1/m^2\n");
    CHECK(cmd_eval("nonsense", {}, out, err) == kExitConfig);
}

TEST_CASE("Shipped configs load")
{
    for (const char *name : {"fig2.conf", "fig3.conf", "fig4.conf"})
    {
        const auto kv = KeyValueConfig::load(std::string(AERIAL_D2D_CONFIG_DIR) + "/" + name);
        const auto purpose = std::string(name) == "fig2.conf" ? Purpose::Pdf : Purpose::Sweep;
        CHECK_NOTHROW(load_run_config(kv, purpose, 1));
    }
}

TEST_CASE("Key-value parsing")
{
    const auto kv = KeyValueConfig::parse("a.b = 1.5  # note\n\n# comment\nc.d = x, y\n");
    CHECK(kv.require_double("a.b") == 1.5);
    CHECK(kv.get_list("c.d", {}) == std::vector<std::string>{"x", "y"});
    CHECK_THROWS_AS(KeyValueConfig::parse("a = 1\na = 2\n"), ConfigError);
    CHECK_THROWS_AS(KeyValueConfig::parse("no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(kv.require_double("missing.key"), ConfigError);
    try
    {
        kv.require_double("deployment.lambda_parent");
    }
    catch (const ConfigError &e)
    {
        CHECK(std::string(e.what()) == "deployment.lambda_parent: required");
    }
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0, 4) == "0.3333");
}
