// SPDX-License-Identifier: Apache-2.0
//
// beamsim: reconfigurable-antenna beamspace MIMO simulation library
// Copyright (C) 2026 The beamsim authors
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

#include "oracles.hpp"

#include "beamsim/config_io.hpp"
#include "beamsim/error.hpp"
#include "beamsim/experiments.hpp"
#include "beamsim/random.hpp"
#include "beamsim/trial_runner.hpp"

#include <doctest.h>

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace beamsim;

namespace
{
    ExperimentConfig reduced(std::size_t trials)
    {
        ExperimentConfig cfg;
        cfg.system.n_r = cfg.system.n_t = 9;
        cfg.system.l_r = cfg.system.l_t = 3;
        cfg.n_trials = trials;
        cfg.psi_sweep = {1, 2, 4};
        cfg.rho_db_sweep = {0.0, 10.0};
        return cfg;
    }
}

TEST_CASE("trial runner")
{
    for (int threads : {1, 4})
    {
        std::vector<int> hit(1000, 0);
        for_each_index(hit.size(), Execution{threads}, [&](std::size_t i) { hit[i] += 1; });
        CHECK(std::count(hit.begin(), hit.end(), 1) == 1000);
    }
    std::vector<std::size_t> order;
    for_each_index_serial(5, [&](std::size_t i) { order.push_back(i); });
    CHECK(order == std::vector<std::size_t>{0, 1, 2, 3, 4});

    std::atomic<int> ran{0};
    CHECK_THROWS_AS(for_each_index_parallel(100, 4,
                                            [&](std::size_t i) {
                                                ++ran;
                                                if (i == 37)
                                                    throw std::runtime_error("boom");
                                            }),
                    std::runtime_error);
    CHECK(ran.load() == 100);
    CHECK(default_thread_count() >= 1);
}

TEST_CASE("format_value")
{
    CHECK(format_value(1.0) == "1");
    CHECK(format_value(1.0 / 3.0) == "0.333333333333");
    CHECK(format_value(123456789.123456789) == "123456789.123");
    CHECK(format_value(std::nan("")) == "nan");
}

TEST_CASE("freedman-diaconis histogram")
{
    std::mt19937_64 g(1);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> s(8000);
    for (auto &x : s)
        x = n(g);
    const auto h = freedman_diaconis_histogram(s);
    // IQR of N(0,1) is 1.349; width = 2 IQR / 20.
    CHECK(h.width == doctest::Approx(2.0 * 1.349 / 20.0).epsilon(0.05));
    std::size_t total = 0;
    double mass = 0.0;
    for (std::size_t b = 0; b < h.counts.size(); ++b)
    {
        total += h.counts[b];
        mass += h.density(b) * h.width;
    }
    CHECK(total == s.size());
    CHECK(mass == doctest::Approx(1.0));

    const std::vector<double> same{2.0, 2.0, 2.0};
    const auto one = freedman_diaconis_histogram(same);
    CHECK(one.counts.size() == 1);
    CHECK(one.counts[0] == 3);
    CHECK_THROWS_AS(freedman_diaconis_histogram(std::vector<double>{}), InsufficientData);
}

TEST_CASE("pdf experiment")
{
    auto cfg = reduced(2);
    const auto r = run_pdf_experiment(cfg);
    CHECK(r.samples.size() == 2);
    CHECK(r.exhaustive);
    CHECK(r.histogram.counts.size() >= 1);
    CHECK(r.fit.n_samples == 2);

    ExperimentConfig big;
    big.n_trials = 3;
    CHECK_FALSE(run_pdf_experiment(big).exhaustive);

    cfg.n_trials = 40;
    const auto dir = oracle::scratch_dir("pdf");
    const auto a = run_pdf_experiment(cfg, Execution{1});
    const auto b = run_pdf_experiment(cfg, Execution{4});
    write_pdf_csv(a, dir / "a.csv", dir / "ac.csv");
    write_pdf_csv(b, dir / "b.csv", dir / "bc.csv");
    CHECK(oracle::slurp(dir / "a.csv") == oracle::slurp(dir / "b.csv"));
    CHECK(oracle::slurp(dir / "ac.csv") == oracle::slurp(dir / "bc.csv"));
    CHECK(oracle::slurp(dir / "a.csv").rfind("trial,R_psi\n0,", 0) == 0);
    CHECK(oracle::slurp(dir / "ac.csv").rfind("x,density_sim,density_fit\n", 0) == 0);
}

TEST_CASE("gain table on synthetic Gaussian samples")
{
    std::mt19937_64 g(derive_seed(5, {static_cast<std::uint64_t>(StreamPurpose::synthetic)}));
    std::normal_distribution<double> n(10.0, 1.0);
    std::vector<std::vector<double>> per(100000, std::vector<double>(8));
    for (auto &row : per)
        for (auto &x : row)
            x = n(g);
    const auto t = gain_table(per, {2, 4, 8});
    for (const auto &row : t.rows)
    {
        CHECK(std::abs(row.g_sim - row.g_prop1) / row.g_prop1 < 0.01);
        CHECK(std::abs(row.g_sim - row.g_prop1) < 4.0 * row.mc_stderr + 1e-3);
    }
    CHECK(t.fit.mu == doctest::Approx(10.0).epsilon(0.01));

    const auto one = gain_table(per, {1});
    CHECK(one.rows[0].g_sim == 1.0);
    CHECK(std::isnan(one.rows[0].g_prop2));

    CHECK_THROWS_AS(gain_table(per, {}), InvalidInput);
    CHECK_THROWS_AS(gain_table(per, {9}), InvalidInput);
    CHECK_THROWS_AS(gain_table({{1.0}}, {1}), InsufficientData);
}

TEST_CASE("gain experiment")
{
    auto cfg = reduced(60);
    const auto a = run_gain_experiment(cfg, Execution{1});
    const auto b = run_gain_experiment(cfg, Execution{4});
    REQUIRE(a.rows.size() == 3);
    CHECK(a.exhaustive);
    for (std::size_t k = 0; k < a.rows.size(); ++k)
    {
        CHECK(a.rows[k].g_sim == b.rows[k].g_sim);
        CHECK(a.rows[k].g_sim >= 1.0 - 2.0 * a.rows[k].mc_stderr);
    }
    CHECK(a.rows[2].g_sim > a.rows[1].g_sim);
    const auto dir = oracle::scratch_dir("gain");
    write_gain_csv(a, dir / "g.csv");
    const auto text = oracle::slurp(dir / "g.csv");
    CHECK(text.rfind("psi,G_sim,G_prop1,G_prop2,mc_stderr\n1,", 0) == 0);
    CHECK(text.find(",nan,") != std::string::npos);

    cfg.psi_sweep = {1};
    CHECK(run_gain_experiment(cfg).rows[0].g_sim == 1.0);
    cfg.psi_sweep = {};
    CHECK_THROWS_AS(run_gain_experiment(cfg), ConfigError);
}

TEST_CASE("loss experiment")
{
    auto cfg = reduced(40);
    cfg.psi_sweep = {2, 4};
    const auto a = run_loss_experiment(cfg, Execution{1});
    const auto b = run_loss_experiment(cfg, Execution{4});
    REQUIRE(a.rows.size() == 4);
    const auto dir = oracle::scratch_dir("loss");
    write_loss_csv(a, dir / "a.csv");
    write_loss_csv(b, dir / "b.csv");
    CHECK(oracle::slurp(dir / "a.csv") == oracle::slurp(dir / "b.csv"));
    CHECK(oracle::slurp(dir / "a.csv").rfind("rho_db,psi,R_opt_mean,R_fast_mean,delta_R\n0,2,", 0) == 0);
    for (const auto &row : a.rows)
    {
        CHECK(row.min_trial_gap >= -1e-9);
        CHECK(row.delta_r >= 0.0);
        CHECK(row.delta_r < 0.1);
        CHECK(row.r_opt_mean >= row.r_fast_mean);
    }

    const auto self = run_loss_experiment(cfg, Execution{2}, FastArm::exhaustive);
    for (const auto &row : self.rows)
    {
        CHECK(row.delta_r == 0.0);
        CHECK(row.min_trial_gap == 0.0);
    }

    ExperimentConfig full;
    full.n_trials = 2;
    full.psi_sweep = {2};
    full.rho_db_sweep = {10.0};
    CHECK_THROWS_AS(run_loss_experiment(full), SearchTooLarge);
    full.fast_only = true;
    const auto fast = run_loss_experiment(full);
    CHECK(std::isnan(fast.rows[0].delta_r));
    CHECK(fast.rows[0].r_fast_mean > 0.0);
}

TEST_CASE("config json and overrides")
{
    ExperimentConfig cfg;
    apply_override(cfg, "n_r=9");
    apply_override(cfg, "psi_sweep=1,3,5");
    apply_override(cfg, "rho_db_sweep=[0, 7.5]");
    apply_override(cfg, "psi_sweep=6");
    apply_override(cfg, "receive_stage_scaling=l_t");
    apply_override(cfg, "output_path=/tmp/x");
    apply_override(cfg, "fast_only=true");
    CHECK(cfg.system.n_r == 9);
    CHECK(cfg.psi_sweep == std::vector<std::size_t>{6});
    CHECK(cfg.rho_db_sweep == std::vector<double>{0.0, 7.5});
    CHECK(cfg.selection.receive_scaling == ReceiveScaling::num_streams);
    CHECK(cfg.output_path == "/tmp/x");
    CHECK(cfg.fast_only);

    auto check_field = [](const std::string &assign, const std::string &field) {
        ExperimentConfig c;
        try
        {
            apply_override(c, assign);
            resolve(c);
            FAIL("no error for " << assign);
        }
        catch (const ConfigError &e)
        {
            CHECK(e.field() == field);
        }
    };
    check_field("nr=9", "nr");
    check_field("n_r=abc", "n_r");
    check_field("n_r=-3", "n_r");
    check_field("n_r=16", "n_r");
    check_field("l_t=6", "l_t");
    check_field("receive_stage_scaling=both", "receive_stage_scaling");
    check_field("n_trials=1", "n_trials");
    check_field("novalue", "");

    ExperimentConfig d;
    d.rho_db = 0.0;
    resolve(d);
    CHECK(d.system.rho == doctest::Approx(1.0));

    // Round trip through the JSON form.
    ExperimentConfig e;
    apply_override(e, "seed=77");
    apply_override(e, "sigma_theta_r=0.1");
    ExperimentConfig f;
    apply_config_json(f, experiment_config_to_json(e));
    CHECK(experiment_config_to_json(f) == experiment_config_to_json(e));

    const auto dir = oracle::scratch_dir("cfg");
    {
        std::ofstream(dir / "c.json") << R"({"n_t": 5, "l_t": 2, "l_r": 2, "n_r": 5})";
        std::ofstream(dir / "bad.json") << R"({"n_t": 5, "typo": 1})";
        std::ofstream(dir / "broken.json") << "{ not json";
    }
    CHECK(load_experiment_config(dir / "c.json").system.n_t == 5);
    CHECK_THROWS_AS(load_experiment_config(dir / "bad.json"), ConfigError);
    CHECK_THROWS_AS(load_experiment_config(dir / "broken.json"), ConfigError);
    CHECK_THROWS_AS(load_experiment_config(dir / "absent.json"), ConfigError);
}
