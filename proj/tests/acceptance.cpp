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

// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria (capped at 1).

#include "oracles.hpp"

#include "beamsim/analysis.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/cli.hpp"
#include "beamsim/experiments.hpp"
#include "beamsim/linalg.hpp"
#include "beamsim/random.hpp"
#include "beamsim/selection.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace beamsim;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::string detail;

        void require(bool ok, const std::string &what)
        {
            if (!detail.empty())
                detail += "; ";
            detail += what + (ok ? "" : " [violated]");
            pass = pass && ok;
        }
    };

    std::string num(double v, int digits = 4)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        return buf;
    }

    Execution all_threads() { return Execution{std::max(1, default_thread_count())}; }

    ExperimentConfig reference_config(double rho_db, std::size_t trials)
    {
        ExperimentConfig cfg;
        cfg.rho_db = rho_db;
        cfg.n_trials = trials;
        cfg.seed = 1;
        return cfg;
    }

    Outcome unitarity_and_equivalence()
    {
        Outcome o;
        double worst_unit = 0.0;
        for (std::size_t n : {5u, 9u, 17u, 33u})
        {
            const auto a = dft_matrix(n, 0.5);
            worst_unit = std::max(worst_unit, (a.adjoint() * a - ComplexMatrix::identity(n)).frobenius_norm());
        }
        o.require(worst_unit <= 1e-10, "max ||A^H A - I||_F = " + num(worst_unit, 3) + " <= 1e-10");

        double worst_cap = 0.0;
        SystemConfig cfg;
        cfg.n_states = 1;
        const std::size_t sizes[] = {5, 9, 17, 33};
        for (std::uint64_t k = 0; k < 100; ++k)
        {
            cfg.n_r = sizes[k % 4];
            cfg.n_t = sizes[(k / 4) % 4];
            cfg.l_r = cfg.l_t = std::min<std::size_t>(cfg.n_r, cfg.n_t) / 2 + 1;
            const auto set = generate_channel_set(derive_seed(2024, {k}), cfg);
            const double c = cfg.rho / static_cast<double>(cfg.l_t);
            worst_cap = std::max(worst_cap, std::abs(logdet_capacity(set.physical[0], c) -
                                                     logdet_capacity(set.beamspace[0], c)));
        }
        o.require(worst_cap <= 1e-9, "max capacity mismatch physical vs virtual over 100 channels = " +
                                         num(worst_cap, 3) + " <= 1e-9");
        return o;
    }

    Outcome normalization()
    {
        Outcome o;
        SystemConfig cfg;
        cfg.n_states = 1;
        const std::size_t n = 5000;
        std::vector<double> e(n);
        for_each_index(n, all_threads(), [&](std::size_t t) {
            e[t] = generate_channel_set(trial_seed(1, t), cfg).physical[0].frobenius_norm_sq();
        });
        double s = 0.0;
        for (double x : e)
            s += x;
        const double ratio = s / static_cast<double>(n) / static_cast<double>(cfg.n_r * cfg.n_t);
        o.require(ratio >= 0.97 && ratio <= 1.03, "mean ||H||_F^2/(N_r N_t) = " + num(ratio, 5) + " in [0.97, 1.03]");
        return o;
    }

    Outcome gaussianity()
    {
        Outcome o;
        for (double rho_db : {0.0, 10.0})
        {
            const auto r = run_pdf_experiment(reference_config(rho_db, 2000), all_threads());
            const auto m = sample_moments(r.samples);
            const std::string at = "rho=" + num(rho_db) + " dB (" + (r.exhaustive ? "exhaustive" : "fast") +
                                   " selection, 2000 trials): ";
            o.require(std::abs(m.skewness) <= 0.3, at + "skewness " + num(m.skewness) + " within +-0.3");
            o.require(std::abs(m.excess_kurtosis) <= 0.6, at + "excess kurtosis " + num(m.excess_kurtosis) +
                                                              " within +-0.6");
        }
        return o;
    }

    Outcome order_statistics()
    {
        Outcome o;
        const std::size_t trials = 100000;
        std::mt19937_64 g(derive_seed(1, {static_cast<std::uint64_t>(StreamPurpose::synthetic)}));
        std::normal_distribution<double> n(10.0, 1.0);
        std::vector<std::vector<double>> per(trials, std::vector<double>(16));
        for (auto &row : per)
            for (auto &x : row)
                x = n(g);
        const auto t = gain_table(per, {2, 4, 8, 16});
        const GaussianFit exact{10.0, 1.0, trials};
        double worst = 0.0;
        for (const auto &row : t.rows)
        {
            const double ref = gain_prop1(exact, row.psi);
            worst = std::max(worst, std::abs(row.g_sim - ref) / ref);
        }
        o.require(worst < 0.01, "max |G_sim - G_prop1|/G_prop1 over psi in {2,4,8,16} = " + num(worst, 3) + " < 1%");
        const double two = gain_prop1(exact, 2), expect = 1.0 + 1.0 / (10.0 * std::sqrt(std::numbers::pi));
        o.require(std::abs(two - expect) <= 1e-3, "G_prop1(2) = " + num(two, 8) + " vs 1 + sigma/(mu sqrt(pi)) = " +
                                                      num(expect, 8));
        return o;
    }

    Outcome gain_reproduction(GaussianFit &fit_out)
    {
        Outcome o;
        auto cfg = reference_config(10.0, 2000);
        cfg.psi_sweep = {1, 2, 4, 8};
        const auto r = run_gain_experiment(cfg, all_threads());
        fit_out = r.fit;
        double prev_g = 0.0, prev_inc = INFINITY;
        bool increasing = true, concave = true;
        std::string shape;
        for (const auto &row : r.rows)
        {
            if (row.psi >= 2)
            {
                const double rel = std::abs(row.g_sim - row.g_prop1) / row.g_prop1;
                o.require(rel < 0.02, "psi=" + std::to_string(row.psi) + ": G_sim " + num(row.g_sim, 6) +
                                          " vs G_prop1 " + num(row.g_prop1, 6) + " (" + num(100 * rel, 3) + "% < 2%)");
            }
            if (row.psi > 1)
            {
                const double inc = row.g_sim - prev_g;
                increasing = increasing && inc > 0.0;
                concave = concave && inc < prev_inc;
                prev_inc = inc;
            }
            prev_g = row.g_sim;
            shape += (shape.empty() ? "" : ", ") + num(row.g_sim, 5);
        }
        o.require(increasing && concave, "G_sim over psi {1,2,4,8} = [" + shape + "] increasing with shrinking steps");
        return o;
    }

    Outcome prop2_consistency(const GaussianFit &fit)
    {
        Outcome o;
        auto rel = [&](std::size_t psi) {
            const double p1 = gain_prop1(fit, psi);
            return std::abs(gain_prop2(fit, psi) - p1) / p1;
        };
        const double r64 = rel(64), r8 = rel(8);
        o.require(r64 < 0.05, "psi=64 relative gap " + num(100 * r64, 3) + "% < 5%");
        o.require(r64 < r8, "gap at 64 smaller than at 8 (" + num(100 * r8, 3) + "%)");
        return o;
    }

    Outcome loss_against_oracle()
    {
        Outcome o;
        ExperimentConfig cfg = reference_config(10.0, 500);
        cfg.system.n_r = cfg.system.n_t = 9;
        cfg.system.l_r = cfg.system.l_t = 3;
        cfg.psi_sweep = {2, 4};
        cfg.rho_db_sweep = {0.0, 10.0};
        const auto r = run_loss_experiment(cfg, all_threads());
        for (std::size_t k = 0; k + 1 < r.rows.size(); k += 2)
        {
            const auto &p2 = r.rows[k], &p4 = r.rows[k + 1];
            const std::string at = "rho=" + num(p2.rho_db) + " dB: ";
            o.require(p2.delta_r < 0.05 && p4.delta_r < 0.05,
                      at + "Delta_R(2) = " + num(100 * p2.delta_r, 3) + "%, Delta_R(4) = " + num(100 * p4.delta_r, 3) +
                          "% < 5%");
            o.require(p2.min_trial_gap >= -1e-9 && p4.min_trial_gap >= -1e-9,
                      at + "per-trial gap >= 0 (min " + num(std::min(p2.min_trial_gap, p4.min_trial_gap), 3) + ")");
            o.require(p4.delta_r >= p2.delta_r, at + "Delta_R(4) >= Delta_R(2)");
        }

        SystemConfig small;
        small.n_r = small.n_t = 5;
        small.l_r = small.l_t = 2;
        small.n_states = 1;
        int agree = 0;
        for (std::uint64_t s = 0; s < 50; ++s)
        {
            const auto hv = generate_channel_set(s, small).beamspace[0];
            const auto ref = oracle::brute_force_select(hv, 2, 2, small.rho);
            const auto got = exhaustive_beam_select(hv, 2, 2, small.rho);
            const bool same_mask = got.mask.rx_beams == ref.rx && got.mask.tx_beams == ref.tx;
            agree += (same_mask || std::abs(got.throughput_bits - ref.value) <= 1e-9) ? 1 : 0;
        }
        o.require(agree == 50, "5x5/2x2 brute-force agreement on " + std::to_string(agree) + "/50 seeds");
        return o;
    }

    Outcome determinism()
    {
        Outcome o;
        const auto a = oracle::scratch_dir("accept_t1"), b = oracle::scratch_dir("accept_t4");
        const std::vector<std::string> common{"--set", "n_r=9",  "--set", "n_t=9",         "--set", "l_r=3",
                                              "--set", "l_t=3",  "--set", "n_trials=200",  "--set", "psi_sweep=1,2,4",
                                              "--set", "seed=11", "--set", "rho_db_sweep=0,10"};
        for (const char *cmd : {"pdf", "gain", "loss"})
            for (const auto &[dir, threads] : {std::pair{a, "1"}, std::pair{b, "4"}})
            {
                std::vector<std::string> args{"beamsim", cmd, "--out", dir.string(), "--threads", threads};
                args.insert(args.end(), common.begin(), common.end());
                std::ostringstream out, err;
                const int code = parse_and_dispatch(args, out, err);
                o.require(code == 0, std::string(cmd) + " --threads " + threads + " exit " + std::to_string(code));
            }
        int same = 0;
        for (const char *f : {"pdf.csv", "pdf_curve.csv", "gain.csv", "loss.csv"})
            same += oracle::slurp(a / f) == oracle::slurp(b / f) && !oracle::slurp(a / f).empty() ? 1 : 0;
        o.require(same == 4, std::to_string(same) + "/4 CSVs byte-identical between 1 and 4 threads");
        return o;
    }

    Outcome search_space()
    {
        Outcome o;
        const auto s = count_search_space(SystemConfig{});
        o.require(s.n_total == 306330752, "N_total = " + s.n_total.str());
        const double expect = std::log2(8.0) + std::log2(6188.0 * 6188.0);
        o.require(std::abs(s.feedback_bits - expect) <= 1e-9, "feedback_bits = " + num(s.feedback_bits, 12));
        return o;
    }
}

int main()
{
    int failed = 0;
    GaussianFit fit5;
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"1 unitarity and beamspace equivalence", unitarity_and_equivalence},
        {"2 channel power normalization", normalization},
        {"3 Gaussianity of per-state throughput", gaussianity},
        {"4 order-statistics layer on synthetic samples", order_statistics},
        {"5 gain versus number of states", [&] { return gain_reproduction(fit5); }},
        {"6 large-psi closed form consistency", [&] { return prop2_consistency(fit5); }},
        {"7 fast selection versus exhaustive oracle", loss_against_oracle},
        {"8 thread-count determinism", determinism},
        {"9 search-space arithmetic", search_space},
    };
    for (const auto &[name, check] : criteria)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = check();
        }
        catch (const std::exception &e)
        {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  criterion %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
