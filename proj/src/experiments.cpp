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

#include "beamsim/experiments.hpp"
#include "beamsim/channel.hpp"
#include "beamsim/error.hpp"
#include "beamsim/selection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace beamsim
{
    namespace
    {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();

        std::ofstream open_csv(const std::filesystem::path &path)
        {
            if (path.has_parent_path())
                std::filesystem::create_directories(path.parent_path());
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw IoError("cannot open '" + path.string() + "' for writing");
            return out;
        }

        void close_csv(std::ofstream &out, const std::filesystem::path &path)
        {
            out.close();
            if (!out)
                throw IoError("write to '" + path.string() + "' failed");
        }

        double mean_of(std::span<const double> v)
        {
            double s = 0.0;
            for (double x : v)
                s += x;
            return s / static_cast<double>(v.size());
        }

        // Linear-interpolated quantile of sorted data.
        double quantile(const std::vector<double> &sorted, double q)
        {
            const double pos = q * static_cast<double>(sorted.size() - 1);
            const auto i = static_cast<std::size_t>(std::floor(pos));
            const double frac = pos - static_cast<double>(i);
            if (i + 1 >= sorted.size())
                return sorted.back();
            return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
        }

        ExperimentConfig resolved_copy(const ExperimentConfig &cfg)
        {
            ExperimentConfig c = cfg;
            resolve(c);
            return c;
        }
    }

    std::string format_value(double v)
    {
        if (std::isnan(v))
            return "nan";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    StateThroughput state_throughput(const ComplexMatrix &hv, const SystemConfig &cfg, const SelectionOptions &opt)
    {
        if (masks_per_state(cfg.n_r, cfg.l_r, cfg.n_t, cfg.l_t) <= opt.exhaustive_cap)
            return {exhaustive_beam_select(hv, cfg.l_r, cfg.l_t, cfg.rho, opt.exhaustive_cap).throughput_bits, true};
        return {fast_beam_select(hv, cfg.l_r, cfg.l_t, cfg.rho, opt.receive_scaling).throughput_bits, false};
    }

    Histogram freedman_diaconis_histogram(std::span<const double> samples)
    {
        if (samples.empty())
            throw InsufficientData("histogram: no samples");
        std::vector<double> sorted(samples.begin(), samples.end());
        std::sort(sorted.begin(), sorted.end());
        const double lo = sorted.front(), hi = sorted.back();
        const double iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);
        const double n = static_cast<double>(sorted.size());

        Histogram h;
        h.lo = lo;
        h.total = sorted.size();
        double width = 2.0 * iqr / std::cbrt(n);
        std::size_t bins = 1;
        if (width > 0.0 && hi > lo)
            bins = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil((hi - lo) / width)), 1, 100000);
        else
            width = hi > lo ? hi - lo : 1.0;
        if (bins == 1)
            width = hi > lo ? hi - lo : 1.0;
        h.width = width;
        h.counts.assign(bins, 0);
        for (double x : sorted)
        {
            auto b = static_cast<std::size_t>((x - lo) / width);
            h.counts[std::min(b, bins - 1)] += 1;
        }
        return h;
    }

    PdfResult run_pdf_experiment(const ExperimentConfig &cfg_in, const Execution &exec)
    {
        const ExperimentConfig cfg = resolved_copy(cfg_in);
        SystemConfig sys = cfg.system;
        sys.n_states = 1;

        std::vector<StateThroughput> per_trial(cfg.n_trials);
        for_each_index(cfg.n_trials, exec, [&](std::size_t t) {
            const auto set = generate_channel_set(trial_seed(cfg.seed, t), sys);
            per_trial[t] = state_throughput(set.beamspace[0], sys, cfg.selection);
        });

        PdfResult r;
        r.samples.reserve(cfg.n_trials);
        r.exhaustive = per_trial.front().exhaustive;
        for (const auto &p : per_trial)
            r.samples.push_back(p.bits);
        r.fit = fit_gaussian(r.samples);
        r.histogram = freedman_diaconis_histogram(r.samples);
        return r;
    }

    void write_pdf_csv(const PdfResult &r, const std::filesystem::path &samples_path,
                       const std::filesystem::path &curve_path)
    {
        auto out = open_csv(samples_path);
        out << "trial,R_psi\n";
        for (std::size_t t = 0; t < r.samples.size(); ++t)
            out << t << ',' << format_value(r.samples[t]) << '\n';
        close_csv(out, samples_path);

        auto curve = open_csv(curve_path);
        curve << "x,density_sim,density_fit\n";
        for (std::size_t b = 0; b < r.histogram.counts.size(); ++b)
        {
            const double x = r.histogram.center(b);
            curve << format_value(x) << ',' << format_value(r.histogram.density(b)) << ','
                  << format_value(gaussian_pdf(r.fit, x)) << '\n';
        }
        close_csv(curve, curve_path);
    }

    GainResult gain_table(const std::vector<std::vector<double>> &per_state, const std::vector<std::size_t> &psi_sweep)
    {
        if (psi_sweep.empty())
            throw InvalidInput("gain_table: empty psi sweep");
        if (per_state.size() < 2)
            throw InsufficientData("gain_table: need at least 2 trials");
        const std::size_t psi_max = *std::max_element(psi_sweep.begin(), psi_sweep.end());
        for (const auto &row : per_state)
            if (row.size() < psi_max)
                throw InvalidInput("gain_table: each trial needs " + std::to_string(psi_max) + " state throughputs");

        std::vector<double> pooled;
        pooled.reserve(per_state.size() * psi_max);
        for (const auto &row : per_state)
            pooled.insert(pooled.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(psi_max));

        GainResult g;
        g.fit = fit_gaussian(pooled);
        const double pooled_mean = mean_of(pooled);
        const double n = static_cast<double>(per_state.size());

        for (std::size_t psi : psi_sweep)
        {
            std::vector<double> best(per_state.size());
            for (std::size_t t = 0; t < per_state.size(); ++t)
                best[t] = *std::max_element(per_state[t].begin(), per_state[t].begin() + static_cast<std::ptrdiff_t>(psi));

            GainRow row;
            row.psi = psi;
            // With a sweep of {1} the best-of vector is the pooled vector, so
            // numerator and denominator agree bit for bit.
            row.g_sim = mean_of(best) / pooled_mean;
            const auto best_fit = fit_gaussian(best);
            row.mc_stderr = std::sqrt(best_fit.var / n) / pooled_mean;
            row.g_prop1 = gain_prop1(g.fit, psi);
            row.g_prop2 = psi >= 2 ? gain_prop2(g.fit, psi) : nan;
            g.rows.push_back(row);
        }
        return g;
    }

    GainResult run_gain_experiment(const ExperimentConfig &cfg_in, const Execution &exec)
    {
        const ExperimentConfig cfg = resolved_copy(cfg_in);
        if (cfg.psi_sweep.empty())
            throw ConfigError("psi_sweep", "gain experiment needs at least one value");
        SystemConfig sys = cfg.system;
        sys.n_states = *std::max_element(cfg.psi_sweep.begin(), cfg.psi_sweep.end());

        std::vector<TrialRecord> records(cfg.n_trials);
        std::vector<char> exhaustive(cfg.n_trials, 0);
        for_each_index(cfg.n_trials, exec, [&](std::size_t t) {
            const auto set = generate_channel_set(trial_seed(cfg.seed, t), sys);
            auto &rec = records[t];
            rec.trial_index = t;
            rec.per_state.resize(sys.n_states);
            for (std::size_t s = 0; s < sys.n_states; ++s)
            {
                const auto st = state_throughput(set.beamspace[s], sys, cfg.selection);
                rec.per_state[s] = st.bits;
                exhaustive[t] = st.exhaustive;
            }
        });

        std::vector<std::vector<double>> per_state;
        per_state.reserve(records.size());
        for (auto &rec : records)
            per_state.push_back(std::move(rec.per_state));
        auto g = gain_table(per_state, cfg.psi_sweep);
        g.exhaustive = exhaustive.front() != 0;
        return g;
    }

    void write_gain_csv(const GainResult &r, const std::filesystem::path &path)
    {
        auto out = open_csv(path);
        out << "psi,G_sim,G_prop1,G_prop2,mc_stderr\n";
        for (const auto &row : r.rows)
            out << row.psi << ',' << format_value(row.g_sim) << ',' << format_value(row.g_prop1) << ','
                << format_value(row.g_prop2) << ',' << format_value(row.mc_stderr) << '\n';
        close_csv(out, path);
    }

    LossResult run_loss_experiment(const ExperimentConfig &cfg_in, const Execution &exec, FastArm arm)
    {
        const ExperimentConfig cfg = resolved_copy(cfg_in);
        if (cfg.psi_sweep.empty())
            throw ConfigError("psi_sweep", "loss experiment needs at least one value");
        if (cfg.rho_db_sweep.empty())
            throw ConfigError("rho_db_sweep", "loss experiment needs at least one value");

        SystemConfig sys = cfg.system;
        sys.n_states = *std::max_element(cfg.psi_sweep.begin(), cfg.psi_sweep.end());
        const bool need_exhaustive = !cfg.fast_only || arm == FastArm::exhaustive;
        if (need_exhaustive)
        {
            const auto per_state = masks_per_state(sys.n_r, sys.l_r, sys.n_t, sys.l_t);
            if (per_state > cfg.selection.exhaustive_cap)
                throw SearchTooLarge("loss experiment: exhaustive arm needs " + std::to_string(per_state) +
                                     " submatrices per state (cap " + std::to_string(cfg.selection.exhaustive_cap) +
                                     "); use a reduced configuration such as n_r = n_t = 9, l_r = l_t = 3, "
                                     "or set fast_only");
        }

        const std::size_t n_rho = cfg.rho_db_sweep.size(), n_psi = cfg.psi_sweep.size();
        // records[(rho * n_psi + psi) * n_trials + trial]
        std::vector<TrialRecord> records(n_rho * n_psi * cfg.n_trials);

        for_each_index(cfg.n_trials, exec, [&](std::size_t t) {
            const auto set = generate_channel_set(trial_seed(cfg.seed, t), sys);
            for (std::size_t ri = 0; ri < n_rho; ++ri)
            {
                SystemConfig at_rho = sys;
                at_rho.rho = db_to_linear(cfg.rho_db_sweep[ri]);

                // Per-state optimum; the best over the first psi states is the
                // exhaustive joint optimum for that psi (ties to the smaller state).
                std::vector<double> opt_state;
                if (need_exhaustive)
                {
                    opt_state.resize(sys.n_states);
                    for (std::size_t s = 0; s < sys.n_states; ++s)
                        opt_state[s] = exhaustive_beam_select(set.beamspace[s], sys.l_r, sys.l_t, at_rho.rho,
                                                              cfg.selection.exhaustive_cap)
                                           .throughput_bits;
                }

                for (std::size_t pi = 0; pi < n_psi; ++pi)
                {
                    const std::size_t psi = cfg.psi_sweep[pi];
                    auto &rec = records[(ri * n_psi + pi) * cfg.n_trials + t];
                    rec.trial_index = t;
                    if (need_exhaustive)
                    {
                        rec.per_state.assign(opt_state.begin(), opt_state.begin() + static_cast<std::ptrdiff_t>(psi));
                        rec.best_exhaustive = *std::max_element(rec.per_state.begin(), rec.per_state.end());
                    }
                    if (arm == FastArm::exhaustive)
                    {
                        rec.best_fast = *rec.best_exhaustive;
                        rec.chosen_state_fast = static_cast<std::size_t>(
                            std::max_element(rec.per_state.begin(), rec.per_state.end()) - rec.per_state.begin());
                    }
                    else
                    {
                        const std::span<const ComplexMatrix> states(set.physical.data(), psi);
                        rec.chosen_state_fast = fast_state_select(states, at_rho.rho, sys.l_t);
                        rec.best_fast = fast_beam_select(set.beamspace[rec.chosen_state_fast], sys.l_r, sys.l_t,
                                                         at_rho.rho, cfg.selection.receive_scaling)
                                            .throughput_bits;
                    }
                }
            }
        });

        LossResult result;
        for (std::size_t ri = 0; ri < n_rho; ++ri)
            for (std::size_t pi = 0; pi < n_psi; ++pi)
            {
                const auto *rec = &records[(ri * n_psi + pi) * cfg.n_trials];
                double opt_sum = 0.0, fast_sum = 0.0;
                double min_gap = std::numeric_limits<double>::infinity();
                for (std::size_t t = 0; t < cfg.n_trials; ++t)
                {
                    fast_sum += rec[t].best_fast;
                    if (rec[t].best_exhaustive)
                    {
                        opt_sum += *rec[t].best_exhaustive;
                        min_gap = std::min(min_gap, *rec[t].best_exhaustive - rec[t].best_fast);
                    }
                }
                const double n = static_cast<double>(cfg.n_trials);
                LossRow row;
                row.rho_db = cfg.rho_db_sweep[ri];
                row.psi = cfg.psi_sweep[pi];
                row.r_fast_mean = fast_sum / n;
                if (need_exhaustive)
                {
                    row.r_opt_mean = opt_sum / n;
                    row.delta_r = (opt_sum - fast_sum) / opt_sum;
                    row.min_trial_gap = min_gap;
                }
                else
                {
                    row.r_opt_mean = nan;
                    row.delta_r = nan;
                    row.min_trial_gap = nan;
                }
                result.rows.push_back(row);
            }
        return result;
    }

    void write_loss_csv(const LossResult &r, const std::filesystem::path &path)
    {
        auto out = open_csv(path);
        out << "rho_db,psi,R_opt_mean,R_fast_mean,delta_R\n";
        for (const auto &row : r.rows)
            out << format_value(row.rho_db) << ',' << row.psi << ',' << format_value(row.r_opt_mean) << ','
                << format_value(row.r_fast_mean) << ',' << format_value(row.delta_r) << '\n';
        close_csv(out, path);
    }
}
