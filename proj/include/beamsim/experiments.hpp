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

#ifndef BEAMSIM_EXPERIMENTS_HPP
#define BEAMSIM_EXPERIMENTS_HPP

#include "beamsim/analysis.hpp"
#include "beamsim/complex_matrix.hpp"
#include "beamsim/config.hpp"
#include "beamsim/trial_runner.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace beamsim
{
    struct TrialRecord
    {
        std::size_t trial_index = 0;
        std::vector<double> per_state;          // R_psi of each state
        std::optional<double> best_exhaustive;  // exhaustive optimum over states
        double best_fast = 0.0;                 // fast selector throughput
        std::size_t chosen_state_fast = 0;
    };

    // Throughput of the best beam selection on one state: exhaustive when the
    // mask count is within the cap, greedy otherwise.
    struct StateThroughput
    {
        double bits = 0.0;
        bool exhaustive = false;
    };

    StateThroughput state_throughput(const ComplexMatrix &hv, const SystemConfig &cfg, const SelectionOptions &opt);

    // Fixed-width histogram.
    struct Histogram
    {
        double lo = 0.0;
        double width = 1.0;
        std::vector<std::size_t> counts;
        std::size_t total = 0;

        double center(std::size_t bin) const noexcept { return lo + (static_cast<double>(bin) + 0.5) * width; }
        double density(std::size_t bin) const noexcept
        {
            return static_cast<double>(counts[bin]) / (static_cast<double>(total) * width);
        }
    };

    // Freedman-Diaconis bin width 2 IQR n^(-1/3); a single bin when the IQR
    // vanishes.
    Histogram freedman_diaconis_histogram(std::span<const double> samples);

    // ---- throughput pdf -------------------------------------------------

    struct PdfResult
    {
        std::vector<double> samples;  // R_psi per trial
        GaussianFit fit;
        Histogram histogram;
        bool exhaustive = false;      // beam selection arm used for every sample
    };

    PdfResult run_pdf_experiment(const ExperimentConfig &cfg, const Execution &exec = {});

    // trial,R_psi  and  x,density_sim,density_fit
    void write_pdf_csv(const PdfResult &r, const std::filesystem::path &samples_path,
                       const std::filesystem::path &curve_path);

    // ---- throughput gain versus number of states ------------------------

    struct GainRow
    {
        std::size_t psi = 0;
        double g_sim = 0.0;
        double g_prop1 = 0.0;
        double g_prop2 = 0.0;  // NaN for psi < 2
        double mc_stderr = 0.0;
    };

    struct GainResult
    {
        std::vector<GainRow> rows;
        GaussianFit fit;  // pooled over every state of every trial
        bool exhaustive = false;
    };

    // Gain table from per-trial, per-state throughputs (each inner vector
    // holds at least max(psi_sweep) values). G_sim(psi) is the mean of the
    // best of the first psi states over the pooled single-state mean.
    GainResult gain_table(const std::vector<std::vector<double>> &per_state, const std::vector<std::size_t> &psi_sweep);

    GainResult run_gain_experiment(const ExperimentConfig &cfg, const Execution &exec = {});

    // psi,G_sim,G_prop1,G_prop2,mc_stderr
    void write_gain_csv(const GainResult &r, const std::filesystem::path &path);

    // ---- fast selection loss versus rho ---------------------------------

    // Which selector feeds the "fast" arm. exhaustive turns the experiment
    // into a self-comparison.
    enum class FastArm
    {
        algorithm,
        exhaustive,
    };

    struct LossRow
    {
        double rho_db = 0.0;
        std::size_t psi = 0;
        double r_opt_mean = 0.0;   // NaN when the exhaustive arm is skipped
        double r_fast_mean = 0.0;
        double delta_r = 0.0;      // (R_opt - R_fast) / R_opt
        double min_trial_gap = 0.0;  // min over trials of R_opt - R_fast
    };

    struct LossResult
    {
        std::vector<LossRow> rows;
    };

    // Paired trials: both selectors see the same channels. Throws
    // SearchTooLarge when the exhaustive arm exceeds the cap and fast_only is
    // not set.
    LossResult run_loss_experiment(const ExperimentConfig &cfg, const Execution &exec = {},
                                   FastArm arm = FastArm::algorithm);

    // rho_db,psi,R_opt_mean,R_fast_mean,delta_R
    void write_loss_csv(const LossResult &r, const std::filesystem::path &path);

    // 12 significant digits, "nan" for NaN.
    std::string format_value(double v);
}

#endif
