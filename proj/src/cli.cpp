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

#include "beamsim/cli.hpp"
#include "beamsim/channel_io.hpp"
#include "beamsim/config_io.hpp"
#include "beamsim/error.hpp"
#include "beamsim/experiments.hpp"
#include "beamsim/selection.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace beamsim
{
    namespace
    {
        struct CommonArgs
        {
            std::string config_path;
            std::vector<std::string> overrides;
            std::optional<std::uint64_t> seed;
            std::optional<int> threads;
            std::string out_dir;
        };

        void add_common(CLI::App *sub, CommonArgs &a)
        {
            sub->add_option("-c,--config", a.config_path, "JSON configuration file");
            sub->add_option("--set", a.overrides, "Override a configuration field, key=value (repeatable)");
            sub->add_option("--seed", a.seed, "Experiment seed");
            sub->add_option("--threads", a.threads, "Worker threads (default: BEAMSIM_THREADS or all cores)")
                ->check(CLI::PositiveNumber);
            sub->add_option("-o,--out", a.out_dir, "Output directory (default: output_path from the config)");
        }

        // Defaults, then the config file, then --set overrides, then --seed.
        ExperimentConfig resolve_config(const CommonArgs &a)
        {
            ExperimentConfig cfg = a.config_path.empty() ? ExperimentConfig{} : load_experiment_config(a.config_path);
            for (const auto &o : a.overrides)
                apply_override(cfg, o);
            if (a.seed)
                cfg.seed = *a.seed;
            if (!a.out_dir.empty())
                cfg.output_path = a.out_dir;
            resolve(cfg);
            return cfg;
        }

        int thread_count(const CommonArgs &a)
        {
            if (a.threads)
                return *a.threads;
            if (const char *env = std::getenv("BEAMSIM_THREADS"); env && *env)
            {
                int n = 0;
                const auto *end = env + std::char_traits<char>::length(env);
                const auto [ptr, ec] = std::from_chars(env, end, n);
                if (ec != std::errc{} || ptr != end || n < 1)
                    throw ConfigError("BEAMSIM_THREADS", std::string("expected a positive integer, got '") + env + "'");
                return n;
            }
            return default_thread_count();
        }

        fs::path prepare_output(const ExperimentConfig &cfg)
        {
            const fs::path dir = cfg.output_path.empty() ? fs::path(".") : fs::path(cfg.output_path);
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec)
                throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
            std::ofstream log(dir / "resolved_config.json", std::ios::binary);
            if (!log)
                throw IoError("cannot write '" + (dir / "resolved_config.json").string() + "'");
            log << experiment_config_to_json(cfg).dump(2) << '\n';
            return dir;
        }

        json selection_to_json(const SelectionResult &r, const char *method)
        {
            // Indices are reported 1-based.
            std::vector<std::size_t> rx, tx;
            for (auto i : r.mask.rx_beams)
                rx.push_back(i + 1);
            for (auto j : r.mask.tx_beams)
                tx.push_back(j + 1);
            return json{{"state", r.state + 1},
                        {"rx_beams", rx},
                        {"tx_beams", tx},
                        {"throughput_bits", r.throughput_bits},
                        {"method", method}};
        }

        int run_info(const CommonArgs &a, std::ostream &out)
        {
            const auto cfg = resolve_config(a);
            const auto space = count_search_space(cfg.system);
            const auto &s = cfg.system;
            out << "n_r = " << s.n_r << ", n_t = " << s.n_t << ", l_r = " << s.l_r << ", l_t = " << s.l_t
                << ", n_states = " << s.n_states << '\n';
            out << "masks_per_state = " << masks_per_state(s.n_r, s.l_r, s.n_t, s.l_t) << '\n';
            out << "n_total = " << space.n_total.str() << '\n';
            out << "feedback_bits = " << format_value(space.feedback_bits) << '\n';
            return exit_ok;
        }

        int run_gen_channel(const CommonArgs &a, std::ostream &out)
        {
            const auto cfg = resolve_config(a);
            const auto dir = prepare_output(cfg);
            const auto set = generate_channel_set(cfg.seed, cfg.system);
            const auto path = dir / "channel.json";
            save_channel_set(path, set);
            out << "wrote " << path.string() << '\n';
            return exit_ok;
        }

        int run_select(const CommonArgs &a, const std::string &channel_path, const std::string &method,
                       std::ostream &out)
        {
            ExperimentConfig cfg;
            for (const auto &o : a.overrides)
                apply_override(cfg, o);
            const auto set = load_channel_set(channel_path);
            SelectionResult r;
            if (method == "fast")
                r = fast_select(set, cfg.selection);
            else
            {
                const auto &c = set.config;
                const int threads = thread_count(a);
                bool have = false;
                for (std::size_t s = 0; s < set.n_states(); ++s)
                {
                    auto sel = exhaustive_beam_select_parallel(set.beamspace[s], c.l_r, c.l_t, c.rho,
                                                               cfg.selection.exhaustive_cap, threads);
                    if (!have || sel.throughput_bits > r.throughput_bits)
                    {
                        r.state = s;
                        r.mask = std::move(sel.mask);
                        r.throughput_bits = sel.throughput_bits;
                        have = true;
                    }
                }
                r.submatrix = set.beamspace[r.state].select(r.mask.rx_beams, r.mask.tx_beams);
            }
            const auto doc = selection_to_json(r, method.c_str());
            out << doc.dump() << '\n';
            if (!a.out_dir.empty())
            {
                fs::create_directories(a.out_dir);
                std::ofstream f(fs::path(a.out_dir) / "selection.json", std::ios::binary);
                if (!f)
                    throw IoError("cannot write selection.json in '" + a.out_dir + "'");
                f << doc.dump(2) << '\n';
            }
            return exit_ok;
        }

        int run_pdf(const CommonArgs &a, std::ostream &out)
        {
            const auto cfg = resolve_config(a);
            const Execution exec{thread_count(a)};
            const auto dir = prepare_output(cfg);
            const auto r = run_pdf_experiment(cfg, exec);
            write_pdf_csv(r, dir / "pdf.csv", dir / "pdf_curve.csv");
            const auto m = sample_moments(r.samples);
            out << "beam selection: " << (r.exhaustive ? "exhaustive" : "fast") << '\n'
                << "mu = " << format_value(r.fit.mu) << ", var = " << format_value(r.fit.var)
                << ", skewness = " << format_value(m.skewness)
                << ", excess_kurtosis = " << format_value(m.excess_kurtosis) << '\n'
                << "wrote " << (dir / "pdf.csv").string() << " and " << (dir / "pdf_curve.csv").string() << '\n';
            return exit_ok;
        }

        int run_gain(const CommonArgs &a, std::ostream &out)
        {
            const auto cfg = resolve_config(a);
            const Execution exec{thread_count(a)};
            const auto dir = prepare_output(cfg);
            const auto r = run_gain_experiment(cfg, exec);
            write_gain_csv(r, dir / "gain.csv");
            out << "psi  G_sim  G_prop1  G_prop2\n";
            for (const auto &row : r.rows)
                out << row.psi << "  " << format_value(row.g_sim) << "  " << format_value(row.g_prop1) << "  "
                    << format_value(row.g_prop2) << '\n';
            out << "wrote " << (dir / "gain.csv").string() << '\n';
            return exit_ok;
        }

        int run_loss(const CommonArgs &a, bool fast_only, std::ostream &out)
        {
            auto cfg = resolve_config(a);
            if (fast_only)
                cfg.fast_only = true;
            const Execution exec{thread_count(a)};
            const auto dir = prepare_output(cfg);
            const auto r = run_loss_experiment(cfg, exec);
            write_loss_csv(r, dir / "loss.csv");
            out << "rho_db  psi  delta_R\n";
            for (const auto &row : r.rows)
                out << format_value(row.rho_db) << "  " << row.psi << "  " << format_value(row.delta_r) << '\n';
            out << "wrote " << (dir / "loss.csv").string() << '\n';
            return exit_ok;
        }
    }

    int parse_and_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"beamsim: reconfigurable-antenna beamspace MIMO simulator"};
        app.require_subcommand(1);

        CommonArgs common;
        std::string channel_path, method = "fast";
        bool fast_only = false;

        auto *info = app.add_subcommand("info", "Print search-space size and feedback bits");
        auto *gen = app.add_subcommand("gen-channel", "Generate one channel realization and dump it as JSON");
        gen->alias("dump-channel");
        auto *select = app.add_subcommand("select", "Run beam/state selection on a channel dump");
        auto *pdf = app.add_subcommand("pdf", "Throughput distribution of a single state");
        auto *gain = app.add_subcommand("gain", "Throughput gain versus number of states");
        auto *loss = app.add_subcommand("loss", "Fast-selection loss ratio versus rho");
        for (auto *sub : {info, gen, select, pdf, gain, loss})
            add_common(sub, common);
        select->add_option("--channel", channel_path, "Channel dump file")->required();
        select->add_option("--method", method, "fast or exhaustive")->check(CLI::IsMember({"fast", "exhaustive"}));
        loss->add_flag("--fast-only", fast_only, "Skip the exhaustive arm");

        std::vector<const char *> argv;
        for (const auto &s : args)
            argv.push_back(s.c_str());
        try
        {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_config_error;
        }

        try
        {
            if (info->parsed())
                return run_info(common, out);
            if (gen->parsed())
                return run_gen_channel(common, out);
            if (select->parsed())
                return run_select(common, channel_path, method, out);
            if (pdf->parsed())
                return run_pdf(common, out);
            if (gain->parsed())
                return run_gain(common, out);
            if (loss->parsed())
                return run_loss(common, fast_only, out);
        }
        catch (const ConfigError &e)
        {
            err << "configuration error: " << e.what() << '\n';
            return exit_config_error;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_runtime_error;
        }
        return exit_runtime_error;
    }
}
