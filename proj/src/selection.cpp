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

#include "beamsim/selection.hpp"
#include "beamsim/error.hpp"
#include "beamsim/linalg.hpp"
#include "selection_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace beamsim
{
    double throughput_of(const ComplexMatrix &sub, double rho, std::size_t l_t)
    {
        if (l_t == 0)
            throw InvalidInput("throughput_of: l_t must be positive");
        return logdet_capacity(sub, rho / static_cast<double>(l_t));
    }

    std::uint64_t masks_per_state(std::size_t n_r, std::size_t l_r, std::size_t n_t, std::size_t l_t)
    {
        const auto total = binomial(n_r, l_r) * binomial(n_t, l_t);
        if (total > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
        return total.convert_to<std::uint64_t>();
    }

    namespace detail
    {
        bool next_combination(std::vector<std::size_t> &c, std::size_t n)
        {
            const std::size_t k = c.size();
            std::size_t i = k;
            while (i > 0)
            {
                --i;
                if (c[i] < n - k + i)
                {
                    ++c[i];
                    for (std::size_t j = i + 1; j < k; ++j)
                        c[j] = c[j - 1] + 1;
                    return true;
                }
            }
            return false;
        }

        std::vector<std::size_t> first_combination(std::size_t k)
        {
            std::vector<std::size_t> c(k);
            std::iota(c.begin(), c.end(), std::size_t{0});
            return c;
        }

        std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k)
        {
            // Lexicographic order: at each position count the combinations
            // that start with a smaller element.
            std::vector<std::size_t> c(k);
            std::size_t next = 0;
            for (std::size_t pos = 0; pos < k; ++pos)
            {
                for (std::size_t v = next;; ++v)
                {
                    const auto below = binomial(n - v - 1, k - pos - 1).convert_to<std::uint64_t>();
                    if (rank < below)
                    {
                        c[pos] = v;
                        next = v + 1;
                        break;
                    }
                    rank -= below;
                }
            }
            return c;
        }

        std::vector<std::vector<std::size_t>> all_combinations(std::size_t n, std::size_t k)
        {
            std::vector<std::vector<std::size_t>> out;
            auto c = first_combination(k);
            do
                out.push_back(c);
            while (next_combination(c, n));
            return out;
        }

        void check_exhaustive_args(const ComplexMatrix &hv, std::size_t l_r, std::size_t l_t, double rho,
                                   std::uint64_t cap)
        {
            if (l_r == 0 || l_t == 0 || l_r > hv.rows() || l_t > hv.cols())
                throw InvalidInput("exhaustive_beam_select: need 1 <= l_r <= " + std::to_string(hv.rows()) +
                                   " and 1 <= l_t <= " + std::to_string(hv.cols()));
            if (!(rho > 0.0))
                throw InvalidInput("exhaustive_beam_select: rho must be positive");
            if (!hv.all_finite())
                throw InvalidInput("exhaustive_beam_select: non-finite channel entry");
            const auto count = masks_per_state(hv.rows(), l_r, hv.cols(), l_t);
            if (count > cap)
                throw SearchTooLarge("exhaustive beam search needs " + std::to_string(count) +
                                     " submatrices per state, above the cap of " + std::to_string(cap) +
                                     "; use the fast selection path or a smaller configuration");
        }

        RowsBest best_for_rows(const ComplexMatrix &hv, std::span<const std::size_t> rx,
                               const std::vector<std::vector<std::size_t>> &tx_combos, double c)
        {
            const ComplexMatrix rows = hv.select_rows(rx);
            const std::size_t l_r = rx.size();
            const std::size_t l_t = tx_combos.front().size();

            RowsBest best;
            if (l_t <= l_r)
            {
                // |I + c S S^H| = |I + c S^H S|; S^H S is the (tx, tx) block of
                // the column Gram of the selected rows.
                const ComplexMatrix g = gram_cols(rows);
                ComplexMatrix k(l_t, l_t);
                for (std::size_t t = 0; t < tx_combos.size(); ++t)
                {
                    const auto &tx = tx_combos[t];
                    for (std::size_t a = 0; a < l_t; ++a)
                        for (std::size_t b = 0; b < l_t; ++b)
                            k(a, b) = c * g(tx[a], tx[b]);
                    for (std::size_t a = 0; a < l_t; ++a)
                        k(a, a) += 1.0;
                    const double v = log2_det_hpd(k);
                    if (v > best.value)
                    {
                        best.value = v;
                        best.tx_rank = t;
                    }
                }
            }
            else
            {
                for (std::size_t t = 0; t < tx_combos.size(); ++t)
                {
                    const double v = logdet_capacity(rows.select_cols(tx_combos[t]), c);
                    if (v > best.value)
                    {
                        best.value = v;
                        best.tx_rank = t;
                    }
                }
            }
            return best;
        }

        BeamSelection finish(const ComplexMatrix &hv, std::vector<std::size_t> rx, std::vector<std::size_t> tx,
                             double rho, std::size_t l_t)
        {
            BeamSelection out;
            out.throughput_bits = throughput_of(hv.select(rx, tx), rho, l_t);
            out.mask.rx_beams = std::move(rx);
            out.mask.tx_beams = std::move(tx);
            return out;
        }
    }

    BeamSelection exhaustive_beam_select(const ComplexMatrix &hv, std::size_t l_r, std::size_t l_t, double rho,
                                         std::uint64_t cap)
    {
        detail::check_exhaustive_args(hv, l_r, l_t, rho, cap);
        const double c = rho / static_cast<double>(l_t);
        const auto tx_combos = detail::all_combinations(hv.cols(), l_t);

        double best_value = -std::numeric_limits<double>::infinity();
        std::vector<std::size_t> best_rx;
        std::size_t best_tx = 0;
        auto rx = detail::first_combination(l_r);
        do
        {
            const auto b = detail::best_for_rows(hv, rx, tx_combos, c);
            if (b.value > best_value)
            {
                best_value = b.value;
                best_rx = rx;
                best_tx = b.tx_rank;
            }
        } while (detail::next_combination(rx, hv.rows()));

        return detail::finish(hv, std::move(best_rx), tx_combos[best_tx], rho, l_t);
    }

    SelectionResult exhaustive_full_select(const ChannelSet &channels, const SelectionOptions &opt)
    {
        if (channels.n_states() == 0)
            throw InvalidInput("exhaustive_full_select: empty channel set");
        const auto &cfg = channels.config;
        SelectionResult best;
        bool have = false;
        for (std::size_t s = 0; s < channels.n_states(); ++s)
        {
            auto sel = exhaustive_beam_select(channels.beamspace[s], cfg.l_r, cfg.l_t, cfg.rho, opt.exhaustive_cap);
            if (!have || sel.throughput_bits > best.throughput_bits)
            {
                best.state = s;
                best.mask = std::move(sel.mask);
                best.throughput_bits = sel.throughput_bits;
                have = true;
            }
        }
        best.submatrix = channels.beamspace[best.state].select(best.mask.rx_beams, best.mask.tx_beams);
        return best;
    }

    std::size_t fast_state_select(std::span<const ComplexMatrix> channels, double rho, std::size_t l_t)
    {
        if (channels.empty())
            throw InvalidInput("fast_state_select: empty channel set");
        const double c = rho / static_cast<double>(l_t);
        std::size_t best = 0;
        double best_value = logdet_capacity(channels[0], c);
        for (std::size_t s = 1; s < channels.size(); ++s)
        {
            const double v = logdet_capacity(channels[s], c);
            if (v > best_value)
            {
                best_value = v;
                best = s;
            }
        }
        return best;
    }

    std::size_t fast_state_select(const ChannelSet &channels)
    {
        return fast_state_select(channels.physical, channels.config.rho, channels.config.l_t);
    }

    std::vector<std::size_t> issa_receive_select(const ComplexMatrix &hv, std::size_t l_r, double scale)
    {
        if (l_r == 0 || l_r > hv.rows())
            throw InvalidInput("issa_receive_select: l_r must be in [1, " + std::to_string(hv.rows()) + "]");
        const std::size_t n = hv.rows(), nt = hv.cols();
        std::vector<std::size_t> picked;
        std::vector<bool> used(n, false);
        picked.reserve(l_r);

        for (std::size_t step = 0; step < l_r; ++step)
        {
            // Score h_j (I + scale H~^H H~)^{-1} h_j^H; with nothing picked the
            // inverse is the identity and the score is the row energy.
            ComplexMatrix inv;
            if (!picked.empty())
            {
                ComplexMatrix k = gram_cols(hv.select_rows(picked));
                k *= scale;
                for (std::size_t i = 0; i < nt; ++i)
                    k(i, i) += 1.0;
                inv = hpd_inverse(k);
            }

            std::size_t best = n;
            double best_score = -std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j)
            {
                if (used[j])
                    continue;
                const auto h = hv.row(j);
                double score = 0.0;
                if (picked.empty())
                {
                    for (const auto &z : h)
                        score += std::norm(z);
                }
                else
                {
                    cdouble s{0.0, 0.0};
                    for (std::size_t a = 0; a < nt; ++a)
                    {
                        cdouble t{0.0, 0.0};
                        for (std::size_t b = 0; b < nt; ++b)
                            t += inv(a, b) * std::conj(h[b]);
                        s += h[a] * t;
                    }
                    score = s.real();
                }
                if (score > best_score)
                {
                    best_score = score;
                    best = j;
                }
            }
            used[best] = true;
            picked.push_back(best);
        }
        return picked;
    }

    std::vector<std::size_t> issa_receive_select(const ComplexMatrix &hv, std::size_t l_r, double rho, std::size_t l_t,
                                                 ReceiveScaling scaling)
    {
        const double denom = scaling == ReceiveScaling::num_tx ? static_cast<double>(hv.cols()) : static_cast<double>(l_t);
        return issa_receive_select(hv, l_r, rho / denom);
    }

    std::vector<std::size_t> issa_transmit_select(const ComplexMatrix &sub_rows, std::size_t l_t, double rho)
    {
        if (l_t == 0 || l_t > sub_rows.cols())
            throw InvalidInput("issa_transmit_select: l_t must be in [1, " + std::to_string(sub_rows.cols()) + "]");
        const std::size_t lr = sub_rows.rows(), n = sub_rows.cols();
        const double c = rho / static_cast<double>(l_t);
        std::vector<std::size_t> picked;
        std::vector<bool> used(n, false);
        picked.reserve(l_t);

        for (std::size_t step = 0; step < l_t; ++step)
        {
            // Deflation P = I - c H^ (I + c H^^H H^)^{-1} H^^H over picked columns H^.
            ComplexMatrix p;
            if (!picked.empty())
            {
                const ComplexMatrix hs = sub_rows.select_cols(picked);
                ComplexMatrix k = gram_cols(hs);
                k *= c;
                for (std::size_t i = 0; i < k.rows(); ++i)
                    k(i, i) += 1.0;
                p = hs * hpd_inverse(k) * hs.adjoint();
                p *= -c;
                for (std::size_t i = 0; i < lr; ++i)
                    p(i, i) += 1.0;
            }

            std::size_t best = n;
            double best_score = -std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j)
            {
                if (used[j])
                    continue;
                double score = 0.0;
                if (picked.empty())
                {
                    for (std::size_t i = 0; i < lr; ++i)
                        score += std::norm(sub_rows(i, j));
                }
                else
                {
                    cdouble s{0.0, 0.0};
                    for (std::size_t a = 0; a < lr; ++a)
                    {
                        cdouble t{0.0, 0.0};
                        for (std::size_t b = 0; b < lr; ++b)
                            t += p(a, b) * sub_rows(b, j);
                        s += std::conj(sub_rows(a, j)) * t;
                    }
                    score = s.real();
                }
                if (score > best_score)
                {
                    best_score = score;
                    best = j;
                }
            }
            used[best] = true;
            picked.push_back(best);
        }
        return picked;
    }

    BeamSelection fast_beam_select(const ComplexMatrix &hv, std::size_t l_r, std::size_t l_t, double rho,
                                   ReceiveScaling scaling)
    {
        auto rx = issa_receive_select(hv, l_r, rho, l_t, scaling);
        auto tx = issa_transmit_select(hv.select_rows(rx), l_t, rho);
        std::sort(rx.begin(), rx.end());
        std::sort(tx.begin(), tx.end());
        return detail::finish(hv, std::move(rx), std::move(tx), rho, l_t);
    }

    SelectionResult fast_select(const ChannelSet &channels, const SelectionOptions &opt)
    {
        const auto &cfg = channels.config;
        SelectionResult out;
        out.state = fast_state_select(channels);
        auto sel = fast_beam_select(channels.beamspace[out.state], cfg.l_r, cfg.l_t, cfg.rho, opt.receive_scaling);
        out.mask = std::move(sel.mask);
        out.throughput_bits = sel.throughput_bits;
        out.submatrix = channels.beamspace[out.state].select(out.mask.rx_beams, out.mask.tx_beams);
        return out;
    }

    boost::multiprecision::cpp_int binomial(std::size_t n, std::size_t k)
    {
        if (k > n)
            return 0;
        k = std::min(k, n - k);
        boost::multiprecision::cpp_int r = 1;
        for (std::size_t i = 1; i <= k; ++i)
        {
            r *= n - k + i;
            r /= i;
        }
        return r;
    }

    SearchSpace count_search_space(const SystemConfig &cfg)
    {
        validate(cfg);
        const auto ct = binomial(cfg.n_t, cfg.l_t);
        const auto cr = binomial(cfg.n_r, cfg.l_r);
        SearchSpace s;
        s.n_total = cfg.n_states * ct * cr;
        s.feedback_bits = std::log2(static_cast<double>(cfg.n_states)) + std::log2(ct.convert_to<double>()) +
                          std::log2(cr.convert_to<double>());
        return s;
    }
}
