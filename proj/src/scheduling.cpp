// SPDX-License-Identifier: Apache-2.0
//
// osdma - opportunistic scheduling and beamforming for MIMO-SDMA downlinks
// Copyright (C) 2026 The osdma authors
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

#include "osdma/scheduling.hpp"
#include "osdma/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "parallel.hpp"

namespace osdma
{
    std::string_view to_string(SchedulerKind kind) noexcept
    {
        return kind == SchedulerKind::Proposed ? "proposed" : "sh";
    }

    std::optional<SchedulerKind> parse_scheduler(std::string_view text) noexcept
    {
        std::string lower(text);
        std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c)
                       { return static_cast<char>(std::tolower(c)); });
        if (lower == "proposed")
            return SchedulerKind::Proposed;
        if (lower == "sh" || lower == "shbaseline" || lower == "sh-baseline" || lower == "baseline")
            return SchedulerKind::SHBaseline;
        return std::nullopt;
    }

    std::size_t BeamAssignment::unassigned() const noexcept
    {
        return static_cast<std::size_t>(std::count_if(beams.begin(), beams.end(), [](const BeamSlot &s)
                                                      { return !s.winner.has_value(); }));
    }

    BeamAssignment schedule(std::span<const FeedbackTable> tables)
    {
        if (tables.empty())
            throw Error(ErrorCode::InvalidArgument, "schedule: empty feedback table list");
        const std::size_t m_beams = tables.front().sinr.size();
        for (const auto &t : tables)
            if (t.sinr.size() != m_beams || t.combiner != tables.front().combiner)
                throw Error(ErrorCode::InvalidArgument, "schedule: tables must share M and combiner");

        BeamAssignment out;
        out.beams.resize(m_beams);
        for (std::size_t m = 0; m < m_beams; ++m)
        {
            std::size_t best = 0;
            for (std::size_t k = 1; k < tables.size(); ++k)
                if (tables[k].sinr[m] > tables[best].sinr[m])
                    best = k;
            out.beams[m].winner = tables[best].user_index;
            out.beams[m].sinr = tables[best].sinr[m];
            out.beams[m].requests = tables.size();
        }
        return out;
    }

    double sum_rate(const BeamAssignment &assignment)
    {
        double total = 0.0;
        for (const auto &slot : assignment.beams)
            if (slot.winner)
                total += std::log2(1.0 + slot.sinr);
        return total;
    }

    BeamAssignment assign_from_reports(std::span<const AntennaBeamReport> reports, std::size_t beams)
    {
        BeamAssignment out;
        out.beams.resize(beams);
        for (const auto &rep : reports)
        {
            if (rep.best_beam_index >= beams)
                throw Error(ErrorCode::InvalidArgument, "assign_from_reports: beam index out of range");
            BeamSlot &slot = out.beams[rep.best_beam_index];
            ++slot.requests;
            // Reports arrive in (user, antenna) order, so strict > keeps the lowest user on ties.
            if (!slot.winner || rep.best_sinr > slot.sinr)
            {
                slot.winner = rep.user_index;
                slot.sinr = rep.best_sinr;
            }
        }
        return out;
    }

    BeamAssignment sh_baseline_schedule(std::span<const ChannelMatrix> channels, const BeamMatrix &a,
                                        const NoiseProfile &noise)
    {
        if (channels.empty())
            throw Error(ErrorCode::InvalidArgument, "sh_baseline_schedule: no users");
        if (noise.size() != channels.size())
            throw Error(ErrorCode::InvalidArgument, "sh_baseline_schedule: noise profile length must equal K");
        std::vector<AntennaBeamReport> reports;
        for (std::size_t k = 0; k < channels.size(); ++k)
        {
            auto user = antenna_reports(channels[k].user_index, EffectiveChannel(channels[k], a), noise[k]);
            reports.insert(reports.end(), user.begin(), user.end());
        }
        return assign_from_reports(reports, a.beams());
    }

    void SimConfig::validate() const
    {
        auto fail = [](const std::string &msg)
        { throw Error(ErrorCode::InvalidArgument, "SimConfig: " + msg); };
        if (M < 1 || M > 8)
            fail("M must be in [1, 8]");
        if (N < 1 || N > M)
            fail("N must be in [1, M]");
        if (K < 1)
            fail("K must be at least 1");
        if (trials < 1)
            fail("trials must be at least 1");
        if (!(total_power > 0.0) || !std::isfinite(total_power))
            fail("total_power must be positive");
        if (noise.size() != K)
            fail("noise profile must have K entries");
        if (combiner == CombinerKind::Measured && scheduler == SchedulerKind::Proposed)
            fail("the proposed scheduler needs an SC, MRC or OC combiner");
        const bool any_zero_noise = std::any_of(noise.variances().begin(), noise.variances().end(),
                                                [](double v)
                                                { return v == 0.0; });
        if (any_zero_noise && combiner == CombinerKind::OC && scheduler == SchedulerKind::Proposed && M <= N)
            fail("OC without noise requires M > N");
        if (any_zero_noise && M < 2)
            fail("zero noise requires M >= 2");
    }

    std::string scheme_label(const Scheme &s)
    {
        if (s.scheduler == SchedulerKind::SHBaseline)
            return "SH";
        return std::string(to_string(s.combiner));
    }

    namespace
    {
        void run_one_trial(const SimConfig &config, std::span<const Scheme> schemes, std::size_t t, TrialSet &set)
        {
            RngStream rng(config.master_seed, t);
            const auto channels = sample_channels(config.K, config.M, config.N, rng);
            const BeamMatrix beams = random_orthonormal_beams(config.M, rng, config.per_beam_power());

            std::vector<EffectiveChannel> eff;
            eff.reserve(channels.size());
            for (const auto &h : channels)
                eff.emplace_back(h, beams);

            for (std::size_t s = 0; s < schemes.size(); ++s)
            {
                try
                {
                    BeamAssignment assignment;
                    if (schemes[s].scheduler == SchedulerKind::Proposed)
                    {
                        std::vector<FeedbackTable> tables;
                        tables.reserve(eff.size());
                        for (std::size_t k = 0; k < eff.size(); ++k)
                            tables.push_back(feedback_table(k, eff[k], config.noise[k], schemes[s].combiner));
                        assignment = schedule(tables);
                    }
                    else
                    {
                        std::vector<AntennaBeamReport> reports;
                        for (std::size_t k = 0; k < eff.size(); ++k)
                        {
                            auto user = antenna_reports(k, eff[k], config.noise[k]);
                            reports.insert(reports.end(), user.begin(), user.end());
                        }
                        assignment = assign_from_reports(reports, config.M);
                    }
                    set.sum_rates[s][t] = sum_rate(assignment);
                    set.valid[s][t] = 1;
                    set.unassigned[s][t] = static_cast<std::uint32_t>(assignment.unassigned());
                    for (std::size_t m = 0; m < config.M; ++m)
                        set.beam_sinr[s][t * config.M + m] =
                            assignment.beams[m].winner ? assignment.beams[m].sinr : 0.0;
                }
                catch (const Error &e)
                {
                    if (e.code() != ErrorCode::DegenerateDraw)
                        throw;
                    set.valid[s][t] = 0;
                }
            }
        }
    }

    TrialSet run_trials(const SimConfig &config, std::span<const Scheme> schemes)
    {
        if (schemes.empty())
            throw Error(ErrorCode::InvalidArgument, "run_trials: no schemes requested");
        for (const auto &s : schemes)
            if (s.scheduler == SchedulerKind::Proposed && s.combiner == CombinerKind::Measured)
                throw Error(ErrorCode::InvalidArgument, "run_trials: the proposed scheduler needs SC, MRC or OC");
        for (const auto &s : schemes)
        {
            SimConfig per_scheme = config;
            per_scheme.combiner = s.combiner;
            per_scheme.scheduler = s.scheduler;
            per_scheme.validate();
        }

        TrialSet set;
        set.schemes.assign(schemes.begin(), schemes.end());
        set.trials = config.trials;
        set.beams = config.M;
        set.sum_rates.assign(schemes.size(), std::vector<double>(config.trials, 0.0));
        set.valid.assign(schemes.size(), std::vector<char>(config.trials, 0));
        set.beam_sinr.assign(schemes.size(), std::vector<double>(config.trials * config.M, 0.0));
        set.unassigned.assign(schemes.size(), std::vector<std::uint32_t>(config.trials, 0));

        detail::parallel_for(config.trials, config.threads, [&](std::size_t t)
                             { run_one_trial(config, schemes, t, set); });
        return set;
    }

    ThroughputStats summarize(const TrialSet &set, std::size_t scheme)
    {
        if (scheme >= set.schemes.size())
            throw Error(ErrorCode::InvalidArgument, "summarize: scheme index out of range");
        const auto &rates = set.sum_rates[scheme];
        const auto &valid = set.valid[scheme];

        ThroughputStats stats;
        CompensatedSum sum;
        std::vector<CompensatedSum> beam_sums(set.beams);
        for (std::size_t t = 0; t < set.trials; ++t)
        {
            if (!valid[t])
            {
                ++stats.discarded_trials;
                continue;
            }
            ++stats.trials;
            sum.add(rates[t]);
            stats.unassigned_beams += set.unassigned[scheme][t];
            for (std::size_t m = 0; m < set.beams; ++m)
                beam_sums[m].add(set.beam_sinr[scheme][t * set.beams + m]);
        }
        if (stats.trials == 0)
            return stats;

        const double n = static_cast<double>(stats.trials);
        stats.mean_sum_rate = sum.value() / n;
        CompensatedSum sq;
        for (std::size_t t = 0; t < set.trials; ++t)
            if (valid[t])
            {
                const double d = rates[t] - stats.mean_sum_rate;
                sq.add(d * d);
            }
        stats.std_error = stats.trials > 1 ? std::sqrt(sq.value() / (n - 1.0)) / std::sqrt(n) : 0.0;
        stats.per_beam_mean_sinr.resize(set.beams);
        for (std::size_t m = 0; m < set.beams; ++m)
            stats.per_beam_mean_sinr[m] = beam_sums[m].value() / n;
        return stats;
    }

    PairedDifference paired_difference(const TrialSet &set, std::size_t a, std::size_t b, double weight)
    {
        if (a >= set.schemes.size() || b >= set.schemes.size())
            throw Error(ErrorCode::InvalidArgument, "paired_difference: scheme index out of range");
        std::vector<double> diffs;
        diffs.reserve(set.trials);
        for (std::size_t t = 0; t < set.trials; ++t)
            if (set.valid[a][t] && set.valid[b][t])
                diffs.push_back(set.sum_rates[a][t] - weight * set.sum_rates[b][t]);

        PairedDifference out;
        out.trials = diffs.size();
        if (diffs.empty())
            return out;
        CompensatedSum sum;
        for (double d : diffs)
            sum.add(d);
        const double n = static_cast<double>(diffs.size());
        out.mean = sum.value() / n;
        CompensatedSum sq;
        for (double d : diffs)
            sq.add((d - out.mean) * (d - out.mean));
        out.std_error = diffs.size() > 1 ? std::sqrt(sq.value() / (n - 1.0)) / std::sqrt(n) : 0.0;
        return out;
    }

    ThroughputStats monte_carlo_throughput(const SimConfig &config)
    {
        const Scheme scheme{config.combiner, config.scheduler};
        const TrialSet set = run_trials(config, std::span<const Scheme>(&scheme, 1));
        ThroughputStats stats = summarize(set, 0);
        if (stats.trials == 0)
            throw Error(ErrorCode::AllTrialsDegenerate, "monte_carlo_throughput: every trial was degenerate");
        return stats;
    }
}
