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

#ifndef OSDMA_SCHEDULING_HPP
#define OSDMA_SCHEDULING_HPP

#include "osdma/beamforming.hpp"
#include "osdma/channel.hpp"
#include "osdma/combining.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace osdma
{
    enum class SchedulerKind
    {
        Proposed,   // every user feeds back all M effective SINRs
        SHBaseline, // every receive antenna competes alone with its best beam
    };

    std::string_view to_string(SchedulerKind kind) noexcept;
    std::optional<SchedulerKind> parse_scheduler(std::string_view text) noexcept;

    struct BeamSlot
    {
        std::optional<std::size_t> winner; // empty = unassigned (baseline only)
        double sinr = 0.0;
        std::size_t requests = 0; // reports received for this beam (baseline only)
    };

    struct BeamAssignment
    {
        std::vector<BeamSlot> beams;

        std::size_t unassigned() const noexcept;
    };

    // Per beam, the user with the largest reported SINR; ties go to the lowest user index.
    // A user may win several beams. Throws InvalidArgument for an empty or ragged list.
    BeamAssignment schedule(std::span<const FeedbackTable> tables);

    // Sum over beams of log2(1 + winner SINR), unassigned beams contribute nothing.
    double sum_rate(const BeamAssignment &assignment);

    BeamAssignment assign_from_reports(std::span<const AntennaBeamReport> reports, std::size_t beams);

    BeamAssignment sh_baseline_schedule(std::span<const ChannelMatrix> channels, const BeamMatrix &a,
                                        const NoiseProfile &noise);

    struct SimConfig
    {
        std::size_t M = 4;
        std::size_t N = 2;
        std::size_t K = 50;
        NoiseProfile noise = NoiseProfile::uniform(50, 1.0);
        double total_power = 4.0;
        CombinerKind combiner = CombinerKind::OC;
        SchedulerKind scheduler = SchedulerKind::Proposed;
        std::size_t trials = 10000;
        std::uint64_t master_seed = 20080401;
        std::size_t threads = 1; // does not affect results

        double per_beam_power() const noexcept { return total_power / static_cast<double>(M); }

        // Throws InvalidArgument when an invariant is broken.
        void validate() const;
    };

    struct Scheme
    {
        CombinerKind combiner = CombinerKind::OC;
        SchedulerKind scheduler = SchedulerKind::Proposed;

        friend bool operator==(const Scheme &, const Scheme &) = default;
    };

    std::string scheme_label(const Scheme &s);

    struct ThroughputStats
    {
        std::size_t trials = 0; // valid trials used
        double mean_sum_rate = 0.0;
        double std_error = 0.0;
        std::size_t discarded_trials = 0;
        std::vector<double> per_beam_mean_sinr;
        std::size_t unassigned_beams = 0; // summed over valid trials
    };

    // Per-trial outcomes for several schemes evaluated on identical channel and beam draws.
    struct TrialSet
    {
        std::vector<Scheme> schemes;
        std::size_t trials = 0;
        std::size_t beams = 0;
        std::vector<std::vector<double>> sum_rates;   // [scheme][trial]
        std::vector<std::vector<char>> valid;         // [scheme][trial]
        std::vector<std::vector<double>> beam_sinr;   // [scheme][trial * beams + m]
        std::vector<std::vector<std::uint32_t>> unassigned; // [scheme][trial]
    };

    // Runs config.trials slots. Trial t draws channels then beams from RngStream(seed, t),
    // so the result does not depend on config.threads.
    TrialSet run_trials(const SimConfig &config, std::span<const Scheme> schemes);

    ThroughputStats summarize(const TrialSet &set, std::size_t scheme);

    // Mean and standard error of rate[a] - weight * rate[b] over trials valid for both.
    struct PairedDifference
    {
        std::size_t trials = 0;
        double mean = 0.0;
        double std_error = 0.0;
    };

    PairedDifference paired_difference(const TrialSet &set, std::size_t a, std::size_t b, double weight = 1.0);

    // Throws Error(AllTrialsDegenerate) when no trial survives.
    ThroughputStats monte_carlo_throughput(const SimConfig &config);
}

#endif
