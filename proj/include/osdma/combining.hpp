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

#ifndef OSDMA_COMBINING_HPP
#define OSDMA_COMBINING_HPP

#include "osdma/beamforming.hpp"
#include "osdma/channel.hpp"
#include "osdma/numerics.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace osdma
{
    // Measured is the per-antenna SINR; it is only used by the per-antenna baseline.
    enum class CombinerKind
    {
        Measured,
        SC,
        MRC,
        OC,
    };

    std::string_view to_string(CombinerKind kind) noexcept;
    std::optional<CombinerKind> parse_combiner(std::string_view text) noexcept;

    // G = H A together with the per-beam power; column m is the effective channel H a_m.
    // All SINR routines work from this so a table costs one N x M x M product.
    class EffectiveChannel
    {
    public:
        EffectiveChannel(const ChannelMatrix &h, const BeamMatrix &a);

        std::size_t antennas() const noexcept { return g_.rows(); }
        std::size_t beams() const noexcept { return g_.cols(); }
        double power() const noexcept { return power_; }
        const ComplexMatrix &gains() const noexcept { return g_; }
        const ComplexVector &beam_column(std::size_t m) const { return columns_.at(m); }

    private:
        ComplexMatrix g_;
        std::vector<ComplexVector> columns_;
        double power_;
    };

    // Every SINR routine throws Error(DegenerateDraw) for measure-zero singular draws
    // (zero denominator, zero signal, singular interference covariance) and
    // Error(InvalidArgument) for bad indices or negative noise variance.

    double measured_sinr(const EffectiveChannel &g, std::size_t antenna, std::size_t beam, double noise_var);
    double sc_sinr(const EffectiveChannel &g, std::size_t beam, double noise_var);
    double mrc_sinr(const EffectiveChannel &g, std::size_t beam, double noise_var);
    double oc_sinr(const EffectiveChannel &g, std::size_t beam, double noise_var);
    double generic_combiner_sinr(std::span<const cd> w, const EffectiveChannel &g, std::size_t beam, double noise_var);

    double measured_sinr(const ChannelMatrix &h, const BeamMatrix &a, std::size_t antenna, std::size_t beam,
                         double noise_var);
    double sc_sinr(const ChannelMatrix &h, const BeamMatrix &a, std::size_t beam, double noise_var);
    double mrc_sinr(const ChannelMatrix &h, const BeamMatrix &a, std::size_t beam, double noise_var);
    double oc_sinr(const ChannelMatrix &h, const BeamMatrix &a, std::size_t beam, double noise_var);
    double generic_combiner_sinr(std::span<const cd> w, const ChannelMatrix &h, const BeamMatrix &a, std::size_t beam,
                                 double noise_var);

    // Effective SINR of one beam under the given combiner; Measured is rejected.
    double effective_sinr(CombinerKind combiner, const EffectiveChannel &g, std::size_t beam, double noise_var);

    struct FeedbackTable
    {
        std::size_t user_index = 0;
        CombinerKind combiner = CombinerKind::OC;
        std::vector<double> sinr; // one entry per beam
    };

    FeedbackTable feedback_table(const ChannelMatrix &h, const BeamMatrix &a, double noise_var, CombinerKind combiner);
    FeedbackTable feedback_table(std::size_t user_index, const EffectiveChannel &g, double noise_var,
                                 CombinerKind combiner);

    // What one receive antenna feeds back in the per-antenna baseline: its best beam.
    struct AntennaBeamReport
    {
        std::size_t user_index = 0;
        std::size_t antenna_index = 0;
        std::size_t best_beam_index = 0;
        double best_sinr = 0.0;
    };

    // One report per receive antenna; ties go to the lowest beam index.
    std::vector<AntennaBeamReport> antenna_reports(std::size_t user_index, const EffectiveChannel &g, double noise_var);
}

#endif
