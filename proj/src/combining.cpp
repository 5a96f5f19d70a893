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

#include "osdma/combining.hpp"
#include "osdma/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace osdma
{
    std::string_view to_string(CombinerKind kind) noexcept
    {
        switch (kind)
        {
        case CombinerKind::Measured:
            return "Measured";
        case CombinerKind::SC:
            return "SC";
        case CombinerKind::MRC:
            return "MRC";
        case CombinerKind::OC:
            return "OC";
        }
        return "?";
    }

    std::optional<CombinerKind> parse_combiner(std::string_view text) noexcept
    {
        std::string lower(text);
        std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c)
                       { return static_cast<char>(std::tolower(c)); });
        if (lower == "measured")
            return CombinerKind::Measured;
        if (lower == "sc")
            return CombinerKind::SC;
        if (lower == "mrc")
            return CombinerKind::MRC;
        if (lower == "oc")
            return CombinerKind::OC;
        return std::nullopt;
    }

    EffectiveChannel::EffectiveChannel(const ChannelMatrix &h, const BeamMatrix &a)
        : g_(matmul(h.h, a.matrix())), power_(a.per_beam_power())
    {
        columns_.reserve(g_.cols());
        for (std::size_t m = 0; m < g_.cols(); ++m)
            columns_.push_back(g_.column(m));
    }

    namespace
    {
        void check_beam(const EffectiveChannel &g, std::size_t beam, double noise_var)
        {
            if (beam >= g.beams())
                throw Error(ErrorCode::InvalidArgument, "beam index out of range");
            if (!(noise_var >= 0.0))
                throw Error(ErrorCode::InvalidArgument, "noise variance must be nonnegative");
        }

        double finite_or_degenerate(double value, const char *what)
        {
            if (!std::isfinite(value) || value < 0.0)
                throw Error(ErrorCode::DegenerateDraw, what);
            return value;
        }
    }

    double measured_sinr(const EffectiveChannel &g, std::size_t antenna, std::size_t beam, double noise_var)
    {
        check_beam(g, beam, noise_var);
        if (antenna >= g.antennas())
            throw Error(ErrorCode::InvalidArgument, "antenna index out of range");
        const double p = g.power();
        double interference = 0.0;
        for (std::size_t m = 0; m < g.beams(); ++m)
            if (m != beam)
                interference += std::norm(g.gains()(antenna, m));
        const double denom = p * interference + noise_var;
        if (!(denom > 0.0))
            throw Error(ErrorCode::DegenerateDraw, "measured_sinr: zero interference-plus-noise");
        return finite_or_degenerate(p * std::norm(g.gains()(antenna, beam)) / denom, "measured_sinr: non-finite");
    }

    double sc_sinr(const EffectiveChannel &g, std::size_t beam, double noise_var)
    {
        double best = measured_sinr(g, 0, beam, noise_var);
        for (std::size_t n = 1; n < g.antennas(); ++n)
            best = std::max(best, measured_sinr(g, n, beam, noise_var));
        return best;
    }

    double mrc_sinr(const EffectiveChannel &g, std::size_t beam, double noise_var)
    {
        check_beam(g, beam, noise_var);
        const ComplexVector &s = g.beam_column(beam);
        const double p = g.power();
        const double s2 = norm_squared(s);
        if (!(s2 > 0.0))
            throw Error(ErrorCode::DegenerateDraw, "mrc_sinr: zero effective signal");
        double cross = 0.0;
        for (std::size_t m = 0; m < g.beams(); ++m)
            if (m != beam)
                cross += std::norm(inner(s, g.beam_column(m)));
        const double denom = p * cross + s2 * noise_var;
        if (!(denom > 0.0))
            throw Error(ErrorCode::DegenerateDraw, "mrc_sinr: zero interference-plus-noise");
        return finite_or_degenerate(p * s2 * s2 / denom, "mrc_sinr: non-finite");
    }

    double oc_sinr(const EffectiveChannel &g, std::size_t beam, double noise_var)
    {
        check_beam(g, beam, noise_var);
        const std::size_t n = g.antennas();
        const double p = g.power();
        ComplexMatrix r(n, n);
        for (std::size_t m = 0; m < g.beams(); ++m)
        {
            if (m == beam)
                continue;
            const ComplexVector &v = g.beam_column(m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    r(i, j) += p * v[i] * std::conj(v[j]);
        }
        for (std::size_t i = 0; i < n; ++i)
            r(i, i) += noise_var;

        const ComplexVector &s = g.beam_column(beam);
        ComplexVector x;
        try
        {
            x = solve_hermitian_posdef(r, s);
        }
        catch (const Error &e)
        {
            if (e.code() == ErrorCode::NotPositiveDefinite)
                throw Error(ErrorCode::DegenerateDraw, std::string("oc_sinr: singular interference covariance: ") + e.what());
            throw;
        }
        return finite_or_degenerate(p * inner(s, x).real(), "oc_sinr: non-finite");
    }

    double generic_combiner_sinr(std::span<const cd> w, const EffectiveChannel &g, std::size_t beam, double noise_var)
    {
        check_beam(g, beam, noise_var);
        if (w.size() != g.antennas())
            throw Error(ErrorCode::InvalidArgument, "generic_combiner_sinr: weight length must equal N");
        const double w2 = norm_squared(w);
        if (!(w2 > 0.0))
            throw Error(ErrorCode::InvalidArgument, "generic_combiner_sinr: zero weight vector");
        const double p = g.power();
        double interference = 0.0;
        for (std::size_t m = 0; m < g.beams(); ++m)
            if (m != beam)
                interference += std::norm(inner(w, g.beam_column(m)));
        const double denom = p * interference + w2 * noise_var;
        if (!(denom > 0.0))
            throw Error(ErrorCode::DegenerateDraw, "generic_combiner_sinr: zero interference-plus-noise");
        return finite_or_degenerate(p * std::norm(inner(w, g.beam_column(beam))) / denom,
                                    "generic_combiner_sinr: non-finite");
    }

    double measured_sinr(const ChannelMatrix &h, const BeamMatrix &a, std::size_t antenna, std::size_t beam,
                         double noise_var)
    {
        return measured_sinr(EffectiveChannel(h, a), antenna, beam, noise_var);
    }

    double sc_sinr(const ChannelMatrix &h, const BeamMatrix &a, std::size_t beam, double noise_var)
    {
        return sc_sinr(EffectiveChannel(h, a), beam, noise_var);
    }

    double mrc_sinr(const ChannelMatrix &h, const BeamMatrix &a, std::size_t beam, double noise_var)
    {
        return mrc_sinr(EffectiveChannel(h, a), beam, noise_var);
    }

    double oc_sinr(const ChannelMatrix &h, const BeamMatrix &a, std::size_t beam, double noise_var)
    {
        return oc_sinr(EffectiveChannel(h, a), beam, noise_var);
    }

    double generic_combiner_sinr(std::span<const cd> w, const ChannelMatrix &h, const BeamMatrix &a, std::size_t beam,
                                 double noise_var)
    {
        return generic_combiner_sinr(w, EffectiveChannel(h, a), beam, noise_var);
    }

    double effective_sinr(CombinerKind combiner, const EffectiveChannel &g, std::size_t beam, double noise_var)
    {
        switch (combiner)
        {
        case CombinerKind::SC:
            return sc_sinr(g, beam, noise_var);
        case CombinerKind::MRC:
            return mrc_sinr(g, beam, noise_var);
        case CombinerKind::OC:
            return oc_sinr(g, beam, noise_var);
        case CombinerKind::Measured:
            break;
        }
        throw Error(ErrorCode::InvalidArgument, "effective_sinr: combiner must be SC, MRC or OC");
    }

    FeedbackTable feedback_table(std::size_t user_index, const EffectiveChannel &g, double noise_var,
                                 CombinerKind combiner)
    {
        if (combiner == CombinerKind::Measured)
            throw Error(ErrorCode::InvalidArgument, "feedback_table: combiner must be SC, MRC or OC");
        FeedbackTable table{user_index, combiner, std::vector<double>(g.beams())};
        for (std::size_t m = 0; m < g.beams(); ++m)
            table.sinr[m] = effective_sinr(combiner, g, m, noise_var);
        return table;
    }

    FeedbackTable feedback_table(const ChannelMatrix &h, const BeamMatrix &a, double noise_var, CombinerKind combiner)
    {
        return feedback_table(h.user_index, EffectiveChannel(h, a), noise_var, combiner);
    }

    std::vector<AntennaBeamReport> antenna_reports(std::size_t user_index, const EffectiveChannel &g, double noise_var)
    {
        std::vector<AntennaBeamReport> reports;
        reports.reserve(g.antennas());
        for (std::size_t j = 0; j < g.antennas(); ++j)
        {
            AntennaBeamReport rep{user_index, j, 0, measured_sinr(g, j, 0, noise_var)};
            for (std::size_t m = 1; m < g.beams(); ++m)
            {
                const double v = measured_sinr(g, j, m, noise_var);
                if (v > rep.best_sinr)
                {
                    rep.best_sinr = v;
                    rep.best_beam_index = m;
                }
            }
            reports.push_back(rep);
        }
        return reports;
    }
}
