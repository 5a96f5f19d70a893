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

#ifndef OSDMA_BEAMFORMING_HPP
#define OSDMA_BEAMFORMING_HPP

#include "osdma/channel.hpp"
#include "osdma/numerics.hpp"

namespace osdma
{
    // M x M unitary beamforming matrix; column m is beam a_m. Each stream is sent
    // with power per_beam_power, so the total transmit power is M * per_beam_power.
    class BeamMatrix
    {
    public:
        BeamMatrix(ComplexMatrix a, double per_beam_power);

        const ComplexMatrix &matrix() const noexcept { return a_; }
        std::size_t beams() const noexcept { return a_.cols(); }
        double per_beam_power() const noexcept { return per_beam_power_; }
        double total_power() const noexcept { return per_beam_power_ * static_cast<double>(a_.cols()); }
        ComplexVector beam(std::size_t m) const { return a_.column(m); }

        // max |(A^H A - I)_ij|
        double unitarity_error() const;

    private:
        ComplexMatrix a_;
        double per_beam_power_;
    };

    // Haar-distributed unitary draw: Gram-Schmidt on an i.i.d. complex Gaussian matrix
    // with the triangular factor's diagonal kept real positive.
    BeamMatrix random_orthonormal_beams(std::size_t m, RngStream &rng, double per_beam_power = 1.0);

    BeamMatrix identity_beams(std::size_t m, double per_beam_power = 1.0);
}

#endif
