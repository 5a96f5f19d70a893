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

#include "osdma/beamforming.hpp"
#include "osdma/errors.hpp"

#include <algorithm>
#include <cmath>

namespace osdma
{
    namespace
    {
        constexpr double kUnitarityTol = 1e-10;
        constexpr int kMaxAttempts = 3;

        // Orthonormalises the columns of z in place (two passes of modified Gram-Schmidt).
        // Returns false if a column collapses numerically.
        bool orthonormalise_columns(ComplexMatrix &z)
        {
            const std::size_t n = z.rows();
            for (std::size_t c = 0; c < z.cols(); ++c)
            {
                const double original = std::sqrt(norm_squared(z.column(c)));
                for (int pass = 0; pass < 2; ++pass)
                    for (std::size_t p = 0; p < c; ++p)
                    {
                        cd proj(0.0, 0.0);
                        for (std::size_t r = 0; r < n; ++r)
                            proj += std::conj(z(r, p)) * z(r, c);
                        for (std::size_t r = 0; r < n; ++r)
                            z(r, c) -= proj * z(r, p);
                    }
                const double len = std::sqrt(norm_squared(z.column(c)));
                if (!(len > 1e-8 * original) || !(len > 0.0))
                    return false;
                for (std::size_t r = 0; r < n; ++r)
                    z(r, c) /= len;
            }
            return true;
        }
    }

    BeamMatrix::BeamMatrix(ComplexMatrix a, double per_beam_power) : a_(std::move(a)), per_beam_power_(per_beam_power)
    {
        if (a_.rows() != a_.cols())
            throw Error(ErrorCode::InvalidArgument, "BeamMatrix: A must be square");
        if (!(per_beam_power > 0.0) || !std::isfinite(per_beam_power))
            throw Error(ErrorCode::InvalidArgument, "BeamMatrix: per-beam power must be positive");
        if (unitarity_error() > kUnitarityTol)
            throw Error(ErrorCode::InvalidArgument, "BeamMatrix: A is not unitary");
    }

    double BeamMatrix::unitarity_error() const
    {
        const ComplexMatrix gram = matmul(hermitian(a_), a_);
        double worst = 0.0;
        for (std::size_t i = 0; i < gram.rows(); ++i)
            for (std::size_t j = 0; j < gram.cols(); ++j)
                worst = std::max(worst, std::abs(gram(i, j) - (i == j ? cd(1.0, 0.0) : cd(0.0, 0.0))));
        return worst;
    }

    BeamMatrix random_orthonormal_beams(std::size_t m, RngStream &rng, double per_beam_power)
    {
        if (m < 1)
            throw Error(ErrorCode::InvalidArgument, "random_orthonormal_beams: M must be at least 1");
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt)
        {
            ComplexMatrix z(m, m);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    z(r, c) = rng.complex_normal();
            // Gram-Schmidt yields Z = QR with R_ii = column length > 0, which is the
            // phase convention that makes Q exactly Haar.
            if (orthonormalise_columns(z))
                return BeamMatrix(std::move(z), per_beam_power);
        }
        throw Error(ErrorCode::DegenerateDraw, "random_orthonormal_beams: rank-deficient draw after 3 attempts");
    }

    BeamMatrix identity_beams(std::size_t m, double per_beam_power)
    {
        if (m < 1)
            throw Error(ErrorCode::InvalidArgument, "identity_beams: M must be at least 1");
        return BeamMatrix(ComplexMatrix::identity(m), per_beam_power);
    }
}
