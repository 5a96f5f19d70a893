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

#include "osdma/channel.hpp"
#include "osdma/errors.hpp"

#include <algorithm>
#include <cmath>

namespace osdma
{
    std::uint64_t splitmix64(std::uint64_t x) noexcept
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t tag) noexcept
    {
        return splitmix64(splitmix64(master_seed) ^ (tag * 0xD1B54A32D192ED03ULL));
    }

    RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : master_seed_(master_seed), stream_id_(stream_id),
          engine_(splitmix64(splitmix64(master_seed) + splitmix64(~stream_id)))
    {
    }

    cd RngStream::complex_normal()
    {
        const double re = half_variance_normal_(engine_);
        const double im = half_variance_normal_(engine_);
        return {re, im};
    }

    double RngStream::uniform()
    {
        return uniform_(engine_);
    }

    NoiseProfile::NoiseProfile(std::vector<double> variances) : variances_(std::move(variances))
    {
        for (double v : variances_)
            if (!(v >= 0.0) || !std::isfinite(v))
                throw Error(ErrorCode::InvalidArgument, "NoiseProfile: variances must be finite and nonnegative");
    }

    NoiseProfile NoiseProfile::uniform(std::size_t users, double variance)
    {
        return NoiseProfile(std::vector<double>(users, variance));
    }

    bool NoiseProfile::all_zero() const noexcept
    {
        return std::all_of(variances_.begin(), variances_.end(), [](double v)
                           { return v == 0.0; });
    }

    std::vector<ChannelMatrix> sample_channels(std::size_t users, std::size_t tx_antennas, std::size_t rx_antennas,
                                               RngStream &rng)
    {
        if (users < 1 || rx_antennas < 1 || tx_antennas < 1)
            throw Error(ErrorCode::InvalidArgument, "sample_channels: K, M and N must be at least 1");
        if (rx_antennas > tx_antennas)
            throw Error(ErrorCode::InvalidArgument, "sample_channels: N must not exceed M");

        std::vector<ChannelMatrix> out;
        out.reserve(users);
        for (std::size_t k = 0; k < users; ++k)
        {
            std::vector<cd> entries(rx_antennas * tx_antennas);
            for (cd &z : entries)
                z = rng.complex_normal();
            out.push_back({k, ComplexMatrix(rx_antennas, tx_antennas, std::move(entries))});
        }
        return out;
    }
}
