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

#ifndef OSDMA_CHANNEL_HPP
#define OSDMA_CHANNEL_HPP

#include "osdma/numerics.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace osdma
{
    // Reproducible random stream. The engine seed is a mix of (master_seed, stream_id),
    // so trial t draws the same numbers whichever thread runs it.
    class RngStream
    {
    public:
        RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

        std::uint64_t master_seed() const noexcept { return master_seed_; }
        std::uint64_t stream_id() const noexcept { return stream_id_; }

        // Circularly-symmetric complex Gaussian, E|z|^2 = 1.
        cd complex_normal();
        double uniform(); // [0, 1)
        std::mt19937_64 &engine() noexcept { return engine_; }

    private:
        std::uint64_t master_seed_;
        std::uint64_t stream_id_;
        std::mt19937_64 engine_;
        std::normal_distribution<double> half_variance_normal_{0.0, 0.70710678118654752440};
        std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    };

    std::uint64_t splitmix64(std::uint64_t x) noexcept;

    // Seed for an independent purpose (e.g. a validation suite) under one master seed.
    std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t tag) noexcept;

    // One user's N x M channel; row j is the 1 x M gain vector seen by receive antenna j.
    struct ChannelMatrix
    {
        std::size_t user_index = 0;
        ComplexMatrix h;

        std::size_t receive_antennas() const noexcept { return h.rows(); }
        std::size_t transmit_antennas() const noexcept { return h.cols(); }
    };

    // Per-user noise variance per receive antenna (linear). Zero means interference-limited.
    class NoiseProfile
    {
    public:
        NoiseProfile() = default;
        explicit NoiseProfile(std::vector<double> variances);
        static NoiseProfile uniform(std::size_t users, double variance);

        std::size_t size() const noexcept { return variances_.size(); }
        double operator[](std::size_t k) const { return variances_.at(k); }
        const std::vector<double> &variances() const noexcept { return variances_; }
        bool all_zero() const noexcept;

    private:
        std::vector<double> variances_;
    };

    // K i.i.d. Rayleigh matrices with unit-variance entries. Throws InvalidArgument for N > M.
    std::vector<ChannelMatrix> sample_channels(std::size_t users, std::size_t tx_antennas, std::size_t rx_antennas,
                                               RngStream &rng);
}

#endif
