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

#ifndef OSDMA_ANALYTICS_HPP
#define OSDMA_ANALYTICS_HPP

#include "osdma/combining.hpp"
#include "osdma/numerics.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace osdma
{
    // Closed-form CDFs of the effective SIR (no noise) of one user on one beam.
    // All of them throw Error(Domain) for x < 0 or (M, N) outside the validity domain:
    // Measured needs M >= 2, SC/MRC need M >= N (and M >= 2), OC needs M > N.
    double cdf_measured(double x, std::size_t m);
    double cdf_sc(double x, std::size_t m, std::size_t n);
    double cdf_mrc(double x, std::size_t m, std::size_t n);
    double cdf_oc(double x, std::size_t m, std::size_t n);

    // Per-antenna baseline approximation, [1 - (1+x)^-(M-1)]^(N K_i).
    double sh_baseline_cdf(double x, std::size_t m, std::size_t n, std::size_t requests);

    // Exact binomial coefficient; throws Error(Domain) on overflow.
    std::uint64_t binomial(std::size_t n, std::size_t k);

    class SirCdf
    {
    public:
        SirCdf(CombinerKind combiner, std::size_t m, std::size_t n);

        CombinerKind combiner() const noexcept { return combiner_; }
        std::size_t m() const noexcept { return m_; }
        std::size_t n() const noexcept { return n_; }

        double operator()(double x) const { return cdf(x); }
        double cdf(double x) const;
        // 1 - F(x), evaluated directly from the tail terms so it keeps full relative
        // precision when F is close to one.
        double survival(double x) const;

    private:
        CombinerKind combiner_;
        std::size_t m_;
        std::size_t n_;
    };

    // [F(x)]^K
    double cdf_max(const SirCdf &base, std::size_t k, double x);
    // 1 - [F(x)]^K without cancellation.
    double survival_max(const SirCdf &base, std::size_t k, double x);

    // Frechet limit of the K-user maximum for the M = 4, N = 2 system:
    // OC q = 2, scale sqrt(3K) - 1; MRC q = 3, scale (4K)^(1/3) - 1; SC q = 3, scale (2K)^(1/3) - 1.
    struct FrechetApprox
    {
        CombinerKind combiner = CombinerKind::OC;
        std::size_t k = 1;
        double scale = 1.0; // normaliser a_K
        double exponent = 2.0;
    };

    FrechetApprox frechet_approx(CombinerKind combiner, std::size_t k);

    // exp(-(scale / x)^q) for x > 0, 0 otherwise.
    double frechet_cdf(const FrechetApprox &approx, double x);

    // Root of F(x) = 1 - 1/K. Requires K >= 2.
    double characteristic_extreme(const SirCdf &base, std::size_t k);

    // Average sum rate of the M = 4, N = 2 system from the Frechet limit (bits/s/Hz).
    double asymptotic_throughput(CombinerKind combiner, std::size_t k);

    // M / ln 2 * integral of (1 - F(x)^K) / (1 + x) over (0, inf), the integrated-by-parts
    // form of E[sum_m log2(1 + max_k SIR)].
    double exact_throughput(const SirCdf &base, std::size_t k);

    // Same integral for an arbitrary CDF, optionally truncated to [0, x_max].
    double throughput_integral(const RealFunction &cdf, std::size_t k, std::size_t beams,
                               double x_max = INFINITY, double rel_tol = 1e-6);

    // OC: 4 log2(sqrt(3K)); MRC: 4 log2((4K)^(1/3)); SC: 4 log2((2K)^(1/3)).
    double scaling_law(CombinerKind combiner, std::size_t k);
}

#endif
