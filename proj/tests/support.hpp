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

#ifndef OSDMA_TESTS_SUPPORT_HPP
#define OSDMA_TESTS_SUPPORT_HPP

#include "osdma/channel.hpp"
#include "osdma/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace osdma::test
{
    inline constexpr std::uint64_t kSeed = 0x5eed2008u;

    inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, RngStream &rng)
    {
        ComplexMatrix a(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                a(r, c) = rng.complex_normal();
        return a;
    }

    inline ComplexVector random_vector(std::size_t n, RngStream &rng)
    {
        ComplexVector v(n);
        for (auto &z : v)
            z = rng.complex_normal();
        return v;
    }

    inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.data().size(); ++i)
            worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
        return worst;
    }

    // One-sample KS statistic, independent of the library's Ecdf.
    inline double ks_one_sample(std::vector<double> xs, const std::function<double(double)> &cdf)
    {
        std::sort(xs.begin(), xs.end());
        const double n = static_cast<double>(xs.size());
        double d = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            const double f = cdf(xs[i]);
            d = std::max({d, std::abs(f - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - f)});
        }
        return d;
    }

    inline double ks_two_sample(std::vector<double> a, std::vector<double> b)
    {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::size_t i = 0, j = 0;
        double d = 0.0;
        while (i < a.size() && j < b.size())
        {
            const double x = std::min(a[i], b[j]);
            while (i < a.size() && a[i] <= x)
                ++i;
            while (j < b.size() && b[j] <= x)
                ++j;
            d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
        }
        return d;
    }
}

#endif
