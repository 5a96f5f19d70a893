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
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace osdma;
using osdma::test::kSeed;

TEST_CASE("single-antenna gain is unit-mean exponential")
{
    std::vector<double> gains;
    double sum = 0.0;
    for (std::uint64_t s = 0; s < 20000; ++s)
    {
        RngStream rng(kSeed, s);
        const auto ch = sample_channels(1, 1, 1, rng);
        REQUIRE(ch.size() == 1);
        REQUIRE(ch[0].h.rows() == 1);
        REQUIRE(ch[0].h.cols() == 1);
        gains.push_back(std::norm(ch[0].h(0, 0)));
        sum += gains.back();
    }
    CHECK(sum / gains.size() == doctest::Approx(1.0).epsilon(0.03));
    CHECK(test::ks_one_sample(gains, [](double x) { return -std::expm1(-x); }) < 0.02);
}

TEST_CASE("entry second moment, real/imaginary correlation and user independence")
{
    RngStream rng(kSeed, 7);
    double second = 0.0, re_im = 0.0, re2 = 0.0, im2 = 0.0;
    std::size_t count = 0;
    std::vector<double> u0, u1;
    for (int draw = 0; draw < 12500; ++draw)
    {
        const auto ch = sample_channels(5, 4, 2, rng);
        REQUIRE(ch.size() == 5);
        for (std::size_t k = 0; k < ch.size(); ++k)
        {
            CHECK(ch[k].user_index == k);
            for (const cd &z : ch[k].h.data())
            {
                second += std::norm(z);
                re_im += z.real() * z.imag();
                re2 += z.real() * z.real();
                im2 += z.imag() * z.imag();
                ++count;
            }
        }
        u0.push_back(std::norm(ch[0].h(0, 0)));
        u1.push_back(std::norm(ch[1].h(0, 0)));
    }
    REQUIRE(count >= 100000);
    const double mean_sq = second / static_cast<double>(count);
    CHECK(mean_sq >= 0.99);
    CHECK(mean_sq <= 1.01);
    CHECK(std::abs(re_im / std::sqrt(re2 * im2)) < 0.01);

    double m0 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < u0.size(); ++i)
    {
        m0 += u0[i];
        m1 += u1[i];
    }
    m0 /= u0.size();
    m1 /= u1.size();
    double c01 = 0.0, v0 = 0.0, v1 = 0.0;
    for (std::size_t i = 0; i < u0.size(); ++i)
    {
        c01 += (u0[i] - m0) * (u1[i] - m1);
        v0 += (u0[i] - m0) * (u0[i] - m0);
        v1 += (u1[i] - m1) * (u1[i] - m1);
    }
    CHECK(std::abs(c01 / std::sqrt(v0 * v1)) < 0.02);
}

TEST_CASE("same seed and stream reproduce the draw bit for bit")
{
    RngStream a(kSeed, 42), b(kSeed, 42), c(kSeed, 43), d(kSeed + 1, 42);
    const auto ha = sample_channels(3, 4, 2, a);
    const auto hb = sample_channels(3, 4, 2, b);
    const auto hc = sample_channels(3, 4, 2, c);
    const auto hd = sample_channels(3, 4, 2, d);
    for (std::size_t k = 0; k < 3; ++k)
    {
        CHECK(ha[k].h == hb[k].h);
        CHECK_FALSE(ha[k].h == hc[k].h);
        CHECK_FALSE(ha[k].h == hd[k].h);
    }
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("invalid dimensions")
{
    RngStream rng(kSeed, 0);
    CHECK_THROWS_AS(sample_channels(1, 2, 3, rng), Error);
    CHECK_THROWS_AS(sample_channels(0, 2, 1, rng), Error);
    CHECK_THROWS_AS(sample_channels(1, 0, 0, rng), Error);
}

TEST_CASE("noise profile")
{
    const NoiseProfile p = NoiseProfile::uniform(3, 0.5);
    CHECK(p.size() == 3);
    CHECK(p[2] == 0.5);
    CHECK_FALSE(p.all_zero());
    CHECK(NoiseProfile::uniform(2, 0.0).all_zero());
    CHECK(NoiseProfile({0.0, 2.0, 1.0})[1] == 2.0);
    CHECK_THROWS_AS(NoiseProfile({1.0, -0.1}), Error);
    CHECK_THROWS_AS(NoiseProfile({NAN}), Error);
}
