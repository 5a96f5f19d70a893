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

#include "osdma/errors.hpp"
#include "osdma/numerics.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace osdma;
using osdma::test::kSeed;

namespace
{
    // Entry-by-entry sum of products.
    ComplexMatrix naive_product(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        ComplexMatrix c(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
            {
                cd acc = 0.0;
                for (std::size_t k = 0; k < a.cols(); ++k)
                    acc += a(i, k) * b(k, j);
                c(i, j) = acc;
            }
        return c;
    }

    double trapezoid(const std::function<double(double)> &f, double a, double b, std::size_t n)
    {
        const double h = (b - a) / static_cast<double>(n);
        double s = 0.5 * (f(a) + f(b));
        for (std::size_t i = 1; i < n; ++i)
            s += f(a + h * static_cast<double>(i));
        return s * h;
    }
}

TEST_CASE("hermitian")
{
    CHECK(hermitian(ComplexMatrix::identity(2)) == ComplexMatrix::identity(2));

    const ComplexMatrix i1(1, 1, {cd(0, 1)});
    CHECK(hermitian(i1)(0, 0) == cd(0, -1));

    RngStream rng(kSeed, 1);
    const ComplexMatrix a = test::random_matrix(3, 2, rng);
    const ComplexMatrix ah = hermitian(a);
    CHECK(ah.rows() == 2);
    CHECK(ah.cols() == 3);
    CHECK(ah(1, 2) == std::conj(a(2, 1)));
    CHECK(hermitian(ah) == a);
}

TEST_CASE("matmul")
{
    RngStream rng(kSeed, 2);
    const ComplexMatrix a = test::random_matrix(3, 3, rng);
    CHECK(test::max_abs_diff(matmul(a, ComplexMatrix::identity(3)), a) == 0.0);

    const ComplexMatrix row(1, 2, {1.0, cd(0, 1)});
    const ComplexMatrix col(2, 1, {1.0, cd(0, 1)});
    CHECK(std::abs(matmul(row, col)(0, 0)) < 1e-15);

    const ComplexMatrix x = test::random_matrix(2, 3, rng);
    const ComplexMatrix y = test::random_matrix(3, 2, rng);
    CHECK(test::max_abs_diff(matmul(x, y), naive_product(x, y)) < 1e-14);

    CHECK_THROWS_AS(matmul(x, x), Error);
}

TEST_CASE("matmul properties")
{
    RngStream rng(kSeed, 3);
    for (int trial = 0; trial < 200; ++trial)
    {
        const ComplexMatrix a = test::random_matrix(3, 4, rng);
        const ComplexMatrix b = test::random_matrix(4, 2, rng);
        const ComplexMatrix c = test::random_matrix(2, 5, rng);
        const ComplexMatrix left = matmul(matmul(a, b), c);
        const ComplexMatrix right = matmul(a, matmul(b, c));
        double scale = 0.0;
        for (const cd &z : left.data())
            scale = std::max(scale, std::abs(z));
        CHECK(test::max_abs_diff(left, right) <= 1e-10 * scale);

        CHECK(test::max_abs_diff(hermitian(matmul(a, b)), matmul(hermitian(b), hermitian(a))) <= 1e-12);
    }
}

TEST_CASE("solve_hermitian_posdef")
{
    const ComplexVector b{1.0, 2.0};
    const ComplexVector x = solve_hermitian_posdef(ComplexMatrix::identity(2), b);
    CHECK(std::abs(x[0] - 1.0) < 1e-15);
    CHECK(std::abs(x[1] - 2.0) < 1e-15);

    const ComplexMatrix d(2, 2, {2.0, 0.0, 0.0, 4.0});
    const ComplexVector y = solve_hermitian_posdef(d, ComplexVector{2.0, 4.0});
    CHECK(std::abs(y[0] - 1.0) < 1e-15);
    CHECK(std::abs(y[1] - 1.0) < 1e-15);

    const ComplexMatrix singular(2, 2, {1.0, 1.0, 1.0, 1.0});
    CHECK_THROWS_AS(solve_hermitian_posdef(singular, b), Error);
    try
    {
        solve_hermitian_posdef(singular, b);
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::NotPositiveDefinite);
    }
}

TEST_CASE("solve_hermitian_posdef residual on interference-plus-noise matrices")
{
    // R = H B H^H + sigma^2 I with B the projector onto the other beams, as in OC.
    RngStream rng(kSeed, 4);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const ComplexMatrix g = test::random_matrix(n, n + 1, rng);
        ComplexMatrix r = matmul(g, hermitian(g));
        for (std::size_t i = 0; i < n; ++i)
            r(i, i) += 1.0;
        const ComplexVector b = test::random_vector(n, rng);
        const ComplexVector x = solve_hermitian_posdef(r, b);
        const ComplexVector rx = matvec(r, x);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            res += std::norm(rx[i] - b[i]);
        CHECK(std::sqrt(res) <= 1e-10 * std::sqrt(norm_squared(b)));
    }
}

TEST_CASE("integrate_semi_infinite known integrals")
{
    const double rel = 1e-8;
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }, rel) == doctest::Approx(1.0).epsilon(rel));
    CHECK(integrate_semi_infinite([](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); }, rel) ==
          doctest::Approx(1.0).epsilon(rel));
}

TEST_CASE("integrate_semi_infinite against a dense trapezoid")
{
    auto f = [](double x) { return x > 0.0 ? -std::expm1(-1.0 / (x * x)) / (1.0 + x) : 1.0; };
    const double got = integrate_semi_infinite(f, 1e-8);
    // Trapezoid on [0, 200] with the tail integrated from its leading term 1/(x^2 (1+x)).
    const double body = trapezoid(f, 0.0, 200.0, 2000000);
    const double xm = 200.0;
    const double tail = 1.0 / xm - std::log1p(1.0 / xm); // integral of 1/(x^2(1+x)) from xm
    CHECK(got == doctest::Approx(body + tail).epsilon(1e-6));
}

TEST_CASE("integrate bounded interval and failure reporting")
{
    CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0) == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-10));

    QuadratureOptions tight;
    tight.rel_tol = 1e-14;
    tight.max_intervals = 3;
    bool thrown = false;
    try
    {
        integrate([](double x) { return 1.0 / std::sqrt(x + 1e-12); }, 0.0, 1.0, tight);
    }
    catch (const QuadratureError &e)
    {
        thrown = true;
        CHECK(e.code() == ErrorCode::NoConvergence);
        CHECK(e.best_estimate() > 0.0);
        CHECK(e.achieved_rel_tol() > tight.rel_tol);
    }
    CHECK(thrown);
}

TEST_CASE("find_root_monotone")
{
    CHECK(find_root_monotone([](double x) { return x - 1.0; }, 0.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    const double r2 = find_root_monotone([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
    CHECK(std::abs(r2 - std::sqrt(2.0)) <= 1e-12);

    // F_oc(x) = 1 - 1/K at M=4, N=2, checked by forward evaluation.
    const double k = 100.0;
    auto f_oc = [](double x) { return 1.0 - (1.0 + 3.0 * x) / std::pow(1.0 + x, 3.0); };
    const double root = find_root_monotone([&](double x) { return f_oc(x) - (1.0 - 1.0 / k); }, 0.0, 1e3);
    CHECK(std::abs(f_oc(root) - (1.0 - 1.0 / k)) < 1e-12);

    CHECK_THROWS_AS(find_root_monotone([](double x) { return x + 1.0; }, 0.0, 2.0), Error);
    CHECK_THROWS_AS(find_root_monotone([](double x) { return x; }, -1.0, 1.0, 0.0), Error);
}

TEST_CASE("compensated summation")
{
    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i)
        s.add(1e-16);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-9));
}
