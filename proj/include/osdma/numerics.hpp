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

#ifndef OSDMA_NUMERICS_HPP
#define OSDMA_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace osdma
{
    using cd = std::complex<double>;
    using ComplexVector = std::vector<cd>;

    // Dense row-major complex matrix for the small sizes used here (M, N <= 8).
    class ComplexMatrix
    {
    public:
        ComplexMatrix() = default;
        ComplexMatrix(std::size_t rows, std::size_t cols);
        ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cd> row_major);

        static ComplexMatrix identity(std::size_t n);

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }

        cd &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
        const cd &operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

        std::span<const cd> data() const noexcept { return data_; }
        std::span<const cd> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
        ComplexVector column(std::size_t c) const;

        bool all_finite() const noexcept;

        friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<cd> data_;
    };

    ComplexMatrix hermitian(const ComplexMatrix &a);

    // Throws Error(InvalidArgument) when a.cols() != b.rows().
    ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

    ComplexVector matvec(const ComplexMatrix &a, std::span<const cd> x);

    // x^H y
    cd inner(std::span<const cd> x, std::span<const cd> y);
    double norm_squared(std::span<const cd> x);

    struct LinalgTolerances
    {
        // Relative pivot floor for the Cholesky factorisation, scaled by max|R_ii|.
        double pivot_rel = 1e-12;
        double residual = 1e-10;
    };

    // Solves R x = b for Hermitian positive-definite R by Cholesky factorisation.
    // Throws Error(NotPositiveDefinite) when a pivot falls below the floor.
    ComplexVector solve_hermitian_posdef(const ComplexMatrix &r, std::span<const cd> b,
                                         const LinalgTolerances &tol = {});

    using RealFunction = std::function<double(double)>;

    struct QuadratureOptions
    {
        double rel_tol = 1e-8;
        int max_depth = 30; // bisection levels of the mapped (0,1) domain
        std::size_t max_intervals = 4000;
    };

    // Adaptive Gauss-Kronrod (7/15) over the finite interval [a, b].
    double integrate(const RealFunction &f, double a, double b, const QuadratureOptions &opt = {});

    // Integral of f over (0, inf) via x = t/(1-t) and adaptive refinement on (0,1).
    // Throws QuadratureError carrying the best estimate when the cap is hit.
    double integrate_semi_infinite(const RealFunction &f, const QuadratureOptions &opt = {});
    double integrate_semi_infinite(const RealFunction &f, double rel_tol);

    // Bisection for a monotone g with a sign change on [lo, hi]. Returns once
    // |g(x)| <= tol or the bracket is narrower than tol.
    double find_root_monotone(const RealFunction &g, double lo, double hi, double tol = 1e-12);

    // Neumaier compensated sum, order-dependent only through the input order.
    class CompensatedSum
    {
    public:
        void add(double v) noexcept;
        double value() const noexcept { return sum_ + comp_; }

    private:
        double sum_ = 0.0;
        double comp_ = 0.0;
    };
}

#endif
