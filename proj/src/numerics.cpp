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

#include "osdma/numerics.hpp"
#include "osdma/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

namespace osdma
{
    ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cd(0.0, 0.0))
    {
        if (rows == 0 || cols == 0)
            throw Error(ErrorCode::InvalidArgument, "ComplexMatrix: rows and cols must be at least 1");
    }

    ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cd> row_major)
        : rows_(rows), cols_(cols), data_(std::move(row_major))
    {
        if (rows == 0 || cols == 0)
            throw Error(ErrorCode::InvalidArgument, "ComplexMatrix: rows and cols must be at least 1");
        if (data_.size() != rows * cols)
            throw Error(ErrorCode::InvalidArgument, "ComplexMatrix: entry count does not match rows x cols");
    }

    ComplexMatrix ComplexMatrix::identity(std::size_t n)
    {
        ComplexMatrix id(n, n);
        for (std::size_t i = 0; i < n; ++i)
            id(i, i) = 1.0;
        return id;
    }

    ComplexVector ComplexMatrix::column(std::size_t c) const
    {
        ComplexVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    bool ComplexMatrix::all_finite() const noexcept
    {
        return std::all_of(data_.begin(), data_.end(), [](const cd &z)
                           { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
    }

    ComplexMatrix hermitian(const ComplexMatrix &a)
    {
        ComplexMatrix out(a.cols(), a.rows());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                out(c, r) = std::conj(a(r, c));
        return out;
    }

    ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.cols() != b.rows())
            throw Error(ErrorCode::InvalidArgument,
                        "matmul: dimension mismatch (" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
        ComplexMatrix out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k)
            {
                const cd aik = a(i, k);
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    ComplexVector matvec(const ComplexMatrix &a, std::span<const cd> x)
    {
        if (a.cols() != x.size())
            throw Error(ErrorCode::InvalidArgument, "matvec: dimension mismatch");
        ComplexVector out(a.rows(), cd(0.0, 0.0));
        for (std::size_t i = 0; i < a.rows(); ++i)
        {
            cd acc(0.0, 0.0);
            for (std::size_t j = 0; j < a.cols(); ++j)
                acc += a(i, j) * x[j];
            out[i] = acc;
        }
        return out;
    }

    cd inner(std::span<const cd> x, std::span<const cd> y)
    {
        if (x.size() != y.size())
            throw Error(ErrorCode::InvalidArgument, "inner: length mismatch");
        cd acc(0.0, 0.0);
        for (std::size_t i = 0; i < x.size(); ++i)
            acc += std::conj(x[i]) * y[i];
        return acc;
    }

    double norm_squared(std::span<const cd> x)
    {
        double acc = 0.0;
        for (const cd &z : x)
            acc += std::norm(z);
        return acc;
    }

    ComplexVector solve_hermitian_posdef(const ComplexMatrix &r, std::span<const cd> b, const LinalgTolerances &tol)
    {
        const std::size_t n = r.rows();
        if (r.cols() != n || b.size() != n)
            throw Error(ErrorCode::InvalidArgument, "solve_hermitian_posdef: R must be square and match b");

        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            scale = std::max(scale, std::abs(r(i, i).real()));
        const double floor = tol.pivot_rel * scale;

        // Lower-triangular L with R = L L^H
        ComplexMatrix l(n, n);
        for (std::size_t j = 0; j < n; ++j)
        {
            double d = r(j, j).real();
            for (std::size_t k = 0; k < j; ++k)
                d -= std::norm(l(j, k));
            if (!(d > floor))
                throw Error(ErrorCode::NotPositiveDefinite,
                            "solve_hermitian_posdef: pivot " + std::to_string(d) + " below tolerance");
            const double ljj = std::sqrt(d);
            l(j, j) = ljj;
            for (std::size_t i = j + 1; i < n; ++i)
            {
                cd s = r(i, j);
                for (std::size_t k = 0; k < j; ++k)
                    s -= l(i, k) * std::conj(l(j, k));
                l(i, j) = s / ljj;
            }
        }

        // Forward then backward substitution
        ComplexVector y(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            cd s = b[i];
            for (std::size_t k = 0; k < i; ++k)
                s -= l(i, k) * y[k];
            y[i] = s / l(i, i).real();
        }
        ComplexVector x(n);
        for (std::size_t ii = n; ii-- > 0;)
        {
            cd s = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k)
                s -= std::conj(l(k, ii)) * x[k];
            x[ii] = s / l(ii, ii).real();
        }
        return x;
    }

    // ---------- Quadrature ----------

    namespace
    {
        // Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
        constexpr std::array<double, 8> kXgk = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        constexpr std::array<double, 8> kWgk = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        constexpr std::array<double, 4> kWg = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct Segment
        {
            double a, b, value, error;
            int depth;
            bool operator<(const Segment &o) const noexcept { return error < o.error; }
        };

        Segment gk15(const RealFunction &f, double a, double b, int depth)
        {
            const double centre = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            const double fc = f(centre);
            double kronrod = fc * kWgk[7];
            double gauss = fc * kWg[3];
            for (std::size_t j = 0; j < 7; ++j)
            {
                const double dx = half * kXgk[j];
                const double fsum = f(centre - dx) + f(centre + dx);
                kronrod += kWgk[j] * fsum;
                if (j % 2 == 1)
                    gauss += kWg[j / 2] * fsum;
            }
            kronrod *= half;
            gauss *= half;
            return {a, b, kronrod, std::abs(kronrod - gauss), depth};
        }

        double adaptive(const RealFunction &f, double a, double b, const QuadratureOptions &opt)
        {
            if (!(opt.rel_tol > 0.0))
                throw Error(ErrorCode::InvalidArgument, "quadrature: rel_tol must be positive");

            std::priority_queue<Segment> heap;
            heap.push(gk15(f, a, b, 0));
            double total = heap.top().value;
            double total_err = heap.top().error;

            while (true)
            {
                if (!std::isfinite(total))
                    throw QuadratureError(total, INFINITY, "quadrature: integrand produced a non-finite value");
                // Roundoff floor so that smooth integrands with exact GK values terminate.
                const double target = std::max(opt.rel_tol * std::abs(total), 50.0 * 2.2e-16 * std::abs(total));
                if (total_err <= target)
                    return total;

                Segment worst = heap.top();
                if (worst.depth >= opt.max_depth || heap.size() >= opt.max_intervals)
                {
                    const double achieved = total != 0.0 ? total_err / std::abs(total) : total_err;
                    throw QuadratureError(total, achieved,
                                          "quadrature: refinement cap reached (achieved relative error " +
                                              std::to_string(achieved) + ")");
                }
                heap.pop();
                const double mid = 0.5 * (worst.a + worst.b);
                Segment left = gk15(f, worst.a, mid, worst.depth + 1);
                Segment right = gk15(f, mid, worst.b, worst.depth + 1);
                total += left.value + right.value - worst.value;
                total_err += left.error + right.error - worst.error;
                heap.push(left);
                heap.push(right);
            }
        }
    }

    double integrate(const RealFunction &f, double a, double b, const QuadratureOptions &opt)
    {
        if (!(b > a))
        {
            if (a == b)
                return 0.0;
            return -integrate(f, b, a, opt);
        }
        return adaptive(f, a, b, opt);
    }

    double integrate_semi_infinite(const RealFunction &f, const QuadratureOptions &opt)
    {
        auto mapped = [&f](double t)
        {
            const double one_minus = 1.0 - t;
            const double x = t / one_minus;
            return f(x) / (one_minus * one_minus);
        };
        return adaptive(mapped, 0.0, 1.0, opt);
    }

    double integrate_semi_infinite(const RealFunction &f, double rel_tol)
    {
        QuadratureOptions opt;
        opt.rel_tol = rel_tol;
        return integrate_semi_infinite(f, opt);
    }

    // ---------- Root finding ----------

    double find_root_monotone(const RealFunction &g, double lo, double hi, double tol)
    {
        if (!(tol > 0.0) || !(hi > lo))
            throw Error(ErrorCode::InvalidArgument, "find_root_monotone: need tol > 0 and lo < hi");
        double g_lo = g(lo);
        const double g_hi = g(hi);
        if (g_lo == 0.0)
            return lo;
        if (g_hi == 0.0)
            return hi;
        if (std::signbit(g_lo) == std::signbit(g_hi))
            throw Error(ErrorCode::NoSignChange, "find_root_monotone: no sign change on [" + std::to_string(lo) +
                                                     ", " + std::to_string(hi) + "]");
        while (true)
        {
            const double mid = 0.5 * (lo + hi);
            const double g_mid = g(mid);
            if (std::abs(g_mid) <= tol || (hi - lo) <= tol || mid == lo || mid == hi)
                return mid;
            if (std::signbit(g_mid) == std::signbit(g_lo))
            {
                lo = mid;
                g_lo = g_mid;
            }
            else
                hi = mid;
        }
    }

    void CompensatedSum::add(double v) noexcept
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    const char *error_code_name(ErrorCode code) noexcept
    {
        switch (code)
        {
        case ErrorCode::InvalidArgument:
            return "invalid-argument";
        case ErrorCode::Domain:
            return "domain-error";
        case ErrorCode::DegenerateDraw:
            return "degenerate-draw";
        case ErrorCode::NotPositiveDefinite:
            return "not-positive-definite";
        case ErrorCode::NoConvergence:
            return "no-convergence";
        case ErrorCode::NoSignChange:
            return "no-sign-change";
        case ErrorCode::AllTrialsDegenerate:
            return "all-trials-degenerate";
        case ErrorCode::Io:
            return "io-error";
        }
        return "unknown";
    }
}
