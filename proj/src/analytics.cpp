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

#include "osdma/analytics.hpp"
#include "osdma/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace osdma
{
    namespace
    {
        void check_x(double x, const char *who)
        {
            if (!(x >= 0.0))
                throw Error(ErrorCode::Domain, std::string(who) + ": x must be nonnegative");
        }

        void check_dims(CombinerKind combiner, std::size_t m, std::size_t n)
        {
            if (m < 2)
                throw Error(ErrorCode::Domain, "SIR CDF: M must be at least 2");
            if (n < 1)
                throw Error(ErrorCode::Domain, "SIR CDF: N must be at least 1");
            if (combiner == CombinerKind::OC && m <= n)
                throw Error(ErrorCode::Domain, "OC SIR CDF requires M > N");
            if (m < n)
                throw Error(ErrorCode::Domain, "SIR CDF requires M >= N");
        }

        // x^a / (1+x)^b, in the log domain for large x.
        double ratio_term(double x, double a, double b)
        {
            if (x > 1e3)
                return std::exp(a * std::log(x) - b * std::log1p(x));
            return std::pow(x, a) / std::pow(1.0 + x, b);
        }

        double inv_power(double x, double b)
        {
            return ratio_term(x, 0.0, b);
        }

        double survival_measured(double x, std::size_t m)
        {
            return inv_power(x, static_cast<double>(m - 1));
        }

        double survival_sc(double x, std::size_t m, std::size_t n)
        {
            const double u = survival_measured(x, m);
            if (u >= 1.0)
                return 1.0;
            return -std::expm1(static_cast<double>(n) * std::log1p(-u));
        }

        double survival_mrc(double x, std::size_t m, std::size_t n)
        {
            double s = survival_measured(x, m);
            for (std::size_t p = 1; p < n; ++p)
                s += static_cast<double>(binomial(m + n - p - 2, m - 2)) *
                     ratio_term(x, static_cast<double>(n - p), static_cast<double>(m + n - p - 1));
            return s;
        }

        double survival_oc(double x, std::size_t m, std::size_t n)
        {
            double s = inv_power(x, static_cast<double>(m - n));
            for (std::size_t p = 1; p < n; ++p)
                s += static_cast<double>(binomial(m - p - 1, m - n - 1)) *
                     ratio_term(x, static_cast<double>(n - p), static_cast<double>(m - p));
            return s;
        }

        double clamp_unit(double v)
        {
            return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        }

        // 1 - (1 - s)^k
        double power_survival(double s, std::size_t k)
        {
            if (s >= 1.0)
                return 1.0;
            if (s <= 0.0)
                return 0.0;
            return -std::expm1(static_cast<double>(k) * std::log1p(-s));
        }

        void check_m4n2_combiner(CombinerKind combiner, const char *who)
        {
            if (combiner == CombinerKind::Measured)
                throw Error(ErrorCode::InvalidArgument, std::string(who) + ": combiner must be SC, MRC or OC");
        }
    }

    std::uint64_t binomial(std::size_t n, std::size_t k)
    {
        if (k > n)
            return 0;
        if (k > n - k)
            k = n - k;
        std::uint64_t result = 1;
        for (std::size_t i = 1; i <= k; ++i)
        {
            // result * (n - k + i) / i stays integral at every step
            const std::uint64_t factor = n - k + i;
            if (result > std::numeric_limits<std::uint64_t>::max() / factor)
                throw Error(ErrorCode::Domain, "binomial: overflow");
            result = result * factor / i;
        }
        return result;
    }

    SirCdf::SirCdf(CombinerKind combiner, std::size_t m, std::size_t n) : combiner_(combiner), m_(m), n_(n)
    {
        check_dims(combiner, m, n);
    }

    double SirCdf::survival(double x) const
    {
        check_x(x, "SirCdf");
        switch (combiner_)
        {
        case CombinerKind::Measured:
            return survival_measured(x, m_);
        case CombinerKind::SC:
            return survival_sc(x, m_, n_);
        case CombinerKind::MRC:
            return survival_mrc(x, m_, n_);
        case CombinerKind::OC:
            return survival_oc(x, m_, n_);
        }
        return 1.0;
    }

    double SirCdf::cdf(double x) const
    {
        return clamp_unit(1.0 - survival(x));
    }

    double cdf_measured(double x, std::size_t m)
    {
        check_x(x, "cdf_measured");
        return SirCdf(CombinerKind::Measured, m, 1).cdf(x);
    }

    double cdf_sc(double x, std::size_t m, std::size_t n)
    {
        check_x(x, "cdf_sc");
        return SirCdf(CombinerKind::SC, m, n).cdf(x);
    }

    double cdf_mrc(double x, std::size_t m, std::size_t n)
    {
        check_x(x, "cdf_mrc");
        return SirCdf(CombinerKind::MRC, m, n).cdf(x);
    }

    double cdf_oc(double x, std::size_t m, std::size_t n)
    {
        check_x(x, "cdf_oc");
        return SirCdf(CombinerKind::OC, m, n).cdf(x);
    }

    double sh_baseline_cdf(double x, std::size_t m, std::size_t n, std::size_t requests)
    {
        check_x(x, "sh_baseline_cdf");
        if (requests < 1)
            throw Error(ErrorCode::Domain, "sh_baseline_cdf: K_i must be at least 1");
        check_dims(CombinerKind::SC, m, n);
        return clamp_unit(1.0 - power_survival(survival_measured(x, m), n * requests));
    }

    double cdf_max(const SirCdf &base, std::size_t k, double x)
    {
        if (k < 1)
            throw Error(ErrorCode::Domain, "cdf_max: K must be at least 1");
        return std::pow(base.cdf(x), static_cast<double>(k));
    }

    double survival_max(const SirCdf &base, std::size_t k, double x)
    {
        if (k < 1)
            throw Error(ErrorCode::Domain, "survival_max: K must be at least 1");
        return power_survival(base.survival(x), k);
    }

    FrechetApprox frechet_approx(CombinerKind combiner, std::size_t k)
    {
        check_m4n2_combiner(combiner, "frechet_approx");
        if (k < 1)
            throw Error(ErrorCode::Domain, "frechet_approx: K must be at least 1");
        const double kk = static_cast<double>(k);
        switch (combiner)
        {
        case CombinerKind::OC:
            return {combiner, k, std::sqrt(3.0 * kk) - 1.0, 2.0};
        case CombinerKind::MRC:
            return {combiner, k, std::cbrt(4.0 * kk) - 1.0, 3.0};
        default:
            return {combiner, k, std::cbrt(2.0 * kk) - 1.0, 3.0};
        }
    }

    double frechet_cdf(const FrechetApprox &approx, double x)
    {
        if (!(x > 0.0))
            return 0.0;
        return std::exp(-std::pow(approx.scale / x, approx.exponent));
    }

    double characteristic_extreme(const SirCdf &base, std::size_t k)
    {
        if (k < 2)
            throw Error(ErrorCode::Domain, "characteristic_extreme: K must be at least 2");
        const double log_target = -std::log(static_cast<double>(k));
        // log(1 - F) is decreasing; the root is where it crosses -log K.
        auto g = [&](double x)
        { return std::log(base.survival(x)) - log_target; };
        double hi = 1.0;
        while (g(hi) > 0.0)
        {
            hi *= 2.0;
            if (hi > 1e300)
                throw Error(ErrorCode::NoSignChange, "characteristic_extreme: no bracket found");
        }
        return find_root_monotone(g, 0.0, hi, 1e-12);
    }

    double throughput_integral(const RealFunction &cdf, std::size_t k, std::size_t beams, double x_max, double rel_tol)
    {
        if (k < 1 || beams < 1)
            throw Error(ErrorCode::Domain, "throughput_integral: K and M must be at least 1");
        auto integrand = [&](double x)
        { return power_survival(1.0 - cdf(x), k) / (1.0 + x); };
        QuadratureOptions opt;
        opt.rel_tol = rel_tol;
        const double integral = std::isfinite(x_max) ? integrate(integrand, 0.0, x_max, opt)
                                                     : integrate_semi_infinite(integrand, opt);
        return static_cast<double>(beams) * integral / std::numbers::ln2;
    }

    double exact_throughput(const SirCdf &base, std::size_t k)
    {
        if (k < 1)
            throw Error(ErrorCode::Domain, "exact_throughput: K must be at least 1");
        auto integrand = [&](double x)
        { return survival_max(base, k, x) / (1.0 + x); };
        QuadratureOptions opt;
        opt.rel_tol = 1e-6;
        return static_cast<double>(base.m()) * integrate_semi_infinite(integrand, opt) / std::numbers::ln2;
    }

    double asymptotic_throughput(CombinerKind combiner, std::size_t k)
    {
        if (k < 2)
            throw Error(ErrorCode::Domain, "asymptotic_throughput: K must be at least 2");
        const FrechetApprox approx = frechet_approx(combiner, k);
        auto integrand = [&](double x)
        {
            if (!(x > 0.0))
                return 1.0;
            return -std::expm1(-std::pow(approx.scale / x, approx.exponent)) / (1.0 + x);
        };
        QuadratureOptions opt;
        opt.rel_tol = 1e-6;
        return 4.0 * integrate_semi_infinite(integrand, opt) / std::numbers::ln2;
    }

    double scaling_law(CombinerKind combiner, std::size_t k)
    {
        check_m4n2_combiner(combiner, "scaling_law");
        const double kk = static_cast<double>(k);
        double argument = 0.0;
        switch (combiner)
        {
        case CombinerKind::OC:
            argument = std::sqrt(3.0 * kk);
            break;
        case CombinerKind::MRC:
            argument = std::cbrt(4.0 * kk);
            break;
        default:
            argument = std::cbrt(2.0 * kk);
            break;
        }
        if (!(argument > 1.0))
            throw Error(ErrorCode::Domain, "scaling_law: log argument must exceed 1");
        return 4.0 * std::log2(argument);
    }
}
