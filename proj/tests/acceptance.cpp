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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "osdma.h"
#include "osdma/analytics.hpp"
#include "osdma/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace osdma;

namespace
{
    std::uint64_t g_seed = SimConfig{}.master_seed;

    struct Outcome
    {
        bool pass = true;
        std::ostringstream note;

        void require(bool ok, const std::string &what)
        {
            if (!ok)
            {
                pass = false;
                note << " [failed: " << what << "]";
            }
        }
    };

    struct Criterion
    {
        int id;
        const char *name;
        double budget_s;
        std::function<void(Outcome &)> body;
    };

    SimConfig base_config(std::size_t m, std::size_t k, double sigma2, double total_power, std::size_t trials)
    {
        SimConfig c;
        c.M = m;
        c.N = 2;
        c.K = k;
        c.noise = NoiseProfile::uniform(k, sigma2);
        c.total_power = total_power;
        c.trials = trials;
        c.master_seed = g_seed;
        c.threads = 1;
        return c;
    }

    const std::vector<Scheme> kProposed{{CombinerKind::OC, SchedulerKind::Proposed},
                                        {CombinerKind::MRC, SchedulerKind::Proposed},
                                        {CombinerKind::SC, SchedulerKind::Proposed}};

    void cdf_fidelity(Outcome &o)
    {
        const std::vector<CombinerKind> kinds{CombinerKind::Measured, CombinerKind::SC, CombinerKind::MRC,
                                              CombinerKind::OC};
        const auto samples = sample_max_sir(4, 2, 1, kinds, 100000, derive_seed(g_seed, 1), 1);
        for (std::size_t i = 0; i < kinds.size(); ++i)
        {
            const SirCdf f(kinds[i], 4, 2);
            const double d = ks_distance(Ecdf(samples[i]), [&](double x) { return f(x); });
            o.note << " KS_" << to_string(kinds[i]) << "=" << d;
            o.require(samples[i].size() == 100000 && d < 0.01, std::string(to_string(kinds[i])));
        }
    }

    void algebraic_reduction(Outcome &o)
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const double x = std::pow(10.0, -3.0 + 6.0 * i / 99.0);
            worst = std::max(worst, std::abs(cdf_oc(x, 4, 2) - (1.0 - (1.0 + 3.0 * x) / std::pow(1.0 + x, 3.0))));
        }
        o.note << " max_abs_diff=" << worst;
        o.require(worst <= 1e-12, "reduction");
    }

    void hand_values(Outcome &o)
    {
        const struct
        {
            const char *what;
            double got, want, tol;
        } cases[] = {
            {"cdf_measured(1,4)", cdf_measured(1.0, 4), 0.875, 1e-12},
            {"cdf_sc(1,4,2)", cdf_sc(1.0, 4, 2), 0.765625, 1e-12},
            {"cdf_mrc(1,4,2)", cdf_mrc(1.0, 4, 2), 0.6875, 1e-12},
            {"cdf_oc(1,4,2)", cdf_oc(1.0, 4, 2), 0.5, 1e-12},
            {"scaling_law(OC,48)", scaling_law(CombinerKind::OC, 48), 14.3399, 1e-4},
        };
        for (const auto &c : cases)
        {
            o.note << " " << c.what << "=" << c.got;
            o.require(std::abs(c.got - c.want) <= c.tol, c.what);
        }
        o.require(std::abs(scaling_law(CombinerKind::OC, 48) - 4.0 * std::log2(12.0)) <= 1e-12, "4 log2 12");
    }

    void combiner_optimality(Outcome &o)
    {
        for (double s2 : {0.0, 1.0})
        {
            const OrderingResult r =
                check_combiner_ordering(4, 2, s2, 10000, 1000, derive_seed(g_seed, s2 == 0.0 ? 40 : 41), 1);
            o.note << " sigma2=" << s2 << ": draws=" << r.draws << " max(mrc-oc)=" << r.worst_mrc_excess
                   << " max(sc-oc)=" << r.worst_sc_excess << " max(w-oc)=" << r.worst_generic_excess;
            o.require(r.draws == 10000, "all draws usable");
            o.require(r.worst_mrc_excess <= 1e-9 && r.worst_sc_excess <= 1e-9, "OC >= MRC, SC");
            o.require(r.worst_generic_excess <= 1e-9, "OC >= random combiners");
        }
    }

    void figure3(Outcome &o)
    {
        for (std::size_t k : {20u, 50u, 100u})
        {
            const TrialSet set = run_trials(base_config(4, k, 0.0, 4.0, 10000), kProposed);
            std::vector<double> mean(3);
            for (std::size_t s = 0; s < 3; ++s)
            {
                mean[s] = summarize(set, s).mean_sum_rate;
                const double ana = asymptotic_throughput(kProposed[s].combiner, k);
                const double rel = std::abs(mean[s] - ana) / ana;
                o.note << " K=" << k << " " << scheme_label(kProposed[s]) << " sim=" << mean[s] << " ana=" << ana;
                o.require(rel <= 0.10, "within 10% at K=" + std::to_string(k));
            }
            if (k == 50)
            {
                o.note << " OC/MRC=" << mean[0] / mean[1] << " OC/SC=" << mean[0] / mean[2];
                o.require(mean[0] >= 1.3 * mean[1] && mean[0] >= 1.3 * mean[2], "OC >= 1.3 x MRC, SC at K=50");
            }
        }
    }

    void figure5(Outcome &o)
    {
        const TrialSet set = run_trials(base_config(4, 50, 1.0, 4.0, 10000), kProposed);
        const double oc = summarize(set, 0).mean_sum_rate;
        const struct
        {
            std::size_t other;
            double ratio;
        } cases[] = {{2, 1.15}, {1, 1.05}};
        for (const auto &c : cases)
        {
            const PairedDifference d = paired_difference(set, 0, c.other, c.ratio);
            const std::string label = scheme_label(kProposed[c.other]);
            o.note << " OC/" << label << "=" << oc / summarize(set, c.other).mean_sum_rate << " (OC-" << c.ratio
                   << "x" << label << "=" << d.mean << ", 3SE=" << 3.0 * d.std_error << ")";
            o.require(d.mean > 3.0 * d.std_error, "OC/" + label);
        }
    }

    void figure6(Outcome &o)
    {
        for (std::size_t k : {10u, 20u, 30u, 50u, 75u, 100u})
        {
            const TrialSet m2 = run_trials(base_config(2, k, 1.0, 2.0, 10000), kProposed);
            const TrialSet m4 = run_trials(base_config(4, k, 1.0, 2.0, 10000), kProposed);
            for (std::size_t s = 0; s < 3; ++s)
            {
                const ThroughputStats a = summarize(m4, s), b = summarize(m2, s);
                const double gap = a.mean_sum_rate - b.mean_sum_rate;
                const double se = std::hypot(a.std_error, b.std_error);
                o.note << " K=" << k << " " << scheme_label(kProposed[s]) << " gap=" << gap << "/3SE=" << 3.0 * se;
                o.require(gap > 3.0 * se, "M=4 above M=2 at K=" + std::to_string(k));
            }
        }
    }

    void figure7(Outcome &o)
    {
        for (double snr : {0.0, 5.0, 10.0, 15.0, 20.0})
        {
            const TrialSet set = run_trials(base_config(4, 5, std::pow(10.0, -snr / 10.0), 4.0, 10000), kProposed);
            for (std::size_t other : {1u, 2u})
            {
                const PairedDifference d = paired_difference(set, 0, other);
                o.note << " " << snr << "dB OC-" << scheme_label(kProposed[other]) << "=" << d.mean
                       << "/3SE=" << 3.0 * d.std_error;
                o.require(d.mean > 3.0 * d.std_error, "OC above at " + std::to_string(snr) + " dB");
            }
        }
    }

    void extreme_value(Outcome &o)
    {
        const SirCdf oc(CombinerKind::OC, 4, 2);
        const double a = characteristic_extreme(oc, 10000);
        const double approx = std::sqrt(30000.0) - 1.0;
        o.note << " a_K=" << a << " approx=" << approx;
        o.require(std::abs(a - approx) <= 0.02 * approx, "characteristic extreme");

        const FrechetApprox f = frechet_approx(CombinerKind::OC, 100);
        double gap = 0.0;
        for (int i = 0; i < 4000; ++i)
        {
            const double x = f.scale / 4.0 * std::pow(40.0, i / 3999.0);
            gap = std::max(gap, std::abs(frechet_cdf(f, x) - cdf_max(oc, 100, x)));
        }
        o.note << " frechet_gap=" << gap;
        o.require(gap < 0.05, "Frechet sup-norm gap");

        for (CombinerKind c : {CombinerKind::OC, CombinerKind::MRC, CombinerKind::SC})
        {
            const SirCdf base(c, 4, 2);
            const double want = c == CombinerKind::OC ? 2.0 : 3.0;
            for (double ratio : {2.0, 5.0})
            {
                const double q = std::log(base.survival(1e3) / base.survival(ratio * 1e3)) / std::log(ratio);
                o.note << " q_" << to_string(c) << "(c=" << ratio << ")=" << q;
                o.require(std::abs(q - want) <= 0.1, "tail exponent");
            }
        }
    }

    void scaling_limit(Outcome &o)
    {
        for (CombinerKind c : {CombinerKind::OC, CombinerKind::MRC, CombinerKind::SC})
        {
            double prev = INFINITY;
            for (std::size_t k : {100u, 1000u, 10000u})
            {
                const double r = asymptotic_throughput(c, k) / scaling_law(c, k);
                o.note << " " << to_string(c) << "(K=" << k << ")=" << r;
                o.require(r < prev, "decreasing");
                prev = r;
            }
            o.require(prev >= 0.9 && prev <= 1.5, "band at K=1e4");
        }
    }

    void baseline(Outcome &o)
    {
        const std::vector<Scheme> schemes{{CombinerKind::SC, SchedulerKind::Proposed},
                                          {CombinerKind::SC, SchedulerKind::SHBaseline}};
        for (std::size_t k : {5u, 50u})
            for (double s2 : {0.0, 1.0})
            {
                const TrialSet set = run_trials(base_config(4, k, s2, 4.0, 10000), schemes);
                const PairedDifference d = paired_difference(set, 1, 0);
                o.note << " K=" << k << " sigma2=" << s2 << " SH-SC=" << d.mean << "/3SE=" << 3.0 * d.std_error;
                o.require(d.mean <= 3.0 * d.std_error, "SH <= SC");
            }
    }

    std::string c_api_csv(int which, int figure, const char *threads, bool &ok)
    {
        osdma_config *cfg = nullptr;
        ok = osdma_config_create(&cfg) == OSDMA_OK;
        const std::string seed = std::to_string(g_seed);
        ok = ok && osdma_config_set(cfg, "seed", seed.c_str()) == OSDMA_OK;
        ok = ok && osdma_config_set(cfg, "threads", threads) == OSDMA_OK;
        ok = ok && osdma_config_set(cfg, "trials", "2000") == OSDMA_OK;
        char *out = nullptr;
        osdma_status st = OSDMA_E_INTERNAL;
        if (ok)
            switch (which)
            {
            case 0:
                st = osdma_figure_csv(cfg, figure, &out);
                break;
            case 1:
                st = osdma_throughput_csv(cfg, &out);
                break;
            case 2:
                st = osdma_cdf_csv(cfg, &out);
                break;
            case 3:
                st = osdma_asymptotic_csv(cfg, &out);
                break;
            default:
                st = osdma_scaling_csv(cfg, &out);
                break;
            }
        ok = ok && st == OSDMA_OK;
        std::string text = out ? out : "";
        osdma_string_free(out);
        osdma_config_destroy(cfg);
        return text;
    }

    void determinism(Outcome &o)
    {
        const char *names[] = {"figure", "throughput", "cdf", "asymptotic", "scaling"};
        for (int which = 0; which < 5; ++which)
            for (int fig = 2; fig <= (which == 0 ? 7 : 2); ++fig)
            {
                bool ok1 = false, ok1b = false, ok8 = false;
                const std::string a = c_api_csv(which, fig, "1", ok1);
                const std::string b = c_api_csv(which, fig, "1", ok1b);
                const std::string c = c_api_csv(which, fig, "8", ok8);
                const std::string label = which == 0 ? "figure " + std::to_string(fig) : names[which];
                o.require(ok1 && ok1b && ok8 && !a.empty(), label + " produced output");
                o.require(a == b, label + " rerun identical");
                o.require(a == c, label + " threads 1 vs 8 identical");
            }
        o.note << " figures 2-7, throughput, cdf, asymptotic, scaling compared at threads 1, 1, 8";
    }
}

int main()
{
    if (const char *env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0')
        g_seed = std::strtoull(env, nullptr, 10);

    const std::vector<Criterion> criteria{
        {1, "CDF fidelity", 60.0, cdf_fidelity},
        {2, "OC closed-form reduction", 1.0, algebraic_reduction},
        {3, "hand-checkable values", 1.0, hand_values},
        {4, "combiner optimality", 120.0, combiner_optimality},
        {5, "noise-free throughput vs asymptotics", 300.0, figure3},
        {6, "OC/SC and OC/MRC ratios at unit noise", 180.0, figure5},
        {7, "M=4 above M=2 at total power 2", 180.0, figure6},
        {8, "OC above MRC and SC across SNR", 180.0, figure7},
        {9, "extreme-value consistency", 1.0, extreme_value},
        {10, "scaling-law limit", 1.0, scaling_limit},
        {11, "per-antenna baseline below SC scheduling", 180.0, baseline},
        {12, "byte-identical CSV across reruns and threads", 600.0, determinism},
    };

    std::printf("acceptance seed=%llu\n", static_cast<unsigned long long>(g_seed));
    int failed = 0;
    for (const auto &c : criteria)
    {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            c.body(o);
        }
        catch (const std::exception &e)
        {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(secs <= c.budget_s, "runtime budget");
        failed += o.pass ? 0 : 1;
        std::printf("%s %2d %s (%.2fs):%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
