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
#include "osdma/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

namespace osdma
{
    bool ValidationReport::passed() const noexcept
    {
        return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c)
                                              { return c.passed; });
    }

    std::string ValidationReport::to_json() const
    {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["seed"] = seed;
        j["passed"] = passed();
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto &c : checks)
        {
            nlohmann::ordered_json item;
            item["name"] = c.name;
            item["statistic"] = std::isfinite(c.statistic) ? nlohmann::ordered_json(c.statistic) : nullptr;
            item["threshold"] = c.threshold;
            item["comparison"] = c.comparison;
            item["passed"] = c.passed;
            item["detail"] = c.detail;
            j["checks"].push_back(std::move(item));
        }
        j["warnings"] = warnings;
        return j.dump(2) + "\n";
    }

    namespace
    {
        std::string fmt(double v)
        {
            std::ostringstream os;
            os << v;
            return os.str();
        }

        ValidationCheck below(std::string name, double statistic, double threshold, std::string detail)
        {
            return {std::move(name), statistic, threshold, "<", statistic < threshold, std::move(detail)};
        }

        ValidationCheck at_most(std::string name, double statistic, double threshold, std::string detail)
        {
            return {std::move(name), statistic, threshold, "<=", statistic <= threshold, std::move(detail)};
        }

        ValidationCheck above(std::string name, double statistic, double threshold, std::string detail)
        {
            return {std::move(name), statistic, threshold, ">", statistic > threshold, std::move(detail)};
        }

        SimConfig suite_config(const ConfigOverrides &o, std::size_t k, double sigma2, std::size_t trials)
        {
            SimConfig base = default_config();
            base.K = k;
            base.noise = NoiseProfile::uniform(k, sigma2);
            base.trials = trials;
            base.combiner = CombinerKind::SC;
            ConfigOverrides local = o;
            local.combiner.reset();
            local.scheduler.reset();
            return resolve(local, base);
        }

        void ignore(const ConfigOverrides &o, ValidationReport &r, bool combiner, bool scheduler)
        {
            if (combiner && o.combiner)
                r.warnings.push_back("combiner override ignored: the suite compares all combiners");
            if (scheduler && o.scheduler)
                r.warnings.push_back("scheduler override ignored by this suite");
        }

        void cdf_suite(const ConfigOverrides &o, ValidationReport &r)
        {
            ignore(o, r, true, true);
            if (o.sigma2)
                r.warnings.push_back("sigma2 override ignored: closed-form CDFs are noise-free");
            ConfigOverrides local = o;
            local.sigma2.reset();
            const SimConfig cfg = suite_config(local, 1, 0.0, 100000);
            r.seed = cfg.master_seed;
            const std::vector<CombinerKind> combiners{CombinerKind::Measured, CombinerKind::SC, CombinerKind::MRC,
                                                      CombinerKind::OC};
            const auto samples = sample_max_sir(cfg.M, cfg.N, cfg.noise, cfg.per_beam_power(), combiners,
                                                cfg.trials, derive_seed(cfg.master_seed, 1), cfg.threads);
            for (std::size_t c = 0; c < combiners.size(); ++c)
            {
                const SirCdf base(combiners[c], cfg.M, cfg.N);
                const Ecdf e(samples[c]);
                const std::size_t k = cfg.K;
                const double d = ks_distance(e, [&](double x)
                                             { return cdf_max(base, k, x); });
                r.checks.push_back(below("ks_" + std::string(to_string(combiners[c])), d, 0.01,
                                         std::to_string(e.size()) + " samples, K=" + std::to_string(k)));
            }
        }

        void ordering_suite(const ConfigOverrides &o, ValidationReport &r)
        {
            ignore(o, r, true, true);
            if (o.K)
                r.warnings.push_back("K override ignored: ordering is checked per user");
            ConfigOverrides local = o;
            local.K.reset();
            local.sigma2.reset();
            const SimConfig cfg = suite_config(local, 1, 1.0, 10000);
            r.seed = cfg.master_seed;
            const std::vector<double> sigmas = o.sigma2 ? *o.sigma2 : std::vector<double>{0.0, 1.0};
            constexpr double kTol = 1e-9;
            for (std::size_t i = 0; i < sigmas.size(); ++i)
            {
                const double s2 = sigmas[i];
                if (s2 == 0.0 && cfg.M <= cfg.N)
                {
                    r.warnings.push_back("sigma2=0 skipped: OC needs M > N without noise");
                    continue;
                }
                const OrderingResult res = check_combiner_ordering(cfg.M, cfg.N, s2, cfg.trials, 1000,
                                                                   derive_seed(cfg.master_seed, 10 + i), cfg.threads);
                const std::string tag = "sigma2=" + fmt(s2);
                const std::string detail = std::to_string(res.draws) + " draws, " + tag;
                r.checks.push_back(at_most("mrc_minus_oc_" + tag, res.worst_mrc_excess, kTol, detail));
                r.checks.push_back(at_most("sc_minus_oc_" + tag, res.worst_sc_excess, kTol, detail));
                r.checks.push_back(at_most("generic_minus_oc_" + tag, res.worst_generic_excess, kTol,
                                           detail + ", 1000 weight vectors per draw"));
            }
        }

        void throughput_suite(const ConfigOverrides &o, ValidationReport &r)
        {
            ignore(o, r, true, true);
            const SimConfig cfg = suite_config(o, 50, 1.0, 10000);
            r.seed = cfg.master_seed;
            const std::vector<Scheme> schemes{{CombinerKind::OC, SchedulerKind::Proposed},
                                              {CombinerKind::SC, SchedulerKind::Proposed},
                                              {CombinerKind::MRC, SchedulerKind::Proposed}};
            const TrialSet set = run_trials(cfg, schemes);
            const auto oc = summarize(set, 0), sc = summarize(set, 1), mrc = summarize(set, 2);
            // OC >= r * X holds at 3 SE when mean(OC - r X) exceeds 3 SE of that paired difference.
            const struct
            {
                const char *name;
                std::size_t other;
                double ratio;
                double other_mean;
            } cases[] = {{"oc_over_sc", 1, 1.15, sc.mean_sum_rate}, {"oc_over_mrc", 2, 1.05, mrc.mean_sum_rate}};
            for (const auto &c : cases)
            {
                const PairedDifference d = paired_difference(set, 0, c.other, c.ratio);
                r.checks.push_back(above(std::string(c.name) + "_paired_margin", d.mean, 3.0 * d.std_error,
                                         "mean of OC - " + fmt(c.ratio) + " x other against 3 SE; observed ratio " +
                                             fmt(oc.mean_sum_rate / c.other_mean) + " over " +
                                             std::to_string(d.trials) + " paired trials"));
            }
        }

        void baseline_suite(const ConfigOverrides &o, ValidationReport &r)
        {
            ignore(o, r, true, true);
            const std::vector<std::size_t> ks = o.K ? std::vector<std::size_t>{*o.K} : std::vector<std::size_t>{5, 50};
            const std::vector<double> sigmas = o.sigma2 ? *o.sigma2 : std::vector<double>{0.0, 1.0};
            const std::vector<Scheme> schemes{{CombinerKind::SC, SchedulerKind::Proposed},
                                              {CombinerKind::SC, SchedulerKind::SHBaseline}};
            for (std::size_t k : ks)
                for (double s2 : sigmas)
                {
                    ConfigOverrides local = o;
                    local.K = k;
                    local.sigma2 = std::vector<double>{s2};
                    const SimConfig cfg = suite_config(local, k, s2, 10000);
                    r.seed = cfg.master_seed;
                    const TrialSet set = run_trials(cfg, schemes);
                    // SH <= SC at 3 SE: the paired mean of SH - SC may not exceed 3 SE.
                    const PairedDifference d = paired_difference(set, 1, 0);
                    r.checks.push_back(at_most("sh_minus_sc_K" + std::to_string(k) + "_sigma2=" + fmt(s2), d.mean,
                                               3.0 * d.std_error,
                                               "mean of SH - SC in bits/s/Hz against 3 SE over " +
                                                   std::to_string(d.trials) + " paired trials"));
                }
        }
    }

    ValidationReport run_validation(std::string_view suite, const ConfigOverrides &overrides)
    {
        ValidationReport r;
        r.suite = std::string(suite);
        if (suite == "cdf")
            cdf_suite(overrides, r);
        else if (suite == "ordering")
            ordering_suite(overrides, r);
        else if (suite == "throughput")
            throughput_suite(overrides, r);
        else if (suite == "baseline")
            baseline_suite(overrides, r);
        else
            throw Error(ErrorCode::InvalidArgument,
                        "unknown validation suite '" + std::string(suite) + "' (cdf, ordering, throughput, baseline)");
        return r;
    }
}
