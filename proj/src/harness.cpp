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
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "parallel.hpp"

namespace osdma
{
    // ---------- Empirical CDF and KS ----------

    Ecdf::Ecdf(std::vector<double> samples) : sorted_(std::move(samples))
    {
        std::sort(sorted_.begin(), sorted_.end());
    }

    double Ecdf::operator()(double x) const
    {
        if (sorted_.empty())
            return 0.0;
        const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
    }

    double ks_distance(const Ecdf &e, const RealFunction &f)
    {
        if (e.size() < 100)
            throw Error(ErrorCode::InvalidArgument, "ks_distance: need at least 100 samples");
        const auto &x = e.sorted();
        const double n = static_cast<double>(x.size());
        double worst = 0.0;
        std::size_t i = 0;
        while (i < x.size())
        {
            std::size_t j = i;
            while (j + 1 < x.size() && x[j + 1] == x[i])
                ++j;
            const double fx = f(x[i]);
            const double below = static_cast<double>(i) / n; // left limit of the ECDF
            const double above = static_cast<double>(j + 1) / n;
            worst = std::max({worst, std::abs(fx - below), std::abs(above - fx)});
            i = j + 1;
        }
        return std::min(worst, 1.0);
    }

    // ---------- Monte Carlo building blocks ----------

    std::vector<std::vector<double>> sample_max_sir(std::size_t m, std::size_t n, const NoiseProfile &noise,
                                                    double per_beam_power, std::span<const CombinerKind> combiners,
                                                    std::size_t samples, std::uint64_t seed, std::size_t threads)
    {
        const std::size_t users = noise.size();
        if (users < 1)
            throw Error(ErrorCode::InvalidArgument, "sample_max_sir: need at least one user");
        std::vector<std::vector<double>> raw(combiners.size(), std::vector<double>(samples, NAN));

        detail::parallel_for(samples, threads, [&](std::size_t i)
                             {
            RngStream rng(seed, i);
            const auto channels = sample_channels(users, m, n, rng);
            const BeamMatrix beams = random_orthonormal_beams(m, rng, per_beam_power);
            std::vector<EffectiveChannel> eff;
            eff.reserve(users);
            for (const auto &h : channels)
                eff.emplace_back(h, beams);

            for (std::size_t c = 0; c < combiners.size(); ++c)
            {
                try
                {
                    double best = -1.0;
                    for (std::size_t k = 0; k < users; ++k)
                    {
                        const double v = combiners[c] == CombinerKind::Measured
                                             ? measured_sinr(eff[k], 0, 0, noise[k])
                                             : effective_sinr(combiners[c], eff[k], 0, noise[k]);
                        best = std::max(best, v);
                    }
                    raw[c][i] = best;
                }
                catch (const Error &e)
                {
                    if (e.code() != ErrorCode::DegenerateDraw)
                        throw;
                }
            } });

        for (auto &v : raw)
            v.erase(std::remove_if(v.begin(), v.end(), [](double s)
                                   { return std::isnan(s); }),
                    v.end());
        return raw;
    }

    std::vector<std::vector<double>> sample_max_sir(std::size_t m, std::size_t n, std::size_t users,
                                                    std::span<const CombinerKind> combiners, std::size_t samples,
                                                    std::uint64_t seed, std::size_t threads)
    {
        return sample_max_sir(m, n, NoiseProfile::uniform(users, 0.0), 1.0, combiners, samples, seed, threads);
    }

    OrderingResult check_combiner_ordering(std::size_t m, std::size_t n, double noise_var, std::size_t draws,
                                           std::size_t weights_per_draw, std::uint64_t seed, std::size_t threads)
    {
        struct PerDraw
        {
            bool valid = false;
            double mrc = -INFINITY, sc = -INFINITY, generic = -INFINITY;
        };
        std::vector<PerDraw> per(draws);

        detail::parallel_for(draws, threads, [&](std::size_t d)
                             {
            RngStream rng(seed, d);
            const auto channels = sample_channels(1, m, n, rng);
            const BeamMatrix beams = random_orthonormal_beams(m, rng, 1.0);
            const EffectiveChannel g(channels.front(), beams);
            PerDraw out;
            try
            {
                ComplexVector w(n);
                for (std::size_t b = 0; b < m; ++b)
                {
                    const double oc = oc_sinr(g, b, noise_var);
                    out.mrc = std::max(out.mrc, mrc_sinr(g, b, noise_var) - oc);
                    out.sc = std::max(out.sc, sc_sinr(g, b, noise_var) - oc);
                    for (std::size_t r = 0; r < weights_per_draw; ++r)
                    {
                        for (auto &z : w)
                            z = rng.complex_normal();
                        out.generic = std::max(out.generic, generic_combiner_sinr(w, g, b, noise_var) - oc);
                    }
                }
                out.valid = true;
            }
            catch (const Error &e)
            {
                if (e.code() != ErrorCode::DegenerateDraw)
                    throw;
            }
            per[d] = out; });

        OrderingResult result;
        for (const auto &p : per)
        {
            if (!p.valid)
                continue;
            ++result.draws;
            result.worst_mrc_excess = std::max(result.worst_mrc_excess, p.mrc);
            result.worst_sc_excess = std::max(result.worst_sc_excess, p.sc);
            result.worst_generic_excess = std::max(result.worst_generic_excess, p.generic);
        }
        return result;
    }

    // ---------- CSV output ----------

    namespace
    {
        std::string num(double v)
        {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof(buf), v);
            return std::string(buf, res.ptr);
        }

        template <class T>
        std::string join(const std::vector<T> &items, const char *sep = ",")
        {
            std::ostringstream os;
            for (std::size_t i = 0; i < items.size(); ++i)
            {
                if (i)
                    os << sep;
                if constexpr (std::is_floating_point_v<T>)
                    os << num(items[i]);
                else
                    os << items[i];
            }
            return os.str();
        }

        std::vector<std::string> labels(const std::vector<Scheme> &schemes)
        {
            std::vector<std::string> out;
            for (const auto &s : schemes)
                out.push_back(scheme_label(s));
            return out;
        }

        struct Metadata
        {
            std::vector<std::pair<std::string, std::string>> entries;

            void add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }

            void write(std::ostream &out, const std::string &title, const std::vector<std::string> &warnings) const
            {
                out << "# osdma " << title << "\n";
                for (const auto &[k, v] : entries)
                    out << "# " << k << "=" << v << "\n";
                for (const auto &w : warnings)
                    out << "# warning=" << w << "\n";
            }
        };

        std::string sigma_text(const ConfigOverrides &o, double fallback)
        {
            return o.sigma2 ? join(*o.sigma2) : num(fallback);
        }

        void warn_ignored(const ConfigOverrides &o, RunOutput &run, std::initializer_list<const char *> fields)
        {
            for (const char *f : fields)
            {
                const std::string name(f);
                const bool set = (name == "M" && o.M) || (name == "N" && o.N) || (name == "K" && o.K) ||
                                 (name == "sigma2" && o.sigma2) || (name == "total_power" && o.total_power) ||
                                 (name == "combiner" && o.combiner) || (name == "scheduler" && o.scheduler) ||
                                 (name == "trials" && o.trials);
                if (set)
                    run.warnings.push_back(name + " override ignored by this command");
            }
        }

        std::vector<Scheme> proposed_schemes(const ConfigOverrides &o)
        {
            if (o.scheduler == SchedulerKind::SHBaseline)
                return {Scheme{CombinerKind::SC, SchedulerKind::SHBaseline}};
            if (o.combiner)
                return {Scheme{*o.combiner, SchedulerKind::Proposed}};
            return {Scheme{CombinerKind::SC, SchedulerKind::Proposed}, Scheme{CombinerKind::MRC, SchedulerKind::Proposed},
                    Scheme{CombinerKind::OC, SchedulerKind::Proposed}};
        }

        // Resolves overrides at a particular grid point (M, K) of a figure.
        SimConfig resolve_at(const ConfigOverrides &o, SimConfig base, std::size_t m, std::size_t k,
                             const Scheme &probe)
        {
            ConfigOverrides point = o;
            point.M = m;
            point.K = k;
            point.combiner = probe.combiner;
            point.scheduler = probe.scheduler;
            return resolve(point, std::move(base));
        }

        std::vector<double> cdf_grid()
        {
            std::vector<double> xs{0.0};
            for (int i = 0; i <= 100; ++i)
                xs.push_back(std::pow(10.0, -2.0 + 5.0 * i / 100.0));
            return xs;
        }

        // Shared by figure 2 and the `cdf` command.
        RunOutput write_cdf_table(const std::string &title, const ConfigOverrides &o, std::vector<std::size_t> ks,
                                  std::ostream &out)
        {
            RunOutput run;
            SimConfig base = default_config();
            base.M = 4;
            base.N = 2;
            base.total_power = 4.0;
            base.noise = NoiseProfile::uniform(base.K, 0.0);
            base.trials = 100000;
            if (o.K)
                ks = {*o.K};
            if (o.scheduler)
                run.warnings.push_back("scheduler override ignored by CDF output");
            const std::size_t m = o.M.value_or(base.M);

            std::vector<CombinerKind> combiners;
            if (o.combiner)
                combiners = {*o.combiner};
            else
                combiners = {CombinerKind::Measured, CombinerKind::SC, CombinerKind::MRC, CombinerKind::OC};
            const std::size_t n = o.N.value_or(base.N);
            if (!o.combiner && m <= n)
            {
                combiners.pop_back();
                run.warnings.push_back("OC omitted: its SIR CDF requires M > N");
            }
            if (o.sigma2 && std::any_of(o.sigma2->begin(), o.sigma2->end(), [](double v)
                                        { return v != 0.0; }))
                run.warnings.push_back("analytical CDFs assume no noise; empirical column uses the given sigma2");

            const Scheme probe{combiners.front() == CombinerKind::Measured ? CombinerKind::SC : combiners.front(),
                               SchedulerKind::Proposed};
            const SimConfig first = resolve_at(o, base, m, ks.front(), probe);

            Metadata meta;
            meta.add("M", std::to_string(first.M));
            meta.add("N", std::to_string(first.N));
            meta.add("K", join(ks));
            meta.add("sigma2", sigma_text(o, 0.0));
            meta.add("total_power", num(first.total_power));
            std::vector<std::string> names;
            for (auto c : combiners)
                names.emplace_back(to_string(c));
            meta.add("combiners", join(names));
            meta.add("samples", std::to_string(first.trials));
            meta.add("seed", std::to_string(first.master_seed));

            std::ostringstream body;
            body << "x,combiner,K,F_analytical,F_empirical\n";
            const auto xs = cdf_grid();
            for (std::size_t k : ks)
            {
                const SimConfig cfg = resolve_at(o, base, m, k, probe);
                const auto samples = sample_max_sir(cfg.M, cfg.N, cfg.noise, cfg.per_beam_power(), combiners,
                                                    cfg.trials, derive_seed(cfg.master_seed, 2000 + k), cfg.threads);
                for (std::size_t c = 0; c < combiners.size(); ++c)
                {
                    const SirCdf cdf(combiners[c], cfg.M, cfg.N);
                    const Ecdf ecdf(samples[c]);
                    if (samples[c].size() < cfg.trials)
                        run.warnings.push_back(std::string(to_string(combiners[c])) + ": " +
                                               std::to_string(cfg.trials - samples[c].size()) +
                                               " degenerate samples discarded");
                    for (double x : xs)
                        body << num(x) << "," << to_string(combiners[c]) << "," << k << ","
                             << num(cdf_max(cdf, k, x)) << "," << num(ecdf(x)) << "\n";
                }
            }
            meta.write(out, title, run.warnings);
            out << body.str();
            return run;
        }

        double analytical_throughput(const Scheme &s, const SimConfig &cfg)
        {
            if (s.scheduler != SchedulerKind::Proposed || !cfg.noise.all_zero())
                return NAN;
            if (cfg.M == 4 && cfg.N == 2 && cfg.K >= 2)
                return asymptotic_throughput(s.combiner, cfg.K);
            if (cfg.M < 2 || (s.combiner == CombinerKind::OC && cfg.M <= cfg.N))
                return NAN;
            return exact_throughput(SirCdf(s.combiner, cfg.M, cfg.N), cfg.K);
        }

        std::string blank_or(double v)
        {
            return std::isnan(v) ? std::string() : num(v);
        }

        struct ThroughputFigure
        {
            std::vector<std::size_t> ms;
            std::vector<std::size_t> ks;
            double sigma2 = 1.0;
            std::optional<double> fixed_total_power;
            bool analytical = false;
        };

        RunOutput write_throughput_figure(const std::string &title, const ThroughputFigure &fig,
                                          const ConfigOverrides &o_in, std::ostream &out)
        {
            RunOutput run;
            ConfigOverrides o = o_in;
            if (fig.fixed_total_power && !o.total_power)
                o.total_power = fig.fixed_total_power;
            const std::vector<std::size_t> ms = o.M ? std::vector<std::size_t>{*o.M} : fig.ms;
            const std::vector<std::size_t> ks = o.K ? std::vector<std::size_t>{*o.K} : fig.ks;
            const std::vector<Scheme> schemes = proposed_schemes(o);

            SimConfig base = default_config();
            base.N = 2;
            base.total_power = static_cast<double>(base.M); // unit power per beam
            base.noise = NoiseProfile::uniform(base.K, fig.sigma2);
            base.trials = 10000;

            const SimConfig first = resolve_at(o, base, ms.front(), ks.front(), schemes.front());
            Metadata meta;
            meta.add("M", join(ms));
            meta.add("N", std::to_string(first.N));
            meta.add("K", join(ks));
            meta.add("sigma2", sigma_text(o, fig.sigma2));
            meta.add("total_power", o.total_power ? num(*o.total_power) : std::string("M"));
            meta.add("combiners", join(labels(schemes)));
            meta.add("scheduler", std::string(to_string(schemes.front().scheduler)));
            meta.add("trials", std::to_string(first.trials));
            meta.add("seed", std::to_string(first.master_seed));
            meta.add("analytical", fig.analytical ? "asymptotic (M=4,N=2) or exact integral" : "none");

            std::ostringstream body;
            body << "K,combiner,M,C_simulated,C_analytical_or_blank,std_error\n";
            for (std::size_t m : ms)
                for (std::size_t k : ks)
                {
                    const SimConfig cfg = resolve_at(o, base, m, k, schemes.front());
                    const TrialSet set = run_trials(cfg, schemes);
                    for (std::size_t s = 0; s < schemes.size(); ++s)
                    {
                        const ThroughputStats st = summarize(set, s);
                        if (st.discarded_trials > 0)
                            run.warnings.push_back(scheme_label(schemes[s]) + " M=" + std::to_string(m) + " K=" +
                                                   std::to_string(k) + ": " + std::to_string(st.discarded_trials) +
                                                   " degenerate trials discarded");
                        const double analytic = fig.analytical ? analytical_throughput(schemes[s], cfg) : NAN;
                        body << k << "," << scheme_label(schemes[s]) << "," << m << "," << num(st.mean_sum_rate)
                             << "," << blank_or(analytic) << "," << num(st.std_error) << "\n";
                    }
                }
            meta.write(out, title, run.warnings);
            out << body.str();
            return run;
        }

        std::vector<std::size_t> throughput_k_grid()
        {
            return {1, 2, 5, 10, 20, 30, 50, 75, 100};
        }

        std::vector<std::size_t> scaling_k_grid()
        {
            std::vector<std::size_t> ks;
            for (std::size_t k = 2; k <= 100; k += 2)
                ks.push_back(k);
            return ks;
        }

        RunOutput write_figure4(const ConfigOverrides &o, std::ostream &out)
        {
            RunOutput run;
            warn_ignored(o, run, {"M", "N", "sigma2", "total_power", "combiner", "scheduler", "trials"});
            const std::vector<std::size_t> ks = o.K ? std::vector<std::size_t>{*o.K} : scaling_k_grid();
            Metadata meta;
            meta.add("M", "4");
            meta.add("N", "2");
            meta.add("K", join(ks));
            meta.write(out, "figure=4", run.warnings);
            out << "K,C_scaling_OC,C_scaling_MRC,C_scaling_SC\n";
            for (std::size_t k : ks)
                out << k << "," << num(scaling_law(CombinerKind::OC, k)) << ","
                    << num(scaling_law(CombinerKind::MRC, k)) << "," << num(scaling_law(CombinerKind::SC, k)) << "\n";
            return run;
        }

        RunOutput write_figure7(const ConfigOverrides &o_in, std::ostream &out)
        {
            RunOutput run;
            ConfigOverrides o = o_in;
            if (o.sigma2)
            {
                run.warnings.push_back("sigma2 override ignored: figure 7 sweeps SNR = 1/sigma2");
                o.sigma2.reset();
            }
            const std::vector<double> snrs{0.0, 5.0, 10.0, 15.0, 20.0};
            const std::vector<Scheme> schemes = proposed_schemes(o);
            SimConfig base = default_config();
            base.K = 5;
            base.total_power = 4.0;
            base.noise = NoiseProfile::uniform(5, 1.0);
            base.trials = 10000;
            const SimConfig first = resolve_at(o, base, o.M.value_or(4), o.K.value_or(5), schemes.front());

            Metadata meta;
            meta.add("M", std::to_string(first.M));
            meta.add("N", std::to_string(first.N));
            meta.add("K", std::to_string(first.K));
            meta.add("snr_db", join(snrs));
            meta.add("total_power", num(first.total_power));
            meta.add("combiners", join(labels(schemes)));
            meta.add("scheduler", std::string(to_string(schemes.front().scheduler)));
            meta.add("trials", std::to_string(first.trials));
            meta.add("seed", std::to_string(first.master_seed));

            std::ostringstream body;
            body << "snr_db,combiner,C_simulated,std_error\n";
            for (double snr : snrs)
            {
                SimConfig cfg = first;
                cfg.noise = NoiseProfile::uniform(cfg.K, std::pow(10.0, -snr / 10.0));
                const TrialSet set = run_trials(cfg, schemes);
                for (std::size_t s = 0; s < schemes.size(); ++s)
                {
                    const ThroughputStats st = summarize(set, s);
                    body << num(snr) << "," << scheme_label(schemes[s]) << "," << num(st.mean_sum_rate) << ","
                         << num(st.std_error) << "\n";
                }
            }
            meta.write(out, "figure=7", run.warnings);
            out << body.str();
            return run;
        }
    }

    RunOutput run_figure(int figure, const ConfigOverrides &overrides, std::ostream &out)
    {
        switch (figure)
        {
        case 2:
            return write_cdf_table("figure=2", overrides, {1, 5}, out);
        case 3:
        {
            ThroughputFigure fig{{4}, throughput_k_grid(), 0.0, std::nullopt, true};
            return write_throughput_figure("figure=3", fig, overrides, out);
        }
        case 4:
            return write_figure4(overrides, out);
        case 5:
        {
            ThroughputFigure fig{{2, 4}, throughput_k_grid(), 1.0, std::nullopt, false};
            return write_throughput_figure("figure=5", fig, overrides, out);
        }
        case 6:
        {
            ThroughputFigure fig{{2, 4}, throughput_k_grid(), 1.0, 2.0, false};
            return write_throughput_figure("figure=6", fig, overrides, out);
        }
        case 7:
            return write_figure7(overrides, out);
        default:
            throw Error(ErrorCode::InvalidArgument, "figure id must be in 2..7");
        }
    }

    RunOutput run_cdf(const ConfigOverrides &overrides, std::ostream &out)
    {
        return write_cdf_table("cdf", overrides, {1}, out);
    }

    RunOutput run_throughput(const ConfigOverrides &o, std::ostream &out)
    {
        RunOutput run;
        const std::vector<Scheme> schemes = proposed_schemes(o);
        const SimConfig cfg = resolve(o, [&]
                                      {
            SimConfig base = default_config();
            base.combiner = schemes.front().combiner;
            base.scheduler = schemes.front().scheduler;
            return base; }());
        const TrialSet set = run_trials(cfg, schemes);

        Metadata meta;
        meta.add("M", std::to_string(cfg.M));
        meta.add("N", std::to_string(cfg.N));
        meta.add("K", std::to_string(cfg.K));
        meta.add("sigma2", join(cfg.noise.variances()));
        meta.add("total_power", num(cfg.total_power));
        meta.add("combiners", join(labels(schemes)));
        meta.add("scheduler", std::string(to_string(cfg.scheduler)));
        meta.add("trials", std::to_string(cfg.trials));
        meta.add("seed", std::to_string(cfg.master_seed));

        std::ostringstream body;
        body << "K,combiner,M,C_simulated,std_error,trials,discarded_trials,unassigned_beams,per_beam_mean_sinr\n";
        for (std::size_t s = 0; s < schemes.size(); ++s)
        {
            const ThroughputStats st = summarize(set, s);
            if (st.trials == 0)
                throw Error(ErrorCode::AllTrialsDegenerate, scheme_label(schemes[s]) + ": every trial was degenerate");
            if (st.discarded_trials > 0)
                run.warnings.push_back(scheme_label(schemes[s]) + ": " + std::to_string(st.discarded_trials) +
                                       " degenerate trials discarded");
            body << cfg.K << "," << scheme_label(schemes[s]) << "," << cfg.M << "," << num(st.mean_sum_rate) << ","
                 << num(st.std_error) << "," << st.trials << "," << st.discarded_trials << "," << st.unassigned_beams
                 << "," << join(st.per_beam_mean_sinr, ";") << "\n";
        }
        meta.write(out, "throughput", run.warnings);
        out << body.str();
        return run;
    }

    RunOutput run_asymptotic(const ConfigOverrides &o, std::ostream &out)
    {
        RunOutput run;
        warn_ignored(o, run, {"sigma2", "total_power", "scheduler", "trials"});
        const std::size_t k = o.K.value_or(50);
        const std::size_t m = o.M.value_or(4);
        const std::size_t n = o.N.value_or(2);
        const std::vector<CombinerKind> combiners =
            o.combiner ? std::vector<CombinerKind>{*o.combiner}
                       : std::vector<CombinerKind>{CombinerKind::SC, CombinerKind::MRC, CombinerKind::OC};
        const bool m4n2 = (m == 4 && n == 2);
        if (!m4n2)
            run.warnings.push_back("Frechet asymptotics exist only for M=4, N=2; only the exact integral is reported");

        Metadata meta;
        meta.add("M", std::to_string(m));
        meta.add("N", std::to_string(n));
        meta.add("K", std::to_string(k));
        std::ostringstream body;
        body << "K,combiner,M,N,C_asymptotic,C_exact,C_scaling,a_K_characteristic,a_K_approx\n";
        for (auto c : combiners)
        {
            if (c == CombinerKind::Measured)
                throw Error(ErrorCode::InvalidArgument, "asymptotic: combiner must be SC, MRC or OC");
            const SirCdf cdf(c, m, n);
            const bool k_ok = k >= 2;
            body << k << "," << to_string(c) << "," << m << "," << n << ","
                 << (m4n2 && k_ok ? num(asymptotic_throughput(c, k)) : std::string()) << ","
                 << num(exact_throughput(cdf, k)) << "," << (m4n2 ? num(scaling_law(c, k)) : std::string()) << ","
                 << (k_ok ? num(characteristic_extreme(cdf, k)) : std::string()) << ","
                 << (m4n2 ? num(frechet_approx(c, k).scale) : std::string()) << "\n";
        }
        meta.write(out, "asymptotic", run.warnings);
        out << body.str();
        return run;
    }

    RunOutput run_scaling(const ConfigOverrides &o, std::ostream &out)
    {
        RunOutput run;
        warn_ignored(o, run, {"M", "N", "sigma2", "total_power", "scheduler", "trials"});
        const std::vector<std::size_t> ks = o.K ? std::vector<std::size_t>{*o.K} : scaling_k_grid();
        const std::vector<CombinerKind> combiners =
            o.combiner ? std::vector<CombinerKind>{*o.combiner}
                       : std::vector<CombinerKind>{CombinerKind::SC, CombinerKind::MRC, CombinerKind::OC};
        Metadata meta;
        meta.add("M", "4");
        meta.add("N", "2");
        meta.add("K", join(ks));
        std::ostringstream body;
        body << "K,combiner,C_scaling\n";
        for (std::size_t k : ks)
            for (auto c : combiners)
                body << k << "," << to_string(c) << "," << num(scaling_law(c, k)) << "\n";
        meta.write(out, "scaling", run.warnings);
        out << body.str();
        return run;
    }

    std::string plot_script(int figure, const std::string &csv_path)
    {
        std::ostringstream py;
        py << "import csv\nimport matplotlib.pyplot as plt\n\n"
           << "rows = [r for r in csv.DictReader(l for l in open(" << '"' << csv_path << '"'
           << ") if not l.startswith('#'))]\n";
        switch (figure)
        {
        case 2:
            py << "for key in sorted({(r['combiner'], r['K']) for r in rows}):\n"
               << "    sel = [r for r in rows if (r['combiner'], r['K']) == key and float(r['x']) > 0]\n"
               << "    x = [float(r['x']) for r in sel]\n"
               << "    plt.semilogx(x, [float(r['F_analytical']) for r in sel], label='%s K=%s' % key)\n"
               << "    plt.semilogx(x, [float(r['F_empirical']) for r in sel], 'k:', linewidth=0.8)\n"
               << "plt.xlabel('SIR x'); plt.ylabel('CDF')\n";
            break;
        case 4:
            py << "k = [int(r['K']) for r in rows]\n"
               << "for c in ('OC', 'MRC', 'SC'):\n"
               << "    plt.plot(k, [float(r['C_scaling_' + c]) for r in rows], label=c)\n"
               << "plt.xlabel('K'); plt.ylabel('bits/s/Hz')\n";
            break;
        case 7:
            py << "for c in sorted({r['combiner'] for r in rows}):\n"
               << "    sel = [r for r in rows if r['combiner'] == c]\n"
               << "    plt.plot([float(r['snr_db']) for r in sel], [float(r['C_simulated']) for r in sel], 'o-', label=c)\n"
               << "plt.xlabel('SNR (dB)'); plt.ylabel('bits/s/Hz')\n";
            break;
        default:
            py << "for key in sorted({(r['combiner'], r['M']) for r in rows}):\n"
               << "    sel = [r for r in rows if (r['combiner'], r['M']) == key]\n"
               << "    k = [int(r['K']) for r in sel]\n"
               << "    plt.plot(k, [float(r['C_simulated']) for r in sel], 'o-', label='%s M=%s' % key)\n"
               << "    if any(r['C_analytical_or_blank'] for r in sel):\n"
               << "        plt.plot(k, [float(r['C_analytical_or_blank'] or 'nan') for r in sel], '--')\n"
               << "plt.xlabel('K'); plt.ylabel('bits/s/Hz')\n";
            break;
        }
        py << "plt.legend(); plt.grid(True)\nplt.savefig(" << '"' << csv_path << ".png" << '"' << ")\n";
        return py.str();
    }
}
