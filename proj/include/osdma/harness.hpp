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

#ifndef OSDMA_HARNESS_HPP
#define OSDMA_HARNESS_HPP

#include "osdma/analytics.hpp"
#include "osdma/scheduling.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace osdma
{
    inline constexpr const char *kSeedEnvVar = "OSDMA_SEED";

    // Partially specified SimConfig. Every field left empty falls back to the
    // defaults of whatever command or figure is being run.
    struct ConfigOverrides
    {
        std::optional<std::size_t> M;
        std::optional<std::size_t> N;
        std::optional<std::size_t> K;
        std::optional<std::vector<double>> sigma2; // one value, or one per user
        std::optional<double> total_power;
        std::optional<CombinerKind> combiner;
        std::optional<SchedulerKind> scheduler;
        std::optional<std::size_t> trials;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> threads;

        // Keys are the SimConfig field names; '-' and '_' are interchangeable.
        // Throws Error(InvalidArgument) on unknown keys or unparsable values.
        void set(std::string_view key, std::string_view value);

        // Flat "key = value" file, '#' starts a comment.
        void load_file(const std::string &path);

        // Reads the seed from OSDMA_SEED when present.
        void apply_env();

        // Fields set in `higher` win.
        void merge(const ConfigOverrides &higher);

        bool any_set() const noexcept;
    };

    // Applies overrides on top of defaults; sigma2 is broadcast to K users when scalar.
    SimConfig resolve(const ConfigOverrides &overrides, SimConfig defaults);

    SimConfig default_config();

    // Right-continuous empirical CDF.
    class Ecdf
    {
    public:
        explicit Ecdf(std::vector<double> samples);

        std::size_t size() const noexcept { return sorted_.size(); }
        const std::vector<double> &sorted() const noexcept { return sorted_; }
        double operator()(double x) const;

    private:
        std::vector<double> sorted_;
    };

    // Two-sided Kolmogorov-Smirnov statistic sup_x |Ecdf(x) - F(x)|, evaluated at the
    // sample points from both sides of each jump. Requires at least 100 samples.
    double ks_distance(const Ecdf &e, const RealFunction &f);

    // ---------- Figures ----------

    struct RunOutput
    {
        std::vector<std::string> warnings;
    };

    // Writes the CSV of figure 2..7 to `out`, applying overrides on top of the figure's
    // own defaults. Lines starting with '#' carry the resolved configuration.
    RunOutput run_figure(int figure, const ConfigOverrides &overrides, std::ostream &out);

    // Single-command variants behind the CLI.
    RunOutput run_throughput(const ConfigOverrides &overrides, std::ostream &out);
    RunOutput run_cdf(const ConfigOverrides &overrides, std::ostream &out);
    RunOutput run_asymptotic(const ConfigOverrides &overrides, std::ostream &out);
    RunOutput run_scaling(const ConfigOverrides &overrides, std::ostream &out);

    // Matplotlib script that plots a figure CSV.
    std::string plot_script(int figure, const std::string &csv_path);

    // ---------- Validation ----------

    struct ValidationCheck
    {
        std::string name;
        double statistic = 0.0;
        double threshold = 0.0;
        std::string comparison; // how statistic relates to threshold when passing
        bool passed = false;
        std::string detail;
    };

    struct ValidationReport
    {
        std::string suite;
        std::uint64_t seed = 0;
        std::vector<ValidationCheck> checks;
        std::vector<std::string> warnings;

        bool passed() const noexcept;
        std::string to_json() const;
    };

    // suite is one of cdf, ordering, throughput, baseline.
    ValidationReport run_validation(std::string_view suite, const ConfigOverrides &overrides);

    // Building blocks shared by the validation suites and the acceptance tests.

    // `samples` independent slots; per slot the best (over the users) effective SINR of
    // beam 0, one sample vector per combiner. Measured uses receive antenna 0. Degenerate
    // draws are dropped. The first overload is the noise-free, unit-power case.
    std::vector<std::vector<double>> sample_max_sir(std::size_t m, std::size_t n, std::size_t users,
                                                    std::span<const CombinerKind> combiners, std::size_t samples,
                                                    std::uint64_t seed, std::size_t threads);
    std::vector<std::vector<double>> sample_max_sir(std::size_t m, std::size_t n, const NoiseProfile &noise,
                                                    double per_beam_power, std::span<const CombinerKind> combiners,
                                                    std::size_t samples, std::uint64_t seed, std::size_t threads);

    struct OrderingResult
    {
        std::size_t draws = 0;
        double worst_mrc_excess = -INFINITY;     // max over beams/draws of mrc - oc
        double worst_sc_excess = -INFINITY;      // max of sc - oc
        double worst_generic_excess = -INFINITY; // max of generic(w) - oc over random w
    };

    OrderingResult check_combiner_ordering(std::size_t m, std::size_t n, double noise_var, std::size_t draws,
                                           std::size_t weights_per_draw, std::uint64_t seed, std::size_t threads);
}

#endif
