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

#include "osdma.h"

#include "osdma/errors.hpp"
#include "osdma/harness.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

struct osdma_config
{
    osdma::ConfigOverrides overrides;
};

namespace
{
    thread_local std::string g_last_error;
    thread_local std::vector<std::string> g_warnings;

    osdma_status from_code(osdma::ErrorCode code)
    {
        switch (code)
        {
        case osdma::ErrorCode::InvalidArgument:
            return OSDMA_E_INVALID_ARGUMENT;
        case osdma::ErrorCode::Domain:
            return OSDMA_E_DOMAIN;
        case osdma::ErrorCode::DegenerateDraw:
            return OSDMA_E_DEGENERATE_DRAW;
        case osdma::ErrorCode::NotPositiveDefinite:
            return OSDMA_E_NOT_POSITIVE_DEFINITE;
        case osdma::ErrorCode::NoConvergence:
            return OSDMA_E_NO_CONVERGENCE;
        case osdma::ErrorCode::NoSignChange:
            return OSDMA_E_NO_SIGN_CHANGE;
        case osdma::ErrorCode::AllTrialsDegenerate:
            return OSDMA_E_ALL_TRIALS_DEGENERATE;
        case osdma::ErrorCode::Io:
            return OSDMA_E_IO;
        }
        return OSDMA_E_INTERNAL;
    }

    template <class F>
    osdma_status guarded(F &&body)
    {
        g_last_error.clear();
        try
        {
            body();
            return OSDMA_OK;
        }
        catch (const osdma::Error &e)
        {
            g_last_error = e.what();
            return from_code(e.code());
        }
        catch (const std::bad_alloc &)
        {
            g_last_error = "out of memory";
        }
        catch (const std::exception &e)
        {
            g_last_error = e.what();
        }
        catch (...)
        {
            g_last_error = "unknown error";
        }
        return OSDMA_E_INTERNAL;
    }

    void require(bool ok, const char *what)
    {
        if (!ok)
            throw osdma::Error(osdma::ErrorCode::InvalidArgument, what);
    }

    char *copy_out(const std::string &s)
    {
        char *buf = static_cast<char *>(std::malloc(s.size() + 1));
        if (buf == nullptr)
            throw std::bad_alloc();
        std::memcpy(buf, s.data(), s.size() + 1);
        return buf;
    }

    osdma::CombinerKind combiner_of(osdma_combiner c)
    {
        switch (c)
        {
        case OSDMA_COMBINER_MEASURED:
            return osdma::CombinerKind::Measured;
        case OSDMA_COMBINER_SC:
            return osdma::CombinerKind::SC;
        case OSDMA_COMBINER_MRC:
            return osdma::CombinerKind::MRC;
        case OSDMA_COMBINER_OC:
            return osdma::CombinerKind::OC;
        }
        throw osdma::Error(osdma::ErrorCode::InvalidArgument, "unknown combiner");
    }

    template <class Producer>
    osdma_status produce_csv(const osdma_config *config, char **out, Producer &&producer)
    {
        return guarded([&]
                       {
            require(config != nullptr && out != nullptr, "null argument");
            *out = nullptr;
            g_warnings.clear();
            std::ostringstream os;
            const osdma::RunOutput run = producer(config->overrides, os);
            g_warnings = run.warnings;
            *out = copy_out(os.str()); });
    }
}

extern "C"
{
    const char *osdma_version(void)
    {
        return "1.0.0";
    }

    const char *osdma_status_name(osdma_status status)
    {
        switch (status)
        {
        case OSDMA_OK:
            return "ok";
        case OSDMA_E_INVALID_ARGUMENT:
            return "invalid argument";
        case OSDMA_E_DOMAIN:
            return "domain error";
        case OSDMA_E_DEGENERATE_DRAW:
            return "degenerate draw";
        case OSDMA_E_NOT_POSITIVE_DEFINITE:
            return "not positive definite";
        case OSDMA_E_NO_CONVERGENCE:
            return "no convergence";
        case OSDMA_E_NO_SIGN_CHANGE:
            return "no sign change";
        case OSDMA_E_ALL_TRIALS_DEGENERATE:
            return "all trials degenerate";
        case OSDMA_E_IO:
            return "i/o error";
        case OSDMA_E_INTERNAL:
            return "internal error";
        }
        return "unknown status";
    }

    const char *osdma_last_error(void)
    {
        return g_last_error.c_str();
    }

    size_t osdma_warning_count(void)
    {
        return g_warnings.size();
    }

    const char *osdma_warning(size_t index)
    {
        return index < g_warnings.size() ? g_warnings[index].c_str() : nullptr;
    }

    osdma_status osdma_config_create(osdma_config **out)
    {
        return guarded([&]
                       {
            require(out != nullptr, "null argument");
            *out = new osdma_config(); });
    }

    void osdma_config_destroy(osdma_config *config)
    {
        delete config;
    }

    osdma_status osdma_config_set(osdma_config *config, const char *key, const char *value)
    {
        return guarded([&]
                       {
            require(config != nullptr && key != nullptr && value != nullptr, "null argument");
            config->overrides.set(key, value); });
    }

    osdma_status osdma_config_load_file(osdma_config *config, const char *path)
    {
        return guarded([&]
                       {
            require(config != nullptr && path != nullptr, "null argument");
            config->overrides.load_file(path); });
    }

    osdma_status osdma_config_apply_env(osdma_config *config)
    {
        return guarded([&]
                       {
            require(config != nullptr, "null argument");
            config->overrides.apply_env(); });
    }

    osdma_status osdma_config_merge(osdma_config *config, const osdma_config *higher)
    {
        return guarded([&]
                       {
            require(config != nullptr && higher != nullptr, "null argument");
            config->overrides.merge(higher->overrides); });
    }

    osdma_status osdma_figure_csv(const osdma_config *config, int figure, char **out)
    {
        return produce_csv(config, out, [figure](const osdma::ConfigOverrides &o, std::ostream &os)
                           { return osdma::run_figure(figure, o, os); });
    }

    osdma_status osdma_throughput_csv(const osdma_config *config, char **out)
    {
        return produce_csv(config, out, osdma::run_throughput);
    }

    osdma_status osdma_cdf_csv(const osdma_config *config, char **out)
    {
        return produce_csv(config, out, osdma::run_cdf);
    }

    osdma_status osdma_asymptotic_csv(const osdma_config *config, char **out)
    {
        return produce_csv(config, out, osdma::run_asymptotic);
    }

    osdma_status osdma_scaling_csv(const osdma_config *config, char **out)
    {
        return produce_csv(config, out, osdma::run_scaling);
    }

    osdma_status osdma_plot_script(int figure, const char *csv_path, char **out)
    {
        return guarded([&]
                       {
            require(csv_path != nullptr && out != nullptr, "null argument");
            require(figure >= 2 && figure <= 7, "figure id must be in 2..7");
            *out = copy_out(osdma::plot_script(figure, csv_path)); });
    }

    osdma_status osdma_run_validation(const osdma_config *config, const char *suite, char **json, int *passed)
    {
        return guarded([&]
                       {
            require(config != nullptr && suite != nullptr && json != nullptr && passed != nullptr, "null argument");
            *json = nullptr;
            g_warnings.clear();
            const osdma::ValidationReport report = osdma::run_validation(suite, config->overrides);
            g_warnings = report.warnings;
            *passed = report.passed() ? 1 : 0;
            *json = copy_out(report.to_json()); });
    }

    void osdma_string_free(char *text)
    {
        std::free(text);
    }

    osdma_status osdma_monte_carlo_throughput(const osdma_config *config, osdma_throughput_result *out)
    {
        return guarded([&]
                       {
            require(config != nullptr && out != nullptr, "null argument");
            const osdma::SimConfig cfg = osdma::resolve(config->overrides, osdma::default_config());
            const osdma::ThroughputStats st = osdma::monte_carlo_throughput(cfg);
            *out = {st.trials, st.discarded_trials, st.unassigned_beams, st.mean_sum_rate, st.std_error}; });
    }

    osdma_status osdma_sir_cdf(osdma_combiner combiner, size_t m, size_t n, size_t k, double x, double *out)
    {
        return guarded([&]
                       {
            require(out != nullptr, "null argument");
            *out = osdma::cdf_max(osdma::SirCdf(combiner_of(combiner), m, n), k, x); });
    }

    osdma_status osdma_characteristic_extreme(osdma_combiner combiner, size_t m, size_t n, size_t k, double *out)
    {
        return guarded([&]
                       {
            require(out != nullptr, "null argument");
            *out = osdma::characteristic_extreme(osdma::SirCdf(combiner_of(combiner), m, n), k); });
    }

    osdma_status osdma_exact_throughput(osdma_combiner combiner, size_t m, size_t n, size_t k, double *out)
    {
        return guarded([&]
                       {
            require(out != nullptr, "null argument");
            *out = osdma::exact_throughput(osdma::SirCdf(combiner_of(combiner), m, n), k); });
    }

    osdma_status osdma_asymptotic_throughput(osdma_combiner combiner, size_t k, double *out)
    {
        return guarded([&]
                       {
            require(out != nullptr, "null argument");
            *out = osdma::asymptotic_throughput(combiner_of(combiner), k); });
    }

    osdma_status osdma_scaling_law(osdma_combiner combiner, size_t k, double *out)
    {
        return guarded([&]
                       {
            require(out != nullptr, "null argument");
            *out = osdma::scaling_law(combiner_of(combiner), k); });
    }
}
