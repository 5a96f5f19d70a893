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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace
{
    struct ConfigDeleter
    {
        void operator()(osdma_config *c) const { osdma_config_destroy(c); }
    };
    using ConfigPtr = std::unique_ptr<osdma_config, ConfigDeleter>;

    struct OwnedString
    {
        char *text = nullptr;
        ~OwnedString() { osdma_string_free(text); }
    };

    struct Flags
    {
        std::string config_file;
        std::string out;
        std::string plot;
        std::vector<std::pair<std::string, std::string>> values;
    };

    int fail(osdma_status status)
    {
        std::cerr << "osdma: " << osdma_status_name(status) << ": " << osdma_last_error() << "\n";
        return status == OSDMA_E_INVALID_ARGUMENT ? 2 : 3;
    }

    void print_warnings()
    {
        for (std::size_t i = 0; i < osdma_warning_count(); ++i)
            std::cerr << "osdma: warning: " << osdma_warning(i) << "\n";
    }

    bool write_text(const std::string &path, const char *text)
    {
        if (path.empty() || path == "-")
        {
            std::fputs(text, stdout);
            return true;
        }
        std::ofstream out(path, std::ios::binary);
        out << text;
        if (!out)
        {
            std::cerr << "osdma: cannot write '" << path << "'\n";
            return false;
        }
        return true;
    }

    // Config file first, then OSDMA_SEED, then command-line flags.
    osdma_status build_config(const Flags &flags, ConfigPtr &out)
    {
        osdma_config *raw = nullptr;
        if (auto st = osdma_config_create(&raw); st != OSDMA_OK)
            return st;
        out.reset(raw);
        if (!flags.config_file.empty())
            if (auto st = osdma_config_load_file(out.get(), flags.config_file.c_str()); st != OSDMA_OK)
                return st;
        if (auto st = osdma_config_apply_env(out.get()); st != OSDMA_OK)
            return st;
        for (const auto &[key, value] : flags.values)
            if (auto st = osdma_config_set(out.get(), key.c_str(), value.c_str()); st != OSDMA_OK)
                return st;
        return OSDMA_OK;
    }

    void add_config_flags(CLI::App *app, Flags &flags)
    {
        app->add_option("--config", flags.config_file, "flat key=value configuration file");
        app->add_option("--out", flags.out, "output path (stdout when omitted)");
        const std::vector<std::pair<std::string, std::string>> keys{
            {"--M", "transmit antennas / beams"},
            {"--N", "receive antennas per user"},
            {"--K", "number of users"},
            {"--sigma2", "noise variance, one value or a comma list per user"},
            {"--total-power", "total transmit power"},
            {"--combiner", "measured, sc, mrc or oc"},
            {"--scheduler", "proposed or sh"},
            {"--trials", "Monte Carlo trials or samples"},
            {"--seed", "master seed (also OSDMA_SEED)"},
            {"--threads", "worker threads; results do not depend on it"},
        };
        for (const auto &[name, help] : keys)
        {
            const std::string key = name.substr(2);
            app->add_option_function<std::string>(
                name, [&flags, key](const std::string &v)
                { flags.values.emplace_back(key, v); },
                help);
        }
    }

    template <class Producer>
    int emit_csv(const Flags &flags, Producer &&producer)
    {
        ConfigPtr cfg;
        if (auto st = build_config(flags, cfg); st != OSDMA_OK)
            return fail(st);
        OwnedString csv;
        if (auto st = producer(cfg.get(), &csv.text); st != OSDMA_OK)
            return fail(st);
        print_warnings();
        return write_text(flags.out, csv.text) ? 0 : 4;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Opportunistic SDMA scheduling and beamforming simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(osdma_version()));

    Flags flags;
    int figure_id = 0;
    std::string suite;

    auto *figure = app.add_subcommand("figure", "write the CSV of figure 2..7");
    figure->add_option("id", figure_id, "figure number")->required()->check(CLI::Range(2, 7));
    figure->add_option("--plot", flags.plot, "also write a matplotlib script to this path");
    auto *validate = app.add_subcommand("validate", "run a validation suite and print a JSON report");
    validate->add_option("suite", suite, "cdf, ordering, throughput or baseline")
        ->required()
        ->check(CLI::IsMember({"cdf", "ordering", "throughput", "baseline"}));
    auto *throughput = app.add_subcommand("throughput", "Monte Carlo sum rate for one configuration");
    auto *cdf = app.add_subcommand("cdf", "analytical and empirical SIR CDFs");
    auto *asymptotic = app.add_subcommand("asymptotic", "asymptotic, exact and scaling-law throughput");
    auto *scaling = app.add_subcommand("scaling", "scaling laws over K");
    for (auto *sub : {figure, validate, throughput, cdf, asymptotic, scaling})
        add_config_flags(sub, flags);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        // Help and version exit 0; every usage error exits 2 like a bad configuration value.
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (figure->parsed())
    {
        const int rc = emit_csv(flags, [&](const osdma_config *c, char **out)
                                { return osdma_figure_csv(c, figure_id, out); });
        if (rc != 0 || flags.plot.empty())
            return rc;
        OwnedString script;
        const std::string csv_path = flags.out.empty() ? "figure" + std::to_string(figure_id) + ".csv" : flags.out;
        if (auto st = osdma_plot_script(figure_id, csv_path.c_str(), &script.text); st != OSDMA_OK)
            return fail(st);
        return write_text(flags.plot, script.text) ? 0 : 4;
    }
    if (validate->parsed())
    {
        ConfigPtr cfg;
        if (auto st = build_config(flags, cfg); st != OSDMA_OK)
            return fail(st);
        OwnedString json;
        int passed = 0;
        if (auto st = osdma_run_validation(cfg.get(), suite.c_str(), &json.text, &passed); st != OSDMA_OK)
            return fail(st);
        print_warnings();
        if (!write_text(flags.out, json.text))
            return 4;
        return passed ? 0 : 1;
    }
    if (throughput->parsed())
        return emit_csv(flags, osdma_throughput_csv);
    if (cdf->parsed())
        return emit_csv(flags, osdma_cdf_csv);
    if (asymptotic->parsed())
        return emit_csv(flags, osdma_asymptotic_csv);
    return emit_csv(flags, osdma_scaling_csv);
}
