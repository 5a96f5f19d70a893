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
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>

namespace osdma
{
    namespace
    {
        std::string normalise_key(std::string_view key)
        {
            while (!key.empty() && key.front() == '-')
                key.remove_prefix(1);
            std::string out;
            for (char c : key)
                out.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            return out;
        }

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        [[noreturn]] void bad_value(std::string_view key, std::string_view value)
        {
            throw Error(ErrorCode::InvalidArgument,
                        "invalid value '" + std::string(value) + "' for '" + std::string(key) + "'");
        }

        template <class T>
        T parse_unsigned(std::string_view key, std::string_view value)
        {
            value = trim(value);
            T out{};
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
            if (ec != std::errc() || ptr != value.data() + value.size())
                bad_value(key, value);
            return out;
        }

        double parse_double(std::string_view key, std::string_view value)
        {
            value = trim(value);
            const std::string text(value);
            char *end = nullptr;
            const double out = std::strtod(text.c_str(), &end);
            if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(out))
                bad_value(key, value);
            return out;
        }

        std::size_t parse_count(std::string_view key, std::string_view value)
        {
            // Accept 1e5 style counts as well as plain integers.
            const double v = parse_double(key, value);
            if (v < 0.0 || v != std::floor(v) || v > 1e15)
                bad_value(key, value);
            return static_cast<std::size_t>(v);
        }
    }

    void ConfigOverrides::set(std::string_view raw_key, std::string_view value)
    {
        const std::string key = normalise_key(raw_key);
        value = trim(value);
        if (key == "m")
            M = parse_count(raw_key, value);
        else if (key == "n")
            N = parse_count(raw_key, value);
        else if (key == "k")
            K = parse_count(raw_key, value);
        else if (key == "sigma2" || key == "noise")
        {
            std::vector<double> values;
            std::size_t start = 0;
            while (start <= value.size())
            {
                const std::size_t comma = value.find(',', start);
                const std::string_view item =
                    value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
                const double v = parse_double(raw_key, item);
                if (v < 0.0)
                    bad_value(raw_key, item);
                values.push_back(v);
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
            sigma2 = std::move(values);
        }
        else if (key == "total_power")
        {
            const double v = parse_double(raw_key, value);
            if (!(v > 0.0))
                bad_value(raw_key, value);
            total_power = v;
        }
        else if (key == "combiner")
        {
            auto c = parse_combiner(value);
            if (!c)
                bad_value(raw_key, value);
            combiner = *c;
        }
        else if (key == "scheduler")
        {
            auto s = parse_scheduler(value);
            if (!s)
                bad_value(raw_key, value);
            scheduler = *s;
        }
        else if (key == "trials")
            trials = parse_count(raw_key, value);
        else if (key == "seed" || key == "master_seed")
            seed = parse_unsigned<std::uint64_t>(raw_key, value);
        else if (key == "threads")
            threads = parse_count(raw_key, value);
        else
            throw Error(ErrorCode::InvalidArgument, "unknown configuration key '" + std::string(raw_key) + "'");
    }

    void ConfigOverrides::load_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw Error(ErrorCode::Io, "cannot open config file '" + path + "'");
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            std::string_view view(line);
            if (const auto hash = view.find('#'); hash != std::string_view::npos)
                view = view.substr(0, hash);
            view = trim(view);
            if (view.empty())
                continue;
            const auto eq = view.find('=');
            if (eq == std::string_view::npos)
                throw Error(ErrorCode::InvalidArgument,
                            path + ":" + std::to_string(line_no) + ": expected 'key = value'");
            set(trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
        }
    }

    void ConfigOverrides::apply_env()
    {
        if (const char *env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0')
            seed = parse_unsigned<std::uint64_t>(kSeedEnvVar, env);
    }

    void ConfigOverrides::merge(const ConfigOverrides &higher)
    {
        auto take = [](auto &mine, const auto &theirs)
        {
            if (theirs)
                mine = theirs;
        };
        take(M, higher.M);
        take(N, higher.N);
        take(K, higher.K);
        take(sigma2, higher.sigma2);
        take(total_power, higher.total_power);
        take(combiner, higher.combiner);
        take(scheduler, higher.scheduler);
        take(trials, higher.trials);
        take(seed, higher.seed);
        take(threads, higher.threads);
    }

    bool ConfigOverrides::any_set() const noexcept
    {
        return M || N || K || sigma2 || total_power || combiner || scheduler || trials || seed || threads;
    }

    SimConfig default_config()
    {
        SimConfig c;
        c.threads = std::max(1u, std::thread::hardware_concurrency());
        return c;
    }

    SimConfig resolve(const ConfigOverrides &o, SimConfig c)
    {
        // Without an explicit total power the per-beam power of the defaults is kept,
        // so changing M keeps "total power = M x per-beam power".
        const double default_per_beam = c.per_beam_power();
        if (o.M)
            c.M = *o.M;
        if (o.N)
            c.N = *o.N;
        if (o.K)
            c.K = *o.K;
        c.total_power = o.total_power ? *o.total_power : default_per_beam * static_cast<double>(c.M);
        if (o.combiner)
            c.combiner = *o.combiner;
        if (o.scheduler)
            c.scheduler = *o.scheduler;
        if (o.trials)
            c.trials = *o.trials;
        if (o.seed)
            c.master_seed = *o.seed;
        if (o.threads)
            c.threads = std::max<std::size_t>(1, *o.threads);

        std::vector<double> sigma = o.sigma2 ? *o.sigma2 : c.noise.variances();
        if (sigma.empty())
            sigma = {1.0};
        if (sigma.size() == 1 || (!o.sigma2 && sigma.size() != c.K))
            sigma.assign(c.K, sigma.front());
        if (sigma.size() != c.K)
            throw Error(ErrorCode::InvalidArgument, "sigma2 must be a single value or one value per user (K = " +
                                                        std::to_string(c.K) + ")");
        c.noise = NoiseProfile(std::move(sigma));
        c.validate();
        return c;
    }
}
