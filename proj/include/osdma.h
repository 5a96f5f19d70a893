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

#ifndef OSDMA_H
#define OSDMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(OSDMA_BUILDING)
#define OSDMA_API __declspec(dllexport)
#elif defined(_WIN32)
#define OSDMA_API __declspec(dllimport)
#elif defined(__GNUC__)
#define OSDMA_API __attribute__((visibility("default")))
#else
#define OSDMA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum osdma_status {
    OSDMA_OK = 0,
    OSDMA_E_INVALID_ARGUMENT = 1,
    OSDMA_E_DOMAIN = 2,
    OSDMA_E_DEGENERATE_DRAW = 3,
    OSDMA_E_NOT_POSITIVE_DEFINITE = 4,
    OSDMA_E_NO_CONVERGENCE = 5,
    OSDMA_E_NO_SIGN_CHANGE = 6,
    OSDMA_E_ALL_TRIALS_DEGENERATE = 7,
    OSDMA_E_IO = 8,
    OSDMA_E_INTERNAL = 99
} osdma_status;

typedef enum osdma_combiner {
    OSDMA_COMBINER_MEASURED = 0,
    OSDMA_COMBINER_SC = 1,
    OSDMA_COMBINER_MRC = 2,
    OSDMA_COMBINER_OC = 3
} osdma_combiner;

/* Partially specified simulation configuration. Unset fields take the defaults of
 * the command that consumes the configuration. */
typedef struct osdma_config osdma_config;

typedef struct osdma_throughput_result {
    size_t trials;
    size_t discarded_trials;
    size_t unassigned_beams;
    double mean_sum_rate;
    double std_error;
} osdma_throughput_result;

OSDMA_API const char *osdma_version(void);
OSDMA_API const char *osdma_status_name(osdma_status status);

/* Message of the most recent failure on the calling thread; "" if none. */
OSDMA_API const char *osdma_last_error(void);

/* Warnings produced by the most recent CSV or validation call on the calling thread. */
OSDMA_API size_t osdma_warning_count(void);
OSDMA_API const char *osdma_warning(size_t index);

OSDMA_API osdma_status osdma_config_create(osdma_config **out);
OSDMA_API void osdma_config_destroy(osdma_config *config);
/* Keys: M, N, K, sigma2, total_power, combiner, scheduler, trials, seed, threads. */
OSDMA_API osdma_status osdma_config_set(osdma_config *config, const char *key, const char *value);
OSDMA_API osdma_status osdma_config_load_file(osdma_config *config, const char *path);
/* Reads the master seed from OSDMA_SEED when set. */
OSDMA_API osdma_status osdma_config_apply_env(osdma_config *config);
/* Fields set in `higher` overwrite those of `config`. */
OSDMA_API osdma_status osdma_config_merge(osdma_config *config, const osdma_config *higher);

/* CSV producers. On success *out holds a NUL-terminated string to release with
 * osdma_string_free. */
OSDMA_API osdma_status osdma_figure_csv(const osdma_config *config, int figure, char **out);
OSDMA_API osdma_status osdma_throughput_csv(const osdma_config *config, char **out);
OSDMA_API osdma_status osdma_cdf_csv(const osdma_config *config, char **out);
OSDMA_API osdma_status osdma_asymptotic_csv(const osdma_config *config, char **out);
OSDMA_API osdma_status osdma_scaling_csv(const osdma_config *config, char **out);
OSDMA_API osdma_status osdma_plot_script(int figure, const char *csv_path, char **out);

/* suite: cdf, ordering, throughput or baseline. *json receives the report and
 * *passed is 1 when every check passed. */
OSDMA_API osdma_status osdma_run_validation(const osdma_config *config, const char *suite, char **json,
                                            int *passed);

OSDMA_API void osdma_string_free(char *text);

/* Mean sum rate of the configured combiner and scheduler. */
OSDMA_API osdma_status osdma_monte_carlo_throughput(const osdma_config *config, osdma_throughput_result *out);

/* Closed-form SIR CDF of one user (k = 1) or of the best of k users. */
OSDMA_API osdma_status osdma_sir_cdf(osdma_combiner combiner, size_t m, size_t n, size_t k, double x, double *out);
OSDMA_API osdma_status osdma_characteristic_extreme(osdma_combiner combiner, size_t m, size_t n, size_t k,
                                                    double *out);
OSDMA_API osdma_status osdma_exact_throughput(osdma_combiner combiner, size_t m, size_t n, size_t k, double *out);
/* M = 4, N = 2 only. */
OSDMA_API osdma_status osdma_asymptotic_throughput(osdma_combiner combiner, size_t k, double *out);
OSDMA_API osdma_status osdma_scaling_law(osdma_combiner combiner, size_t k, double *out);

#ifdef __cplusplus
}
#endif

#endif
