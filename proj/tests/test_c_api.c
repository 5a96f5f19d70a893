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

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                  \
    do                                                                \
    {                                                                 \
        if (!(cond))                                                  \
        {                                                             \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

static osdma_config *make_config(const char *threads)
{
    osdma_config *cfg = NULL;
    EXPECT(osdma_config_create(&cfg) == OSDMA_OK);
    EXPECT(osdma_config_set(cfg, "seed", "4242") == OSDMA_OK);
    EXPECT(osdma_config_set(cfg, "trials", "400") == OSDMA_OK);
    EXPECT(osdma_config_set(cfg, "K", "6") == OSDMA_OK);
    EXPECT(osdma_config_set(cfg, "threads", threads) == OSDMA_OK);
    return cfg;
}

int main(void)
{
    double v = 0.0;
    EXPECT(osdma_sir_cdf(OSDMA_COMBINER_OC, 4, 2, 1, 1.0, &v) == OSDMA_OK && fabs(v - 0.5) < 1e-15);
    EXPECT(osdma_sir_cdf(OSDMA_COMBINER_MRC, 4, 2, 1, 1.0, &v) == OSDMA_OK && fabs(v - 0.6875) < 1e-15);
    EXPECT(osdma_scaling_law(OSDMA_COMBINER_OC, 48, &v) == OSDMA_OK && fabs(v - 14.3399) < 1e-4);
    EXPECT(osdma_characteristic_extreme(OSDMA_COMBINER_MEASURED, 2, 1, 2, &v) == OSDMA_OK && fabs(v - 1.0) < 1e-10);
    EXPECT(osdma_asymptotic_throughput(OSDMA_COMBINER_OC, 50, &v) == OSDMA_OK && v > 14.0 && v < 18.0);
    EXPECT(osdma_exact_throughput(OSDMA_COMBINER_OC, 4, 2, 50, &v) == OSDMA_OK && v > 14.0 && v < 18.0);

    /* Error mapping. */
    EXPECT(osdma_sir_cdf(OSDMA_COMBINER_OC, 2, 2, 1, 1.0, &v) == OSDMA_E_DOMAIN);
    EXPECT(strlen(osdma_last_error()) > 0);
    EXPECT(osdma_sir_cdf(OSDMA_COMBINER_OC, 4, 2, 1, -1.0, &v) == OSDMA_E_DOMAIN);
    EXPECT(osdma_sir_cdf(OSDMA_COMBINER_OC, 4, 2, 1, 1.0, NULL) == OSDMA_E_INVALID_ARGUMENT);
    EXPECT(osdma_sir_cdf((osdma_combiner)17, 4, 2, 1, 1.0, &v) == OSDMA_E_INVALID_ARGUMENT);
    EXPECT(osdma_sir_cdf(OSDMA_COMBINER_SC, 4, 2, 1, 1.0, &v) == OSDMA_OK && osdma_last_error()[0] == '\0');
    EXPECT(strcmp(osdma_status_name(OSDMA_E_IO), "i/o error") == 0);

    osdma_config *cfg = make_config("1");
    EXPECT(osdma_config_set(cfg, "bogus", "1") == OSDMA_E_INVALID_ARGUMENT);
    EXPECT(osdma_config_set(cfg, "M", "x") == OSDMA_E_INVALID_ARGUMENT);
    EXPECT(osdma_config_load_file(cfg, "/nonexistent/osdma.cfg") == OSDMA_E_IO);

    osdma_throughput_result r;
    EXPECT(osdma_monte_carlo_throughput(cfg, &r) == OSDMA_OK);
    EXPECT(r.trials + r.discarded_trials == 400);
    EXPECT(r.mean_sum_rate > 0.0 && r.std_error > 0.0);

    /* Same seed, different thread counts: identical bytes. */
    osdma_config *cfg8 = make_config("8");
    for (int fig = 2; fig <= 7; ++fig)
    {
        char *a = NULL, *b = NULL;
        EXPECT(osdma_figure_csv(cfg, fig, &a) == OSDMA_OK);
        EXPECT(osdma_figure_csv(cfg8, fig, &b) == OSDMA_OK);
        EXPECT(a != NULL && b != NULL && strcmp(a, b) == 0);
        EXPECT(a != NULL && a[0] == '#');
        osdma_string_free(a);
        osdma_string_free(b);
    }
    char *out = NULL;
    EXPECT(osdma_figure_csv(cfg, 9, &out) == OSDMA_E_INVALID_ARGUMENT && out == NULL);

    osdma_config *fig4 = NULL;
    EXPECT(osdma_config_create(&fig4) == OSDMA_OK);
    EXPECT(osdma_config_set(fig4, "combiner", "oc") == OSDMA_OK);
    EXPECT(osdma_figure_csv(fig4, 4, &out) == OSDMA_OK);
    EXPECT(osdma_warning_count() == 1 && osdma_warning(0) != NULL && osdma_warning(1) == NULL);
    osdma_string_free(out);

    EXPECT(osdma_throughput_csv(cfg, &out) == OSDMA_OK);
    osdma_string_free(out);
    EXPECT(osdma_cdf_csv(cfg, &out) == OSDMA_OK);
    osdma_string_free(out);
    EXPECT(osdma_asymptotic_csv(cfg, &out) == OSDMA_OK);
    osdma_string_free(out);
    EXPECT(osdma_scaling_csv(cfg, &out) == OSDMA_OK);
    osdma_string_free(out);
    EXPECT(osdma_plot_script(5, "fig5.csv", &out) == OSDMA_OK && strstr(out, "fig5.csv") != NULL);
    osdma_string_free(out);

    int passed = 0;
    EXPECT(osdma_run_validation(cfg, "baseline", &out, &passed) == OSDMA_OK);
    EXPECT(passed == 1 && strstr(out, "\"suite\": \"baseline\"") != NULL);
    osdma_string_free(out);
    EXPECT(osdma_run_validation(cfg, "bogus", &out, &passed) == OSDMA_E_INVALID_ARGUMENT);

    osdma_config *higher = NULL;
    EXPECT(osdma_config_create(&higher) == OSDMA_OK);
    EXPECT(osdma_config_set(higher, "trials", "10") == OSDMA_OK);
    EXPECT(osdma_config_merge(cfg, higher) == OSDMA_OK);
    EXPECT(osdma_monte_carlo_throughput(cfg, &r) == OSDMA_OK && r.trials + r.discarded_trials == 10);

    osdma_config_destroy(higher);
    osdma_config_destroy(fig4);
    osdma_config_destroy(cfg8);
    osdma_config_destroy(cfg);
    osdma_config_destroy(NULL);

    if (failures)
        fprintf(stderr, "%d failure(s)\n", failures);
    return failures ? 1 : 0;
}
