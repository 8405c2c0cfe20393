/* Copyright (C) 2026 The oredyn Authors */
/* SPDX-License-Identifier: Apache-2.0 */

#include "oredyn/oredyn.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                     \
    do {                                                                 \
        if (!(cond)) {                                                   \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                  \
        }                                                                \
    } while (0)

int main(void) {
    const char* lorenz = "{\"family\":\"monomial\",\"matrix\":[[2,1],[1,1]],\"coeffs\":[\"1\",\"1\"]}";
    const char* bad_det = "{\"family\":\"monomial\",\"matrix\":[[2,0],[0,1]]}";
    oredyn_spec* spec = NULL;
    oredyn_result* res = NULL;

    EXPECT(strlen(oredyn_version()) > 0);
    EXPECT(oredyn_command_count() == 8);
    EXPECT(strcmp(oredyn_command_name(0), "growth") == 0);
    EXPECT(oredyn_command_name(99) == NULL);

    EXPECT(oredyn_spec_parse(lorenz, strlen(lorenz), &spec) == OREDYN_OK);
    EXPECT(strcmp(oredyn_spec_describe(spec), "u -> u^2*v, v -> u*v") == 0);
    EXPECT(oredyn_run(spec, "analyze-t", NULL, &res) == OREDYN_OK);
    EXPECT(strstr(oredyn_result_json(res, 0), "\"break\":\"primitive but not locally closed\"") != NULL);
    EXPECT(strstr(oredyn_result_json(res, 1), "\n") != NULL);
    EXPECT(strstr(oredyn_result_text(res), "dm_verdict") != NULL);
    oredyn_result_free(res);

    EXPECT(oredyn_run(spec, "nonsense", NULL, &res) == OREDYN_INPUT_ERROR);
    EXPECT(res == NULL);

    oredyn_caps caps = {0, 0, 0, 1000};
    EXPECT(oredyn_run(spec, "periodic", &caps, &res) == OREDYN_RESOURCE_ERROR);
    EXPECT(strcmp(oredyn_last_error_cap(), "torsion-bound") == 0);
    oredyn_spec_free(spec);

    EXPECT(oredyn_spec_parse(bad_det, strlen(bad_det), &spec) == OREDYN_INPUT_ERROR);
    EXPECT(spec == NULL);
    EXPECT(strlen(oredyn_last_error()) > 0);

    EXPECT(oredyn_analyze(bad_det, strlen(bad_det), "growth", NULL, "bad.json", &res) == OREDYN_INPUT_ERROR);
    EXPECT(res != NULL);
    EXPECT(strstr(oredyn_result_json(res, 0), "\"source\":\"bad.json\"") != NULL);
    oredyn_result_free(res);

    EXPECT(oredyn_spec_parse(NULL, 0, &spec) == OREDYN_INVALID_ARGUMENT);

    if (failures) fprintf(stderr, "%d failures\n", failures);
    return failures ? 1 : 0;
}
