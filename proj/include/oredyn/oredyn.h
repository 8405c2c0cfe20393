/* Copyright (C) 2026 The oredyn Authors */
/* SPDX-License-Identifier: Apache-2.0 */

#ifndef OREDYN_OREDYN_H
#define OREDYN_OREDYN_H

#include <stddef.h>
#include <stdint.h>

#if defined(OREDYN_BUILDING)
#define OREDYN_API __attribute__((visibility("default")))
#else
#define OREDYN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oredyn_status {
    OREDYN_OK = 0,
    OREDYN_INPUT_ERROR = 1,
    OREDYN_RESOURCE_ERROR = 2,
    OREDYN_INVALID_ARGUMENT = 3,
    OREDYN_INTERNAL_ERROR = 4
} oredyn_status;

typedef struct oredyn_spec oredyn_spec;
typedef struct oredyn_result oredyn_result;

/* Zero means "not set": the input's options, then the defaults apply. */
typedef struct oredyn_caps {
    int32_t depth;
    int32_t degree_bound;
    int64_t period_cap;
    int64_t torsion_bound;
} oredyn_caps;

OREDYN_API const char* oredyn_version(void);

/* Message and cap name of the last failure on this thread ("" if none). */
OREDYN_API const char* oredyn_last_error(void);
OREDYN_API const char* oredyn_last_error_cap(void);

OREDYN_API size_t oredyn_command_count(void);
OREDYN_API const char* oredyn_command_name(size_t index);

OREDYN_API oredyn_status oredyn_spec_parse(const char* text, size_t length, oredyn_spec** out);
OREDYN_API void oredyn_spec_free(oredyn_spec* spec);
/* Valid until the spec is freed. */
OREDYN_API const char* oredyn_spec_describe(const oredyn_spec* spec);

OREDYN_API oredyn_status oredyn_run(const oredyn_spec* spec, const char* command, const oredyn_caps* caps,
                                    oredyn_result** out);

/* Parses and runs in one call. On failure *out holds an error document
   naming source, and the status says which kind. */
OREDYN_API oredyn_status oredyn_analyze(const char* text, size_t length, const char* command,
                                        const oredyn_caps* caps, const char* source, oredyn_result** out);

/* Strings are owned by the result. */
OREDYN_API const char* oredyn_result_json(oredyn_result* result, int pretty);
OREDYN_API const char* oredyn_result_text(oredyn_result* result);
OREDYN_API void oredyn_result_free(oredyn_result* result);

#ifdef __cplusplus
}
#endif

#endif
