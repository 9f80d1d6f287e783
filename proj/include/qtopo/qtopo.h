/* Copyright 2026 The qtopo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqtopo.
 *
 * Questions are passed around as opaque handles created from the JSON wire
 * format. Every call returns a qtopo_status; on failure a description is
 * available from qtopo_last_error() on the calling thread until the next
 * call. Strings handed out through `char** out` parameters are owned by the
 * caller and must be released with qtopo_free_string().
 *
 * Streaming calls (enumerate, definite, parents) hand one question document
 * at a time to a sink. A sink returns 0 to continue and non-zero to stop.
 */

#ifndef QTOPO_QTOPO_H_
#define QTOPO_QTOPO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QTOPO_BUILDING_LIBRARY)
#define QTOPO_API __declspec(dllexport)
#else
#define QTOPO_API __declspec(dllimport)
#endif
#else
#define QTOPO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtopo_status {
  QTOPO_OK = 0,
  /* Input is well formed but not a valid question (axiom violation). */
  QTOPO_ERR_DOMAIN = 1,
  /* Document could not be parsed or its labels are inconsistent. */
  QTOPO_ERR_PARSE = 2,
  /* Bad argument: null pointer, unknown point, size limit, label mismatch. */
  QTOPO_ERR_ARGUMENT = 3,
  QTOPO_ERR_INTERNAL = 4
} qtopo_status;

typedef struct qtopo_question qtopo_question;

typedef int (*qtopo_sink)(const char* document, void* user);

QTOPO_API const char* qtopo_last_error(void);
QTOPO_API void qtopo_free_string(char* text);

QTOPO_API qtopo_status qtopo_question_parse(const char* text, qtopo_question** out);
QTOPO_API void qtopo_question_free(qtopo_question* question);
/* Canonical form of the document as parsed (no axiom check). */
QTOPO_API qtopo_status qtopo_question_serialize(const qtopo_question* question,
                                                char** out);

/* `*valid` receives 1 or 0; `report` receives the violation report JSON. */
QTOPO_API qtopo_status qtopo_validate(const qtopo_question* question, int* valid,
                                      char** report);

/* The remaining question calls require a valid topology and fail with
 * QTOPO_ERR_DOMAIN otherwise. */
QTOPO_API qtopo_status qtopo_classify(const qtopo_question* question, const char* point,
                                      char** out);
QTOPO_API qtopo_status qtopo_resolve(const qtopo_question* question, const char* point,
                                     char** out);
QTOPO_API qtopo_status qtopo_sequence(const qtopo_question* question,
                                      const char* const* points, size_t count,
                                      char** out);
QTOPO_API qtopo_status qtopo_negate(const qtopo_question* question, char** out);
QTOPO_API qtopo_status qtopo_clopen(const qtopo_question* question, char** out);
QTOPO_API qtopo_status qtopo_agree(const qtopo_question* question, char** out);
QTOPO_API qtopo_status qtopo_efficiency(const qtopo_question* question, const char* point,
                                        char** out);
/* Works on the raw family; no topology required. */
QTOPO_API qtopo_status qtopo_sigma(const qtopo_question* question, char** out);

/* `limit` < 0 means unlimited. */
QTOPO_API qtopo_status qtopo_parents(const qtopo_question* question,
                                     const char* const* superset, size_t count,
                                     int64_t limit, unsigned workers, qtopo_sink sink,
                                     void* user);

/* Labels may be NULL, in which case the points are named x1..xn. */
QTOPO_API qtopo_status qtopo_enumerate(const char* const* labels, size_t n,
                                       unsigned workers, qtopo_sink sink, void* user);
QTOPO_API qtopo_status qtopo_count(size_t n, unsigned workers, uint64_t* count);
QTOPO_API qtopo_status qtopo_count_json(size_t n, unsigned workers, char** out);
QTOPO_API qtopo_status qtopo_census(const char* const* labels, size_t n, unsigned workers,
                                    char** out);
QTOPO_API qtopo_status qtopo_definite(const char* const* labels, size_t n,
                                      const char* point, unsigned workers,
                                      qtopo_sink sink, void* user);

#ifdef __cplusplus
}
#endif

#endif /* QTOPO_QTOPO_H_ */
