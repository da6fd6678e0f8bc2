/*
 * Copyright 2026 The qgl Authors
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
 * C interface to libqgl.
 *
 * Every fallible call returns a qgl_status. On failure a message describing
 * the most recent error on the calling thread is available from
 * qgl_last_error(). Strings returned through char** out-parameters are owned
 * by the caller and released with qgl_string_free(). Handles are released with
 * their matching *_destroy function; passing NULL to a destroy function is a
 * no-op.
 */

#ifndef QGL_H
#define QGL_H

#include <stddef.h>

#if defined(QGL_BUILDING_LIBRARY)
#define QGL_API __attribute__((visibility("default")))
#else
#define QGL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgl_status {
    QGL_OK = 0,
    QGL_ERR_INVALID_ARGUMENT = 1,
    QGL_ERR_IO = 2,
    QGL_ERR_POLE = 3,
    QGL_ERR_DEGREE_LIMIT = 4,
    QGL_ERR_INTERNAL = 5
} qgl_status;

typedef struct qgl_config qgl_config;
typedef struct qgl_report qgl_report;
typedef struct qgl_qexpr qgl_qexpr;

QGL_API const char* qgl_version(void);
QGL_API const char* qgl_last_error(void);
QGL_API void qgl_string_free(char* text);

/* Polynomial degree cap shared by the whole process (default 10000). */
QGL_API void qgl_set_max_degree(size_t cap);
QGL_API size_t qgl_max_degree(void);

/* ---- run configuration ------------------------------------------------- */

/* Defaults: command "verify", nmax 6, kmax 6, conventions "all", format "json",
 * no q, output to memory only. */
QGL_API qgl_status qgl_config_create(qgl_config** out);
QGL_API void qgl_config_destroy(qgl_config* config);

/* "numbers", "qtable", "verify" or "limits" */
QGL_API qgl_status qgl_config_set_command(qgl_config* config, const char* command);
QGL_API qgl_status qgl_config_set_nmax(qgl_config* config, int n_max);
QGL_API qgl_status qgl_config_set_kmax(qgl_config* config, int k_max);
/* "q", "q2" or "all" */
QGL_API qgl_status qgl_config_set_conventions(qgl_config* config, const char* conventions);
/* "p/q" strictly between 0 and 1; NULL clears. */
QGL_API qgl_status qgl_config_set_q(qgl_config* config, const char* q);
/* "csv" or "json" */
QGL_API qgl_status qgl_config_set_format(qgl_config* config, const char* format);
/* NULL or "" clears. */
QGL_API qgl_status qgl_config_set_out_path(qgl_config* config, const char* path);

/* ---- reports ------------------------------------------------------------ */

QGL_API qgl_status qgl_run(const qgl_config* config, qgl_report** out);
QGL_API void qgl_report_destroy(qgl_report* report);

/* 1 when every hard identity passed, else 0. */
QGL_API int qgl_report_hard_ok(const qgl_report* report);
/* 0 when hard_ok, 1 otherwise. */
QGL_API int qgl_report_exit_code(const qgl_report* report);
QGL_API size_t qgl_report_record_count(const qgl_report* report);
QGL_API size_t qgl_report_row_count(const qgl_report* report);
/* identity stays valid while the report is alive. */
QGL_API qgl_status qgl_report_record(const qgl_report* report, size_t index,
                                     const char** identity, int* passed, int* hard);
/* Report text in the configured format. */
QGL_API qgl_status qgl_report_render(const qgl_report* report, char** out);
/* Writes the rendered report to the configured out path. */
QGL_API qgl_status qgl_report_write(const qgl_report* report);

/* ---- q-expressions -------------------------------------------------------- */

QGL_API qgl_status qgl_q_integer(long k, int base_power, qgl_qexpr** out);
QGL_API qgl_status qgl_q_binomial(long n, long k, qgl_qexpr** out);
QGL_API qgl_status qgl_f_m_q(int m, int n, qgl_qexpr** out);
/* G_{n,k,q} (shifted = 0) or G_{n,k,q}(k) (shifted = 1); convention "q" or "q2". */
QGL_API qgl_status qgl_q_genocchi(int n, int k, const char* convention, int shifted,
                                  qgl_qexpr** out);
QGL_API void qgl_qexpr_destroy(qgl_qexpr* expr);

/* "num=[...];den=[...]" in x = q^(1/2). */
QGL_API qgl_status qgl_qexpr_to_string(const qgl_qexpr* expr, char** out);
/* Exact value at q ("p/q"); QGL_ERR_POLE at a pole, QGL_ERR_INVALID_ARGUMENT
 * when the value would be irrational. */
QGL_API qgl_status qgl_qexpr_eval_q(const qgl_qexpr* expr, const char* q, char** out);
/* Limit q -> 1. On a pole, *value is NULL and *pole_order > 0. */
QGL_API qgl_status qgl_qexpr_limit_q1(const qgl_qexpr* expr, char** value, unsigned* pole_order);

#ifdef __cplusplus
}
#endif

#endif /* QGL_H */
