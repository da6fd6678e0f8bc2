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

#include "qgl/qgl.h"

#include "qgl/qcore.hpp"
#include "qgl/qgenocchi.hpp"
#include "qgl/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct qgl_config {
    qgl::report::RunConfig value;
};

struct qgl_report {
    qgl::report::Report value;
};

struct qgl_qexpr {
    qgl::RatFunc value;
};

namespace {

thread_local std::string g_last_error;

qgl_status fail(qgl_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

// Maps exceptions from the C++ core onto status codes.
template <class F>
qgl_status guarded(F&& body)
{
    try {
        return body();
    } catch (const qgl::report::ConfigError& e) {
        return fail(QGL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const qgl::report::IoError& e) {
        return fail(QGL_ERR_IO, e.what());
    } catch (const qgl::PoleError& e) {
        return fail(QGL_ERR_POLE, e.what());
    } catch (const qgl::DegreeLimitError& e) {
        return fail(QGL_ERR_DEGREE_LIMIT, e.what());
    } catch (const qgl::Error& e) {
        return fail(QGL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QGL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QGL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QGL_ERR_INTERNAL, "unknown error");
    }
}

char* duplicate(const std::string& text)
{
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

#define QGL_REQUIRE(cond, message)                                                                 \
    do {                                                                                           \
        if (!(cond))                                                                               \
            return fail(QGL_ERR_INVALID_ARGUMENT, message);                                        \
    } while (0)

qgl_status emit_qexpr(qgl::RatFunc value, qgl_qexpr** out)
{
    *out = new qgl_qexpr{std::move(value)};
    return QGL_OK;
}

} // namespace

extern "C" {

const char* qgl_version(void) { return QGL_VERSION; }

const char* qgl_last_error(void) { return g_last_error.c_str(); }

void qgl_string_free(char* text) { std::free(text); }

void qgl_set_max_degree(size_t cap) { qgl::set_max_degree(cap); }

size_t qgl_max_degree(void) { return qgl::max_degree(); }

qgl_status qgl_config_create(qgl_config** out)
{
    QGL_REQUIRE(out, "null output pointer");
    return guarded([&] {
        *out = new qgl_config{};
        return QGL_OK;
    });
}

void qgl_config_destroy(qgl_config* config) { delete config; }

qgl_status qgl_config_set_command(qgl_config* config, const char* command)
{
    QGL_REQUIRE(config && command, "null argument");
    const auto parsed = qgl::report::parse_command(command);
    QGL_REQUIRE(parsed, "unknown command");
    config->value.command = *parsed;
    return QGL_OK;
}

qgl_status qgl_config_set_nmax(qgl_config* config, int n_max)
{
    QGL_REQUIRE(config, "null argument");
    QGL_REQUIRE(n_max >= 1, "nmax must be at least 1");
    config->value.n_max = n_max;
    return QGL_OK;
}

qgl_status qgl_config_set_kmax(qgl_config* config, int k_max)
{
    QGL_REQUIRE(config, "null argument");
    QGL_REQUIRE(k_max >= 1, "kmax must be at least 1");
    config->value.k_max = k_max;
    return QGL_OK;
}

qgl_status qgl_config_set_conventions(qgl_config* config, const char* conventions)
{
    QGL_REQUIRE(config && conventions, "null argument");
    if (std::string_view(conventions) == "all") {
        config->value.conventions = {qgl::Convention::q, qgl::Convention::q2};
        return QGL_OK;
    }
    const auto parsed = qgl::parse_convention(conventions);
    QGL_REQUIRE(parsed, "convention must be q, q2 or all");
    config->value.conventions = {*parsed};
    return QGL_OK;
}

qgl_status qgl_config_set_q(qgl_config* config, const char* q)
{
    QGL_REQUIRE(config, "null argument");
    return guarded([&] {
        if (!q) {
            config->value.q_eval.reset();
            return QGL_OK;
        }
        const qgl::Rational value = qgl::parse_rational(q);
        QGL_REQUIRE(value > 0 && value < 1, "q must lie strictly between 0 and 1");
        config->value.q_eval = value;
        return QGL_OK;
    });
}

qgl_status qgl_config_set_format(qgl_config* config, const char* format)
{
    QGL_REQUIRE(config && format, "null argument");
    const auto parsed = qgl::report::parse_format(format);
    QGL_REQUIRE(parsed, "format must be csv or json");
    config->value.format = *parsed;
    return QGL_OK;
}

qgl_status qgl_config_set_out_path(qgl_config* config, const char* path)
{
    QGL_REQUIRE(config, "null argument");
    return guarded([&] {
        config->value.out_path = path ? path : "";
        return QGL_OK;
    });
}

qgl_status qgl_run(const qgl_config* config, qgl_report** out)
{
    QGL_REQUIRE(config && out, "null argument");
    return guarded([&] {
        *out = new qgl_report{qgl::report::run(config->value)};
        return QGL_OK;
    });
}

void qgl_report_destroy(qgl_report* report) { delete report; }

int qgl_report_hard_ok(const qgl_report* report) { return report && report->value.hard_ok() ? 1 : 0; }

int qgl_report_exit_code(const qgl_report* report)
{
    return report ? qgl::report::exit_code(report->value) : 1;
}

size_t qgl_report_record_count(const qgl_report* report)
{
    return report ? report->value.records.size() : 0;
}

size_t qgl_report_row_count(const qgl_report* report) { return report ? report->value.rows.size() : 0; }

qgl_status qgl_report_record(const qgl_report* report, size_t index, const char** identity,
                             int* passed, int* hard)
{
    QGL_REQUIRE(report, "null argument");
    QGL_REQUIRE(index < report->value.records.size(), "record index out of range");
    const auto& rec = report->value.records[index];
    if (identity)
        *identity = rec.identity.c_str();
    if (passed)
        *passed = rec.passed() ? 1 : 0;
    if (hard)
        *hard = qgl::report::is_hard(rec.identity) ? 1 : 0;
    return QGL_OK;
}

qgl_status qgl_report_render(const qgl_report* report, char** out)
{
    QGL_REQUIRE(report && out, "null argument");
    return guarded([&] {
        *out = duplicate(qgl::report::render(report->value));
        return QGL_OK;
    });
}

qgl_status qgl_report_write(const qgl_report* report)
{
    QGL_REQUIRE(report, "null argument");
    QGL_REQUIRE(!report->value.config.out_path.empty(), "no output path configured");
    return guarded([&] {
        qgl::report::write_text(report->value.config.out_path, qgl::report::render(report->value));
        return QGL_OK;
    });
}

qgl_status qgl_q_integer(long k, int base_power, qgl_qexpr** out)
{
    QGL_REQUIRE(out, "null output pointer");
    return guarded([&] { return emit_qexpr(qgl::qcore::q_integer(k, base_power), out); });
}

qgl_status qgl_q_binomial(long n, long k, qgl_qexpr** out)
{
    QGL_REQUIRE(out, "null output pointer");
    return guarded([&] { return emit_qexpr(qgl::qcore::q_binomial(n, k), out); });
}

qgl_status qgl_f_m_q(int m, int n, qgl_qexpr** out)
{
    QGL_REQUIRE(out, "null output pointer");
    return guarded([&] { return emit_qexpr(qgl::qcore::f_m_q(m, n), out); });
}

qgl_status qgl_q_genocchi(int n, int k, const char* convention, int shifted, qgl_qexpr** out)
{
    QGL_REQUIRE(out && convention, "null argument");
    const auto conv = qgl::parse_convention(convention);
    QGL_REQUIRE(conv, "convention must be q or q2");
    QGL_REQUIRE(n >= 1 && k >= 1, "need n >= 1 and k >= 1");
    return guarded([&] {
        auto value = shifted ? qgl::qgenocchi::g_shift_oracle(n, k, *conv)
                             : qgl::qgenocchi::g_oracle(n, k, *conv);
        return emit_qexpr(std::move(value.value), out);
    });
}

void qgl_qexpr_destroy(qgl_qexpr* expr) { delete expr; }

qgl_status qgl_qexpr_to_string(const qgl_qexpr* expr, char** out)
{
    QGL_REQUIRE(expr && out, "null argument");
    return guarded([&] {
        *out = duplicate(expr->value.to_string());
        return QGL_OK;
    });
}

qgl_status qgl_qexpr_eval_q(const qgl_qexpr* expr, const char* q, char** out)
{
    QGL_REQUIRE(expr && q && out, "null argument");
    return guarded([&] {
        const auto value = qgl::eval_at_q(expr->value, qgl::parse_rational(q));
        QGL_REQUIRE(value, "value at this q is irrational");
        *out = duplicate(qgl::to_string(*value));
        return QGL_OK;
    });
}

qgl_status qgl_qexpr_limit_q1(const qgl_qexpr* expr, char** value, unsigned* pole_order)
{
    QGL_REQUIRE(expr && value && pole_order, "null argument");
    return guarded([&] {
        const auto limit = qgl::qcore::limit_q1(expr->value);
        if (const auto* pole = std::get_if<qgl::Pole>(&limit)) {
            *value = nullptr;
            *pole_order = pole->order;
        } else {
            *value = duplicate(qgl::to_string(std::get<qgl::Rational>(limit)));
            *pole_order = 0;
        }
        return QGL_OK;
    });
}

} // extern "C"
