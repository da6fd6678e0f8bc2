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

// qgl: tables and identity verification for q-Genocchi numbers.
//
// Exit codes: 0 success (all hard identities pass), 1 a hard identity failed,
// 2 bad flags or configuration, 3 I/O failure, 4 internal or resource error.

#include "qgl/qgl.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct Options {
    int n_max = 6;
    int k_max = 6;
    std::string q;
    std::string convention = "all";
    std::string format = "json";
    std::string out;
};

int status_exit_code(qgl_status status)
{
    switch (status) {
    case QGL_OK:
        return 0;
    case QGL_ERR_INVALID_ARGUMENT:
        return kExitUsage;
    case QGL_ERR_IO:
        return kExitIo;
    default:
        return kExitInternal;
    }
}

int report_error(qgl_status status)
{
    std::cerr << "qgl: " << qgl_last_error() << "\n";
    return status_exit_code(status);
}

void add_common_options(CLI::App* cmd, Options& opts)
{
    cmd->add_option("--nmax", opts.n_max, "Largest n (and m) in every grid")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", opts.k_max, "Largest k in every grid")->check(CLI::PositiveNumber);
    cmd->add_option("--q", opts.q, "Rational sample point p/q in (0,1)");
    cmd->add_option("--convention", opts.convention, "Exponential bracket base")
        ->check(CLI::IsMember({"q", "q2", "all"}));
    cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out, "Output file (default: standard output)");
}

// QGL_MAX_DEGREE caps polynomial degrees; returns false on a malformed value.
bool apply_degree_cap()
{
    const char* raw = std::getenv("QGL_MAX_DEGREE");
    if (!raw || !*raw)
        return true;
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(raw, &end, 10);
    if (*end != '\0' || cap == 0 || raw[0] == '-')
        return false;
    qgl_set_max_degree(static_cast<size_t>(cap));
    return true;
}

using ConfigPtr = std::unique_ptr<qgl_config, decltype(&qgl_config_destroy)>;
using ReportPtr = std::unique_ptr<qgl_report, decltype(&qgl_report_destroy)>;

int run(const std::string& command, const Options& opts)
{
    qgl_config* raw_config = nullptr;
    if (auto s = qgl_config_create(&raw_config); s != QGL_OK)
        return report_error(s);
    ConfigPtr config(raw_config, &qgl_config_destroy);

    qgl_status s = qgl_config_set_command(config.get(), command.c_str());
    if (s == QGL_OK)
        s = qgl_config_set_nmax(config.get(), opts.n_max);
    if (s == QGL_OK)
        s = qgl_config_set_kmax(config.get(), opts.k_max);
    if (s == QGL_OK)
        s = qgl_config_set_conventions(config.get(), opts.convention.c_str());
    if (s == QGL_OK)
        s = qgl_config_set_format(config.get(), opts.format.c_str());
    if (s == QGL_OK && !opts.q.empty())
        s = qgl_config_set_q(config.get(), opts.q.c_str());
    if (s == QGL_OK)
        s = qgl_config_set_out_path(config.get(), opts.out.c_str());
    if (s != QGL_OK)
        return report_error(s);

    qgl_report* raw_report = nullptr;
    if (s = qgl_run(config.get(), &raw_report); s != QGL_OK)
        return report_error(s);
    ReportPtr report(raw_report, &qgl_report_destroy);

    if (opts.out.empty()) {
        char* text = nullptr;
        if (s = qgl_report_render(report.get(), &text); s != QGL_OK)
            return report_error(s);
        std::fputs(text, stdout);
        qgl_string_free(text);
        if (std::fflush(stdout) != 0) {
            std::cerr << "qgl: failed writing standard output\n";
            return kExitIo;
        }
    } else if (s = qgl_report_write(report.get()); s != QGL_OK) {
        return report_error(s);
    }

    if (command == "verify") {
        const size_t count = qgl_report_record_count(report.get());
        size_t hard_failures = 0;
        for (size_t i = 0; i < count; ++i) {
            int passed = 0;
            int hard = 0;
            qgl_report_record(report.get(), i, nullptr, &passed, &hard);
            if (hard && !passed)
                ++hard_failures;
        }
        std::cerr << "qgl verify: " << count << " records, " << hard_failures
                  << " hard failures\n";
    }
    return qgl_report_exit_code(report.get());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact q-Genocchi tables and identity verification"};
    app.set_version_flag("--version", std::string("qgl ") + qgl_version());
    app.require_subcommand(1);

    Options opts;
    const char* commands[][2] = {
        {"numbers", "Bernoulli, Euler, Genocchi and order-r Genocchi tables"},
        {"qtable", "q-integers, q-binomials and f_{m,q}(n), optionally evaluated at --q"},
        {"verify", "Run every identity grid and report PASS/FAIL with exact witnesses"},
        {"limits", "q -> 1 limits with pole flags"},
    };
    for (const auto& [name, help] : commands)
        add_common_options(app.add_subcommand(name, help), opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (!apply_degree_cap()) {
        std::cerr << "qgl: QGL_MAX_DEGREE must be a positive integer\n";
        return kExitUsage;
    }
    return run(app.get_subcommands().front()->get_name(), opts);
}
