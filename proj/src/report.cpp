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

#include "qgl/report.hpp"

#include "qgl/classical.hpp"
#include "qgl/qcore.hpp"
#include "qgl/qgenocchi.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace qgl::report {

namespace {

using Json = nlohmann::ordered_json;
using Task = std::function<std::vector<VerificationRecord>()>;

#ifndef QGL_VERSION
#define QGL_VERSION "0.0.0"
#endif

constexpr std::string_view kToolVersion = "qgl " QGL_VERSION;

// Runs every task on a small worker pool. Output order is irrelevant: the
// caller sorts.
std::vector<VerificationRecord> run_tasks(const std::vector<Task>& tasks)
{
    std::vector<std::vector<VerificationRecord>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w)
            pool.emplace_back(worker);
        worker();
    }
    if (failure)
        std::rethrow_exception(failure);
    std::vector<VerificationRecord> out;
    for (auto& chunk : results)
        for (auto& rec : chunk)
            out.push_back(std::move(rec));
    return out;
}

Task single(std::function<VerificationRecord()> f)
{
    return [f = std::move(f)] { return std::vector<VerificationRecord>{f()}; };
}

std::string params_to_string(const std::map<std::string, long>& params)
{
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty())
            out += ';';
        out += key + "=" + std::to_string(value);
    }
    return out;
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

Json params_json(const std::map<std::string, long>& params)
{
    Json out = Json::object();
    for (const auto& [key, value] : params)
        out[key] = value;
    return out;
}

Json convention_json(const std::optional<Convention>& c)
{
    return c ? Json(std::string(to_string(*c))) : Json(nullptr);
}

Json config_json(const RunConfig& config)
{
    Json out = Json::object();
    out["command"] = std::string(to_string(config.command));
    out["nmax"] = config.n_max;
    out["kmax"] = config.k_max;
    Json conventions = Json::array();
    for (auto c : config.conventions)
        conventions.push_back(std::string(to_string(c)));
    out["conventions"] = conventions;
    out["q"] = config.q_eval ? Json(qgl::to_string(*config.q_eval)) : Json(nullptr);
    out["format"] = std::string(to_string(config.format));
    return out;
}

Json record_json(const VerificationRecord& rec)
{
    Json out = Json::object();
    out["identity"] = rec.identity;
    out["params"] = params_json(rec.params);
    out["convention"] = convention_json(rec.convention);
    out["status"] = std::string(to_string(rec.status));
    if (rec.witness)
        out["witness"] = witness_to_string(*rec.witness);
    if (!rec.values.empty()) {
        Json values = Json::object();
        for (const auto& [key, value] : rec.values)
            values[key] = value;
        out["values"] = values;
    }
    return out;
}

Json row_json(const TableRow& row)
{
    Json out = Json::object();
    out["table"] = row.table;
    out["params"] = params_json(row.params);
    if (row.convention)
        out["convention"] = std::string(to_string(*row.convention));
    out["value"] = row.value;
    if (row.evaluated)
        out["value_at_q"] = *row.evaluated;
    return out;
}

Json summary_json(const Report& report)
{
    struct Counts {
        long pass = 0;
        long fail = 0;
    };
    std::map<std::string, Counts> totals;
    std::map<std::string, std::map<std::string, Counts>> by_convention;
    for (const auto& rec : report.records) {
        auto& t = totals[rec.identity];
        (rec.passed() ? t.pass : t.fail)++;
        if (rec.convention) {
            auto& c = by_convention[rec.identity][std::string(to_string(*rec.convention))];
            (rec.passed() ? c.pass : c.fail)++;
        }
    }
    Json identities = Json::object();
    for (const auto& [id, t] : totals) {
        Json entry = Json::object();
        entry["hard"] = is_hard(id);
        entry["pass"] = t.pass;
        entry["fail"] = t.fail;
        if (auto it = by_convention.find(id); it != by_convention.end()) {
            Json per = Json::object();
            Json all_pass = Json::array();
            for (const auto& [conv, c] : it->second) {
                per[conv] = Json{{"pass", c.pass}, {"fail", c.fail}};
                if (c.fail == 0)
                    all_pass.push_back(conv);
            }
            entry["by_convention"] = per;
            entry["all_pass_conventions"] = all_pass;
        }
        identities[id] = entry;
    }
    Json out = Json::object();
    out["hard_ok"] = report.hard_ok();
    out["identities"] = identities;
    return out;
}

std::string rational_or_flag(const qgl::RatFunc& f, const Rational& q)
{
    try {
        if (auto v = eval_at_q(f, q))
            return qgl::to_string(*v);
        return "irrational";
    } catch (const PoleError&) {
        return "pole";
    }
}

std::vector<TableRow> number_rows(const RunConfig& config)
{
    using namespace classical;
    std::vector<NumberTable> tables{bernoulli(config.n_max), euler_numbers(config.n_max),
                                    genocchi(config.n_max)};
    for (int r = 1; r <= 3; ++r)
        tables.push_back(order_r_genocchi(r, config.n_max));
    std::vector<TableRow> rows;
    for (const auto& table : tables)
        for (std::size_t n = 0; n < table.values.size(); ++n)
            rows.push_back({table.label(), {{"n", static_cast<long>(n)}}, std::nullopt,
                            qgl::to_string(table.values[n]), std::nullopt});
    return rows;
}

std::vector<TableRow> qtable_rows(const RunConfig& config)
{
    std::vector<TableRow> rows;
    auto add = [&](std::string table, std::map<std::string, long> params, const RatFunc& f) {
        std::optional<std::string> at_q;
        if (config.q_eval)
            at_q = rational_or_flag(f, *config.q_eval);
        rows.push_back({std::move(table), std::move(params), std::nullopt, f.to_string(), at_q});
    };
    for (int k = 0; k <= config.n_max; ++k)
        add("q_integer", {{"k", k}}, qcore::q_integer(k));
    for (int n = 0; n <= config.n_max; ++n)
        for (int k = 0; k <= n; ++k)
            add("q_binomial", {{"k", k}, {"n", n}}, qcore::q_binomial(n, k));
    for (int m = 1; m <= config.k_max; ++m)
        for (int n = 0; n <= config.n_max; ++n)
            add("f_m_q", {{"m", m}, {"n", n}}, qcore::f_m_q(m, n));
    return rows;
}

std::vector<TableRow> limit_rows(const RunConfig& config)
{
    std::vector<TableRow> rows;
    auto add = [&](std::string table, std::map<std::string, long> params,
                   std::optional<Convention> conv, const RatFunc& f) {
        rows.push_back({std::move(table), std::move(params), conv,
                        qcore::limit_to_string(qcore::limit_q1(f)), std::nullopt});
    };
    for (int k = 1; k <= config.n_max; ++k)
        add("q_integer", {{"k", k}}, std::nullopt, qcore::q_integer(k));
    for (int n = 0; n <= config.n_max; ++n)
        for (int k = 0; k <= n; ++k)
            add("q_binomial", {{"k", k}, {"n", n}}, std::nullopt, qcore::q_binomial(n, k));
    for (int m = 1; m <= config.k_max; ++m)
        for (int n = 0; n <= config.n_max; ++n)
            add("f_m_q", {{"m", m}, {"n", n}}, std::nullopt, qcore::f_m_q(m, n));
    for (int n = 1; n <= config.n_max; ++n) {
        for (int k = 1; k <= config.k_max; ++k) {
            add("theorem1_closed", {{"k", k}, {"n", n}}, std::nullopt,
                qgenocchi::theorem1_closed(n, k).value);
            add("theorem2_closed", {{"k", k}, {"n", n}}, std::nullopt,
                qgenocchi::theorem2_closed(n, k).value);
            for (auto conv : config.conventions) {
                add("g_oracle", {{"k", k}, {"n", n}}, conv, qgenocchi::g_oracle(n, k, conv).value);
                add("g_shift_oracle", {{"k", k}, {"n", n}}, conv,
                    qgenocchi::g_shift_oracle(n, k, conv).value);
            }
        }
    }
    return rows;
}

} // namespace

std::string_view to_string(Command c) noexcept
{
    switch (c) {
    case Command::numbers:
        return "numbers";
    case Command::qtable:
        return "qtable";
    case Command::verify:
        return "verify";
    case Command::limits:
        return "limits";
    }
    return "?";
}

std::optional<Command> parse_command(std::string_view text) noexcept
{
    for (auto c : {Command::numbers, Command::qtable, Command::verify, Command::limits})
        if (to_string(c) == text)
            return c;
    return std::nullopt;
}

std::string_view to_string(Format f) noexcept { return f == Format::csv ? "csv" : "json"; }

std::optional<Format> parse_format(std::string_view text) noexcept
{
    if (text == "csv")
        return Format::csv;
    if (text == "json")
        return Format::json;
    return std::nullopt;
}

void validate(const RunConfig& config)
{
    if (config.n_max < 1)
        throw ConfigError("nmax must be at least 1");
    if (config.k_max < 1)
        throw ConfigError("kmax must be at least 1");
    if (config.conventions.empty())
        throw ConfigError("at least one convention is required");
    if (config.q_eval && (*config.q_eval <= 0 || *config.q_eval >= 1))
        throw ConfigError("q must lie strictly between 0 and 1");
}

bool is_hard(std::string_view identity) noexcept
{
    for (const auto& policy : kIdentityPolicies)
        if (policy.identity == identity)
            return policy.hard;
    return false;
}

bool Report::hard_ok() const
{
    return std::all_of(records.begin(), records.end(),
                       [](const auto& r) { return r.passed() || !is_hard(r.identity); });
}

std::vector<VerificationRecord> verification_grid(const RunConfig& config)
{
    validate(config);
    const int n_max = config.n_max;
    const int k_max = config.k_max;
    std::vector<Task> tasks;

    for (int m = 1; m <= n_max; ++m)
        tasks.push_back(single([m] { return classical::genocchi_relations_check(m); }));
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k)
            tasks.push_back(single([n, k] { return classical::faulhaber_check(n, k); }));
    for (int k = 1; k <= k_max; ++k) {
        for (int n = 2; n <= n_max; ++n) {
            tasks.push_back(single([k, n] { return classical::alt_power_sum_check(k, n); }));
            for (auto reading : classical::kEq4Readings)
                tasks.push_back(single([k, n, reading] { return classical::eq4_check(k, n, reading); }));
        }
    }
    for (int n = 1; n <= n_max; ++n) {
        tasks.push_back(single([n] { return qcore::warnaar_check(n); }));
        tasks.push_back(single([n] { return qcore::garrett_hummel_check(n); }));
    }
    for (int m = 1; m <= k_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            tasks.push_back(single([m, n] { return qcore::f_m_q_limit_check(m, n); }));
    for (auto conv : config.conventions) {
        for (int n = 1; n <= n_max; ++n) {
            for (int k = 1; k <= k_max; ++k) {
                tasks.push_back(single([=] { return qgenocchi::verify_theorem1(n, k, conv); }));
                tasks.push_back(single([=] { return qgenocchi::verify_theorem2(n, k, conv); }));
                tasks.push_back(single([=] { return qgenocchi::verify_theorem4(n, k, conv); }));
                tasks.push_back(single([=] { return qgenocchi::shift_law_check(n, k, conv); }));
                tasks.push_back([=] {
                    auto r = qgenocchi::remark3_check(n, k, conv);
                    return std::vector<VerificationRecord>{std::move(r.claim1), std::move(r.claim2)};
                });
            }
        }
    }

    auto records = run_tasks(tasks);
    std::sort(records.begin(), records.end(), record_less);
    return records;
}

Report run(const RunConfig& config)
{
    validate(config);
    Report report{std::string(kToolVersion), config, {}, {}};
    switch (config.command) {
    case Command::numbers:
        report.rows = number_rows(config);
        break;
    case Command::qtable:
        report.rows = qtable_rows(config);
        break;
    case Command::limits:
        report.rows = limit_rows(config);
        break;
    case Command::verify:
        report.records = verification_grid(config);
        break;
    }
    return report;
}

std::string render_json(const Report& report)
{
    Json out = Json::object();
    out["version"] = report.tool_version;
    out["config"] = config_json(report.config);
    Json records = Json::array();
    for (const auto& rec : report.records)
        records.push_back(record_json(rec));
    out["records"] = records;
    Json rows = Json::array();
    for (const auto& row : report.rows)
        rows.push_back(row_json(row));
    out["rows"] = rows;
    out["summary"] = summary_json(report);
    return out.dump(2) + "\n";
}

std::string render_csv(const Report& report)
{
    std::ostringstream out;
    switch (report.config.command) {
    case Command::numbers:
        out << "table,n,value\n";
        for (const auto& row : report.rows)
            out << row.table << ',' << row.params.at("n") << ',' << row.value << '\n';
        break;
    case Command::qtable:
    case Command::limits:
        out << "table,params,convention,value";
        if (report.config.command == Command::qtable && report.config.q_eval)
            out << ",value_at_q";
        out << '\n';
        for (const auto& row : report.rows) {
            out << row.table << ',' << params_to_string(row.params) << ','
                << (row.convention ? to_string(*row.convention) : "") << ','
                << csv_field(row.value);
            if (row.evaluated)
                out << ',' << *row.evaluated;
            out << '\n';
        }
        break;
    case Command::verify:
        out << "identity,params,convention,status,witness\n";
        for (const auto& rec : report.records)
            out << rec.identity << ',' << params_to_string(rec.params) << ','
                << (rec.convention ? to_string(*rec.convention) : "") << ','
                << to_string(rec.status) << ','
                << (rec.witness ? csv_field(witness_to_string(*rec.witness)) : "") << '\n';
        break;
    }
    return out.str();
}

std::string render(const Report& report)
{
    return report.config.format == Format::json ? render_json(report) : render_csv(report);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + path + "' for writing");
    file << text;
    file.flush();
    if (!file)
        throw IoError("failed writing '" + path + "'");
}

int exit_code(const Report& report) { return report.hard_ok() ? 0 : 1; }

} // namespace qgl::report
