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

#pragma once

#include "qgl/record.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgl::report {

/// Invalid run configuration (exit code 2 at the CLI).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Report could not be written (exit code 3 at the CLI).
class IoError : public Error {
public:
    using Error::Error;
};

enum class Command { numbers, qtable, verify, limits };
enum class Format { csv, json };

std::string_view to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view text) noexcept;
std::string_view to_string(Format f) noexcept;
std::optional<Format> parse_format(std::string_view text) noexcept;

struct RunConfig {
    Command command = Command::verify;
    int n_max = 6;
    int k_max = 6;
    std::vector<Convention> conventions{Convention::q, Convention::q2};
    std::optional<Rational> q_eval;
    Format format = Format::json;
    /// Empty means standard output. Not echoed in reports.
    std::string out_path;
};

/// Throws ConfigError unless n_max, k_max >= 1, conventions is nonempty and
/// q_eval (when set) lies strictly between 0 and 1.
void validate(const RunConfig& config);

/// Hard identities decide the exit code; report-only ones never do.
struct IdentityPolicy {
    std::string_view identity;
    bool hard;
};

inline constexpr IdentityPolicy kIdentityPolicies[] = {
    {"euler_alt", true},
    {"faulhaber", true},
    {"fmq_limit", true},
    {"garrett_hummel", true},
    {"genocchi_relations", true},
    {"shift_law", true},
    {"theorem4", true},
    {"warnaar", true},
    {"eq4_as_printed", false},
    {"eq4_swapped_target", false},
    {"eq4_swapped_target_upper_n_minus_1", false},
    {"eq4_upper_n_minus_1", false},
    {"remark3_claim1", false},
    {"remark3_claim2", false},
    {"theorem1", false},
    {"theorem2", false},
    {"theorem4_mixed", false},
};

/// Unknown identities are treated as report-only.
bool is_hard(std::string_view identity) noexcept;

/// One row of a value table (numbers, qtable, limits).
struct TableRow {
    std::string table;
    std::map<std::string, long> params;
    std::optional<Convention> convention;
    std::string value;
    /// Optional second column: value at q_eval for qtable.
    std::optional<std::string> evaluated;
};

struct Report {
    std::string tool_version;
    RunConfig config;
    std::vector<VerificationRecord> records; ///< sorted with record_less
    std::vector<TableRow> rows;

    /// True when every record of a hard identity passed.
    bool hard_ok() const;
};

/// Computes the report for a validated configuration. Deterministic.
Report run(const RunConfig& config);

/// All verification records for the grid n <= n_max, k <= k_max, sorted.
std::vector<VerificationRecord> verification_grid(const RunConfig& config);

std::string render_json(const Report& report);
std::string render_csv(const Report& report);
std::string render(const Report& report);

/// Writes text to path. Throws IoError on failure.
void write_text(const std::string& path, const std::string& text);

/// 0 when hard_ok(), otherwise 1.
int exit_code(const Report& report);

} // namespace qgl::report
