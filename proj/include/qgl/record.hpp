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

#include "qgl/ratfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace qgl {

/// Base of the q-integer inside the exponential of the q-Genocchi generating
/// functions and of the finite alternating sum.
enum class Convention { q, q2 };

inline constexpr Convention kAllConventions[] = {Convention::q, Convention::q2};

/// Exponent b such that the bracket is [.]_{q^b}.
constexpr int base_power(Convention c) noexcept { return c == Convention::q ? 1 : 2; }

std::string_view to_string(Convention c) noexcept;
/// Accepts "q" and "q2".
std::optional<Convention> parse_convention(std::string_view text) noexcept;

enum class Status { pass, fail };

std::string_view to_string(Status s) noexcept;

/// A pole at q = 1 of the given order, standing in for a value.
struct Pole {
    unsigned order = 0;
    friend bool operator==(const Pole&, const Pole&) = default;
};

/// Exact evidence carried by a failed check.
using Witness = std::variant<RatFunc, Rational, Pole>;

std::string witness_to_string(const Witness& w);

/// Outcome of one identity check. A witness is present exactly when the
/// status is FAIL; for equality checks it is the nonzero difference of the
/// two sides.
struct VerificationRecord {
    std::string identity;
    std::map<std::string, long> params;
    std::optional<Convention> convention;
    Status status = Status::pass;
    std::optional<Witness> witness;
    /// Extra named values shown in reports (limits, sides of a comparison).
    std::map<std::string, std::string> values;

    bool passed() const noexcept { return status == Status::pass; }
};

/// Builds an equality record from lhs - rhs.
VerificationRecord equality_record(std::string identity, std::map<std::string, long> params,
                                   std::optional<Convention> convention, const RatFunc& lhs,
                                   const RatFunc& rhs);
VerificationRecord equality_record(std::string identity, std::map<std::string, long> params,
                                   std::optional<Convention> convention, const Rational& lhs,
                                   const Rational& rhs);

/// Total order used for reports: identity, then params, then convention
/// (none < q < q2).
bool record_less(const VerificationRecord& a, const VerificationRecord& b);

} // namespace qgl
