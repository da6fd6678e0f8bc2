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

#include "qgl/record.hpp"

#include <tuple>

namespace qgl {

std::string_view to_string(Convention c) noexcept { return c == Convention::q ? "q" : "q2"; }

std::optional<Convention> parse_convention(std::string_view text) noexcept
{
    if (text == "q")
        return Convention::q;
    if (text == "q2")
        return Convention::q2;
    return std::nullopt;
}

std::string_view to_string(Status s) noexcept { return s == Status::pass ? "PASS" : "FAIL"; }

std::string witness_to_string(const Witness& w)
{
    struct Visitor {
        std::string operator()(const RatFunc& f) const { return f.to_string(); }
        std::string operator()(const Rational& r) const { return to_string(r); }
        std::string operator()(const Pole& p) const { return "pole:order=" + std::to_string(p.order); }
    };
    return std::visit(Visitor{}, w);
}

VerificationRecord equality_record(std::string identity, std::map<std::string, long> params,
                                   std::optional<Convention> convention, const RatFunc& lhs,
                                   const RatFunc& rhs)
{
    VerificationRecord rec{std::move(identity), std::move(params), convention};
    RatFunc diff = lhs - rhs;
    if (!diff.is_zero()) {
        rec.status = Status::fail;
        rec.witness = std::move(diff);
    }
    return rec;
}

VerificationRecord equality_record(std::string identity, std::map<std::string, long> params,
                                   std::optional<Convention> convention, const Rational& lhs,
                                   const Rational& rhs)
{
    VerificationRecord rec{std::move(identity), std::move(params), convention};
    Rational diff = lhs - rhs;
    if (diff != 0) {
        rec.status = Status::fail;
        rec.witness = std::move(diff);
    }
    return rec;
}

bool record_less(const VerificationRecord& a, const VerificationRecord& b)
{
    auto conv_rank = [](const std::optional<Convention>& c) {
        return c ? 1 + static_cast<int>(*c) : 0;
    };
    return std::forward_as_tuple(a.identity, a.params, conv_rank(a.convention)) <
           std::forward_as_tuple(b.identity, b.params, conv_rank(b.convention));
}

} // namespace qgl
