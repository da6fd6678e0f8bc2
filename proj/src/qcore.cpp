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

#include "qgl/qcore.hpp"

#include "qgl/classical.hpp"

namespace qgl::qcore {

QExpr q_integer(long k, int base_power)
{
    if (base_power < 1)
        throw Error("q_integer: base power must be positive");
    if (k < 0)
        // [-m]_Q = -Q^{-m} [m]_Q
        return -(monomial_q(2L * base_power * k) * q_integer(-k, base_power));
    std::vector<Rational> coeffs(k == 0 ? 0 : static_cast<std::size_t>(2L * base_power * (k - 1) + 1));
    for (long i = 0; i < k; ++i)
        coeffs[static_cast<std::size_t>(2L * base_power * i)] = 1;
    return RatFunc(Poly(std::move(coeffs)));
}

QExpr q_integer_half(long twice_k, int base_power)
{
    if (base_power < 1)
        throw Error("q_integer_half: base power must be positive");
    if (twice_k % 2 == 0)
        return q_integer(twice_k / 2, base_power);
    const RatFunc top = monomial_q(base_power * twice_k) - RatFunc(1);
    const RatFunc bottom = RatFunc(Poly::monomial(static_cast<std::size_t>(2 * base_power))) - RatFunc(1);
    return top / bottom;
}

QExpr q_binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return {};
    QExpr out(1);
    for (long j = 1; j <= k; ++j)
        out = out * q_integer(n + 1 - j) / q_integer(j);
    return out;
}

QExpr f_m_q(int m, int n)
{
    if (m < 1 || n < 0)
        throw Error("f_m_q: need m >= 1, n >= 0");
    QExpr acc;
    for (int k = 1; k <= n; ++k)
        acc += q_integer(k, 2) * pow(q_integer(k), m - 1) *
               monomial_q(static_cast<long>(n - k) * (m + 1));
    return acc;
}

LimitValue limit_q1(const QExpr& e)
{
    const Rational one = 1;
    if (const unsigned order = e.pole_order(one); order > 0)
        return Pole{order};
    return e(one);
}

std::string limit_to_string(const LimitValue& v)
{
    if (const auto* r = std::get_if<Rational>(&v))
        return to_string(*r);
    return "pole:order=" + std::to_string(std::get<Pole>(v).order);
}

VerificationRecord warnaar_check(int n)
{
    if (n < 1)
        throw Error("warnaar_check: n must be positive");
    QExpr lhs;
    for (int k = 1; k <= n; ++k)
        lhs += monomial_q(4L * (n - k)) * pow(q_integer(k), 2) * q_integer(k, 2);
    return equality_record("warnaar", {{"n", n}}, std::nullopt, lhs, pow(q_binomial(n + 1, 2), 2));
}

VerificationRecord garrett_hummel_check(int n)
{
    if (n < 1)
        throw Error("garrett_hummel_check: n must be positive");
    QExpr lhs;
    for (int k = 1; k <= n; ++k)
        lhs += monomial_q(2L * (k - 1)) * pow(q_integer(k), 2) *
               (q_integer_half(k - 1, 2) + q_integer_half(k + 1, 2));
    return equality_record("garrett_hummel", {{"n", n}}, std::nullopt, lhs,
                           pow(q_binomial(n + 1, 2), 2));
}

VerificationRecord f_m_q_limit_check(int m, int n)
{
    const LimitValue lim = limit_q1(f_m_q(m, n));
    const Rational expected = classical::power_sum_bruteforce(m, n);
    VerificationRecord rec{"fmq_limit", {{"m", m}, {"n", n}}, std::nullopt};
    if (const auto* value = std::get_if<Rational>(&lim)) {
        rec = equality_record("fmq_limit", {{"m", m}, {"n", n}}, std::nullopt, *value, expected);
    } else {
        rec.status = Status::fail;
        rec.witness = std::get<Pole>(lim);
    }
    rec.values = {{"limit", limit_to_string(lim)}, {"power_sum", to_string(expected)}};
    return rec;
}

} // namespace qgl::qcore
