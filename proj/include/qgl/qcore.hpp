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
#include "qgl/record.hpp"

#include <variant>

namespace qgl::qcore {

/// An exact q-expression; always a canonical element of Q(x), x = q^(1/2).
using QExpr = RatFunc;

/// [k]_{q^b} = ((q^b)^k - 1) / (q^b - 1) for any integer k; b >= 1.
QExpr q_integer(long k, int base_power = 1);

/// [k/2]_{q^b} through the same quotient, for half-integer arguments
/// written as twice_k / 2. Equals q_integer(twice_k / 2, b) for even twice_k.
QExpr q_integer_half(long twice_k, int base_power = 1);

/// Gaussian binomial prod_{j=1}^{k} [n+1-j]_q / [j]_q; zero when k < 0 or k > n.
QExpr q_binomial(long n, long k);

/// f_{m,q}(n) = sum_{k=1}^{n} [k]_{q^2} [k]_q^{m-1} q^{(n-k)(m+1)/2}.
/// Requires m >= 1, n >= 0.
QExpr f_m_q(int m, int n);

/// Value at q = 1, or the order of the pole there.
using LimitValue = std::variant<Rational, Pole>;

LimitValue limit_q1(const QExpr& e);

std::string limit_to_string(const LimitValue& v);

/// sum_{k=1}^{n} q^{2n-2k} [k]_q^2 [k]_{q^2} against [n+1 choose 2]_q^2.
VerificationRecord warnaar_check(int n);

/// sum_{k=1}^{n} q^{k-1} [k]_q^2 ([(k-1)/2]_{q^2} + [(k+1)/2]_{q^2}) against
/// [n+1 choose 2]_q^2, with half-integer brackets read analytically.
VerificationRecord garrett_hummel_check(int n);

/// limit_q1(f_{m,q}(n)) against 1^m + ... + n^m.
VerificationRecord f_m_q_limit_check(int m, int n);

} // namespace qgl::qcore
