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

// Classical Bernoulli, Euler and Genocchi numbers, all read off exact
// exponential generating functions, plus power sums and alternating power
// sums with brute-force counterparts.

#include "qgl/rational.hpp"
#include "qgl/record.hpp"

#include <string>
#include <vector>

namespace qgl::classical {

enum class NumberKind { bernoulli, euler, genocchi, genocchi_order_r };

/// values[m] is m! times the t^m coefficient of the defining generating function.
struct NumberTable {
    NumberKind kind = NumberKind::bernoulli;
    int order = 0; ///< r for genocchi_order_r, otherwise 0
    std::vector<Rational> values;

    /// Short label used in reports: "B", "E", "G", "G(r)".
    std::string label() const;
};

/// B_0..B_nmax from t/(e^t - 1), so B_1 = -1/2.
NumberTable bernoulli(int n_max);
/// E_0..E_nmax from 2/(e^t + 1): E_0 = 1, E_1 = -1/2, E_2 = 0, ...
NumberTable euler_numbers(int n_max);
/// G_0..G_nmax from 2t/(e^t + 1).
NumberTable genocchi(int n_max);
/// Coefficients of 2 (1 + e^t)^(-r) e^(x t); x = 0 gives G_n^(r).
NumberTable order_r_genocchi(int r, int n_max, const Rational& x = 0);

/// G_n(x) from 2t e^(xt) / (e^t + 1).
Rational genocchi_poly(int n, const Rational& x);
/// E_n(x) from 2 e^(xt) / (e^t + 1).
Rational euler_poly(int n, const Rational& x);

/// Checks G_{2m} = 2(1 - 2^{2m}) B_{2m} = 2m E_{2m-1}. Requires m >= 1.
VerificationRecord genocchi_relations_check(int m);

/// 1^k + ... + n^k by direct summation. Requires k >= 1, n >= 0.
Rational power_sum_bruteforce(int k, int n);

/// (1/(n+1)) sum_{i=0}^{n} C(n+1, i) B_i k^{n+1-i}, which equals
/// 1^n + ... + (k-1)^n. Requires n >= 1, k >= 1.
Rational faulhaber(int n, int k);

VerificationRecord faulhaber_check(int n, int k);

/// sum_{j=1}^{n-1} (-1)^j j^k, starting -1^k + 2^k - ...
/// Requires k >= 1, n >= 2.
Rational alt_power_sum_bruteforce(int k, int n);

/// Same sum through Euler polynomials: (E_k(0) - (-1)^n E_k(n)) / 2.
Rational alt_power_sum_euler(int k, int n);

VerificationRecord alt_power_sum_check(int k, int n);

/// Which way to read the Euler-type closed form
///   ((-1)^{k+1}/2) sum_{l=0}^{L} C(n,l) E_l k^{n-l} + (E_n/2)(1 + (-1)^{k+1}).
/// The printed version takes L = k-1 and compares with sum_{j<n} (-1)^j j^k.
struct Eq4Reading {
    bool upper_limit_n_minus_1 = false; ///< L = n-1 instead of k-1
    bool swap_target = false;           ///< compare with sum_{j<k} (-1)^j j^n

    std::string identity() const;
};

inline constexpr Eq4Reading kEq4Readings[] = {
    {false, false}, {true, false}, {false, true}, {true, true}};

Rational eq4_rhs(int k, int n, Eq4Reading reading);

/// Report-only comparison of the closed form under `reading` against brute force.
VerificationRecord eq4_check(int k, int n, Eq4Reading reading = {});

/// The literal reading; same as eq4_check(k, n, {}).
VerificationRecord eq4_as_printed_check(int k, int n);

} // namespace qgl::classical
