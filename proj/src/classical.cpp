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

#include "qgl/classical.hpp"

#include "qgl/series.hpp"

namespace qgl::classical {

namespace {

using RSeries = Series<Rational>;

// Extra truncation terms beyond n_max; exactness makes them harmless and
// they absorb the index shift from the leading factor of t.
constexpr std::size_t kGuard = 2;

std::size_t series_order(int n_max) { return static_cast<std::size_t>(n_max) + kGuard; }

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(what);
}

std::vector<Rational> egf_values(const RSeries& s, int n_max)
{
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        out.push_back(s.egf_coefficient(static_cast<std::size_t>(n)));
    return out;
}

// 1 + e^t
RSeries one_plus_exp(std::size_t order) { return RSeries::one(order) + RSeries::exp(order); }

// 2 / (e^t + 1)
RSeries euler_series(std::size_t order) { return one_plus_exp(order).reciprocal() * Rational(2); }

Rational int_pow(long base, long exponent) { return pow(Rational(base), exponent); }

Rational alt_sum(int power, int upper_exclusive)
{
    Rational acc = 0;
    for (int j = 1; j < upper_exclusive; ++j) {
        const Rational term = int_pow(j, power);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

} // namespace

std::string NumberTable::label() const
{
    switch (kind) {
    case NumberKind::bernoulli:
        return "B";
    case NumberKind::euler:
        return "E";
    case NumberKind::genocchi:
        return "G";
    case NumberKind::genocchi_order_r:
        return "G(" + std::to_string(order) + ")";
    }
    return "?";
}

NumberTable bernoulli(int n_max)
{
    require(n_max >= 0, "bernoulli: n_max must be nonnegative");
    const std::size_t order = series_order(n_max);
    // (e^t - 1) / t has coefficients 1/(n+1)!.
    std::vector<Rational> shifted;
    for (std::size_t n = 0; n <= order; ++n)
        shifted.push_back(make_rational(1, 1) / Rational(factorial(static_cast<long>(n + 1))));
    const RSeries gen = RSeries(order, std::move(shifted)).reciprocal();
    return {NumberKind::bernoulli, 0, egf_values(gen, n_max)};
}

NumberTable euler_numbers(int n_max)
{
    require(n_max >= 0, "euler_numbers: n_max must be nonnegative");
    return {NumberKind::euler, 0, egf_values(euler_series(series_order(n_max)), n_max)};
}

NumberTable genocchi(int n_max)
{
    require(n_max >= 0, "genocchi: n_max must be nonnegative");
    const std::size_t order = series_order(n_max);
    const RSeries gen = RSeries::monomial(order, 1) * euler_series(order);
    return {NumberKind::genocchi, 0, egf_values(gen, n_max)};
}

NumberTable order_r_genocchi(int r, int n_max, const Rational& x)
{
    require(r >= 1, "order_r_genocchi: r must be positive");
    require(n_max >= 0, "order_r_genocchi: n_max must be nonnegative");
    const std::size_t order = series_order(n_max);
    const RSeries base = one_plus_exp(order).reciprocal();
    const RSeries gen = base.pow(static_cast<unsigned>(r)) * Rational(2) * RSeries::exp_scaled(order, x);
    return {NumberKind::genocchi_order_r, r, egf_values(gen, n_max)};
}

Rational genocchi_poly(int n, const Rational& x)
{
    require(n >= 0, "genocchi_poly: n must be nonnegative");
    const std::size_t order = series_order(n);
    const RSeries gen =
        RSeries::monomial(order, 1) * euler_series(order) * RSeries::exp_scaled(order, x);
    return gen.egf_coefficient(static_cast<std::size_t>(n));
}

Rational euler_poly(int n, const Rational& x)
{
    require(n >= 0, "euler_poly: n must be nonnegative");
    const std::size_t order = series_order(n);
    return (euler_series(order) * RSeries::exp_scaled(order, x)).egf_coefficient(static_cast<std::size_t>(n));
}

VerificationRecord genocchi_relations_check(int m)
{
    require(m >= 1, "genocchi_relations_check: m must be positive");
    const int n = 2 * m;
    const Rational g = genocchi(n).values[static_cast<std::size_t>(n)];
    const Rational via_b = Rational(2) * (Rational(1) - int_pow(2, n)) * bernoulli(n).values[static_cast<std::size_t>(n)];
    const Rational via_e = Rational(n) * euler_numbers(n - 1).values[static_cast<std::size_t>(n - 1)];

    VerificationRecord rec =
        equality_record("genocchi_relations", {{"m", m}}, std::nullopt, g, via_b);
    if (rec.passed())
        rec = equality_record("genocchi_relations", {{"m", m}}, std::nullopt, g, via_e);
    rec.values = {{"G_2m", to_string(g)},
                  {"via_bernoulli", to_string(via_b)},
                  {"via_euler", to_string(via_e)}};
    return rec;
}

Rational power_sum_bruteforce(int k, int n)
{
    require(k >= 1 && n >= 0, "power_sum_bruteforce: need k >= 1, n >= 0");
    Rational acc = 0;
    for (int j = 1; j <= n; ++j)
        acc += int_pow(j, k);
    return acc;
}

Rational faulhaber(int n, int k)
{
    require(n >= 1 && k >= 1, "faulhaber: need n >= 1, k >= 1");
    const auto b = bernoulli(n).values;
    Rational acc = 0;
    for (int i = 0; i <= n; ++i)
        acc += Rational(binomial(n + 1, i)) * b[static_cast<std::size_t>(i)] * int_pow(k, n + 1 - i);
    return acc / Rational(n + 1);
}

VerificationRecord faulhaber_check(int n, int k)
{
    return equality_record("faulhaber", {{"k", k}, {"n", n}}, std::nullopt, faulhaber(n, k),
                           power_sum_bruteforce(n, k - 1));
}

Rational alt_power_sum_bruteforce(int k, int n)
{
    require(k >= 1 && n >= 2, "alt_power_sum_bruteforce: need k >= 1, n >= 2");
    return alt_sum(k, n);
}

Rational alt_power_sum_euler(int k, int n)
{
    require(k >= 1 && n >= 2, "alt_power_sum_euler: need k >= 1, n >= 2");
    // E_k(x) + E_k(x+1) = 2x^k telescopes the alternating sum.
    const Rational at_n = euler_poly(k, Rational(n));
    const Rational signed_at_n = n % 2 ? -at_n : at_n;
    return (euler_poly(k, 0) - signed_at_n) / Rational(2);
}

VerificationRecord alt_power_sum_check(int k, int n)
{
    return equality_record("euler_alt", {{"k", k}, {"n", n}}, std::nullopt,
                           alt_power_sum_euler(k, n), alt_power_sum_bruteforce(k, n));
}

std::string Eq4Reading::identity() const
{
    if (swap_target)
        return upper_limit_n_minus_1 ? "eq4_swapped_target_upper_n_minus_1" : "eq4_swapped_target";
    return upper_limit_n_minus_1 ? "eq4_upper_n_minus_1" : "eq4_as_printed";
}

Rational eq4_rhs(int k, int n, Eq4Reading reading)
{
    require(k >= 1 && n >= 1, "eq4_rhs: need k >= 1, n >= 1");
    const auto e = euler_numbers(n).values;
    const int upper = reading.upper_limit_n_minus_1 ? n - 1 : k - 1;
    Rational sum = 0;
    for (int l = 0; l <= upper; ++l)
        sum += Rational(binomial(n, l)) * (l <= n ? e[static_cast<std::size_t>(l)] : Rational(0)) *
               int_pow(k, n - l);
    const bool k_odd = k % 2 != 0;
    // (-1)^{k+1} is +1 for odd k.
    const Rational sign = k_odd ? 1 : -1;
    const Rational tail = k_odd ? e[static_cast<std::size_t>(n)] : Rational(0);
    return sign * sum / Rational(2) + tail;
}

VerificationRecord eq4_check(int k, int n, Eq4Reading reading)
{
    require(k >= 1 && n >= 2, "eq4_check: need k >= 1, n >= 2");
    const Rational target = reading.swap_target ? alt_sum(n, k) : alt_sum(k, n);
    VerificationRecord rec = equality_record(reading.identity(), {{"k", k}, {"n", n}},
                                             std::nullopt, eq4_rhs(k, n, reading), target);
    return rec;
}

VerificationRecord eq4_as_printed_check(int k, int n) { return eq4_check(k, n, {}); }

} // namespace qgl::classical
