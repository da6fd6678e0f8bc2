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

#include <doctest.h>

using namespace qgl;
using namespace qgl::classical;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

// Oracles that avoid power series entirely.

// sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
std::vector<Rational> bernoulli_recurrence(int n_max)
{
    std::vector<Rational> b{1};
    for (int m = 1; m <= n_max; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
        b.push_back(-acc / Rational(m + 1));
    }
    return b;
}

// (e^t + 1) E(t) = 2 gives E_n + sum_k C(n,k) E_k = 2 [n = 0].
std::vector<Rational> euler_recurrence(int n_max)
{
    std::vector<Rational> e{1};
    for (int n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        for (int k = 0; k < n; ++k)
            acc += Rational(binomial(n, k)) * e[static_cast<std::size_t>(k)];
        e.push_back(-acc / 2);
    }
    return e;
}

Rational literal_power_sum(int power, int upper)
{
    Rational acc = 0;
    for (int j = 1; j <= upper; ++j) {
        Rational t = 1;
        for (int i = 0; i < power; ++i)
            t *= j;
        acc += t;
    }
    return acc;
}

} // namespace

TEST_CASE("bernoulli")
{
    const auto b = bernoulli(20).values;
    CHECK(b[0] == 1);
    CHECK(b[1] == r(-1, 2));
    CHECK(b[2] == r(1, 6));
    CHECK(b[3] == 0);
    CHECK(b == bernoulli_recurrence(20));
}

TEST_CASE("euler_numbers")
{
    const auto e = euler_numbers(20).values;
    CHECK(e[0] == 1);
    CHECK(e[1] == r(-1, 2));
    CHECK(e[2] == 0);
    CHECK(e[3] == r(1, 4));
    CHECK(e == euler_recurrence(20));
}

TEST_CASE("genocchi")
{
    const auto g = genocchi(40).values;
    CHECK(g[0] == 0);
    CHECK(g[1] == 1);
    CHECK(g[2] == -1);
    CHECK(g[4] == 1);
    CHECK(g[6] == -3);
    for (int m = 3; m <= 39; m += 2)
        CHECK(g[static_cast<std::size_t>(m)] == 0);
    // 2(1 - 2^n) B_n for every n, odd and even alike
    const auto b = bernoulli_recurrence(40);
    for (int n = 0; n <= 40; ++n) {
        Rational two_pow = 1;
        for (int i = 0; i < n; ++i)
            two_pow *= 2;
        CHECK(g[static_cast<std::size_t>(n)] == 2 * (1 - two_pow) * b[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("genocchi_relations_check")
{
    const auto rec = genocchi_relations_check(1);
    CHECK(rec.passed());
    CHECK(rec.values.at("G_2m") == "-1");
    CHECK(rec.values.at("via_bernoulli") == "-1");
    CHECK(rec.values.at("via_euler") == "-1");
    CHECK(genocchi_relations_check(2).passed());
    for (int m = 1; m <= 15; ++m)
        CHECK(genocchi_relations_check(m).passed());
    CHECK_THROWS_AS(genocchi_relations_check(0), Error);
}

TEST_CASE("genocchi_poly")
{
    const auto g = genocchi(10).values;
    for (int n = 0; n <= 10; ++n)
        CHECK(genocchi_poly(n, 0) == g[static_cast<std::size_t>(n)]);

    const auto gg = genocchi(15).values;
    const Rational xs[] = {r(1, 2), r(-2, 3), r(3), r(5, 7), r(-1)};
    for (const auto& x : xs) {
        for (int n = 0; n <= 15; ++n) {
            Rational expected = 0;
            for (int k = 0; k <= n; ++k)
                expected += Rational(binomial(n, k)) * gg[static_cast<std::size_t>(k)] * pow(x, n - k);
            CHECK(genocchi_poly(n, x) == expected);
        }
    }
}

TEST_CASE("order_r_genocchi")
{
    const auto g2 = order_r_genocchi(2, 8).values;
    CHECK(g2[0] == r(1, 2));
    CHECK(g2[1] == r(-1, 2));
    // 2(1+e^t)^{-2} = (1/2) E(t)^2: binomial convolution of Euler numbers
    const auto e = euler_recurrence(8);
    for (int n = 0; n <= 8; ++n) {
        Rational conv = 0;
        for (int i = 0; i <= n; ++i)
            conv += Rational(binomial(n, i)) * e[static_cast<std::size_t>(i)] *
                    e[static_cast<std::size_t>(n - i)];
        CHECK(g2[static_cast<std::size_t>(n)] == conv / 2);
    }
    // order 1 is the Euler table
    CHECK(order_r_genocchi(1, 8).values == euler_recurrence(8));
    // x = 0 matches the default
    CHECK(order_r_genocchi(3, 6, 0).values == order_r_genocchi(3, 6).values);
    CHECK_THROWS_AS(order_r_genocchi(0, 3), Error);
}

TEST_CASE("power_sum_bruteforce")
{
    CHECK(power_sum_bruteforce(3, 3) == 36);
    CHECK(power_sum_bruteforce(5, 0) == 0);
    CHECK(power_sum_bruteforce(2, 10) == 385);
    CHECK_THROWS_AS(power_sum_bruteforce(0, 3), Error);
}

TEST_CASE("faulhaber")
{
    CHECK(faulhaber(2, 4) == 14);
    CHECK(faulhaber(1, 2) == 1);
    CHECK(faulhaber(3, 1) == 0);
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= 50; ++k)
            CHECK(faulhaber(n, k) == literal_power_sum(n, k - 1));
    CHECK(faulhaber_check(3, 7).passed());
}

TEST_CASE("alternating sums")
{
    CHECK(alt_power_sum_bruteforce(2, 4) == -6);
    CHECK(alt_power_sum_bruteforce(1, 3) == 1);
    CHECK(alt_power_sum_bruteforce(3, 2) == -1);
    CHECK(alt_power_sum_euler(2, 4) == -6);
    CHECK(alt_power_sum_euler(1, 3) == 1);
    for (int k = 1; k <= 10; ++k)
        for (int n = 2; n <= 50; ++n)
            CHECK(alt_power_sum_euler(k, n) == alt_power_sum_bruteforce(k, n));
    CHECK_THROWS_AS(alt_power_sum_bruteforce(1, 1), Error);
}

TEST_CASE("euler_poly satisfies E(x) + E(x+1) = 2 x^n")
{
    const Rational xs[] = {r(0), r(1, 3), r(-5, 2), r(7)};
    for (int n = 0; n <= 12; ++n)
        for (const auto& x : xs)
            CHECK(euler_poly(n, x) + euler_poly(n, x + 1) == 2 * pow(x, n));
}

TEST_CASE("alternating closed-form readings")
{
    // k = 2, n = 4: printed closed form gives -(1/2)(E_0 2^4 + 4 E_1 2^3) = -(16 - 16)/2 = 0,
    // while -1 + 4 - 9 = -6.
    const auto printed = eq4_as_printed_check(2, 4);
    CHECK(printed.identity == "eq4_as_printed");
    CHECK_FALSE(printed.passed());
    REQUIRE(printed.witness.has_value());
    CHECK(std::get<Rational>(*printed.witness) == 6);
    CHECK(eq4_rhs(2, 4, {}) == 0);

    // With the sum running to n-1 and the roles of n and k exchanged, the
    // closed form is the Euler-polynomial identity and holds everywhere.
    const Eq4Reading corrected{true, true};
    for (int k = 1; k <= 10; ++k)
        for (int n = 2; n <= 50; ++n)
            CHECK(eq4_check(k, n, corrected).passed());

    // every reading produces a complete record on the full grid
    for (auto reading : kEq4Readings)
        for (int k = 1; k <= 10; ++k)
            for (int n = 2; n <= 50; ++n) {
                const auto rec = eq4_check(k, n, reading);
                CHECK(rec.identity == reading.identity());
                CHECK(rec.passed() == !rec.witness.has_value());
            }
}
