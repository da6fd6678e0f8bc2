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

#include "qgl/qgenocchi.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace qgl;
using namespace qgl::qgenocchi;
using qgl::testing::Gen;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }
RatFunc q_pow(long e) { return monomial_q(2 * e); }
const RatFunc one(1);

} // namespace

TEST_CASE("fermionic_sum")
{
    // beta = 0: -1/2
    CHECK(fermionic_sum({{one, 0}}) == RatFunc(r(-1, 2)));
    // beta = 1 minus beta = -1: -1/(1+q) + 1/(1+q^{-1}) = (q-1)/(q+1)
    CHECK(fermionic_sum({{one, 2}, {RatFunc(-1), -2}}) == (q_pow(1) - one) / (q_pow(1) + one));
    CHECK(fermionic_sum({}).is_zero());
    // coefficients scale linearly
    CHECK(fermionic_sum({{RatFunc(3), 4}}) == RatFunc(-3) / (one + q_pow(2)));
}

TEST_CASE("canonical_terms merges and drops")
{
    const TermList t = canonical_terms({{RatFunc(2), 3}, {RatFunc(-2), 3}, {one, -1}, {one, -1}});
    REQUIRE(t.size() == 1);
    CHECK(t[0].beta2 == -1);
    CHECK(t[0].coeff == RatFunc(2));
}

TEST_CASE("fermionic sum agrees with the convergent sum where it converges")
{
    // For beta2 > 0 and x = 1/2 the series converges and the regularized value
    // is its ordinary sum. Compare against literal partial sums at that point.
    Gen gen(41);
    const Rational x = r(1, 2);
    const long count = 60;
    for (int i = 0; i < 50; ++i) {
        TermList terms;
        const long size = gen.integer(1, 4);
        for (long t = 0; t < size; ++t)
            terms.push_back({RatFunc(gen.rational()), gen.integer(1, 6)});
        Rational literal = 0;
        Rational bound = 0;
        for (const auto& term : terms) {
            Rational ratio = pow(x, term.beta2);
            Rational power = 1;
            for (long j = 0; j < count; ++j) {
                literal += (j % 2 == 0 ? -1 : 1) * term.coeff(0) * power;
                power *= ratio;
            }
            bound += abs(term.coeff(0)) * power;
        }
        const Rational exact = fermionic_sum(terms)(x);
        CHECK(abs(exact - literal) <= bound);
    }
}

TEST_CASE("expand_term")
{
    const auto conv = Convention::q;
    const TermList t = expand_term(1, 1, Variant::plain, conv);
    REQUIRE(t.size() == 2);
    CHECK(t[0].beta2 == -2);
    CHECK(t[1].beta2 == 2);
    // k = 0: the shift is trivial
    for (int n = 1; n <= 5; ++n)
        for (auto c : kAllConventions)
            CHECK(expand_term(n, 0, Variant::plain, c) == expand_term(n, 0, Variant::shifted, c));
    CHECK_THROWS_AS(expand_term(0, 1, Variant::plain, conv), Error);
    CHECK_THROWS_AS(expand_term(1, -1, Variant::plain, conv), Error);
    TermList zeroed = t;
    for (auto& term : zeroed)
        term.coeff = RatFunc();
    CHECK(fermionic_sum(zeroed).is_zero());
}

TEST_CASE("g_oracle small values")
{
    for (int k = 0; k <= 10; ++k) {
        const RatFunc expected = q_pow(k) / (one + q_pow(1));
        CHECK(g_oracle(1, k, Convention::q).value == expected);
        CHECK(g_oracle(1, k, Convention::q2).value == expected);
    }
    const auto v = g_oracle(3, 2, Convention::q);
    CHECK(v.n == 3);
    CHECK(v.k == 2);
    CHECK(v.variant == Variant::plain);
    CHECK(g_shift_oracle(3, 2, Convention::q).variant == Variant::shifted);
}

TEST_CASE("closed forms")
{
    const RatFunc q = q_pow(1);
    CHECK(theorem1_closed(1, 1).value == q / ((one - q) * (one + q) * (one + q)));
    CHECK(theorem1_closed(1, 2).value == q * q / ((one - q) * (one + q) * (one + q)));
    CHECK(theorem2_closed(1, 1).value == -q / (one + q));
}

TEST_CASE("alt_qsum_lhs")
{
    for (auto c : kAllConventions) {
        CHECK(alt_qsum_lhs(1, 1, c).is_zero());
        CHECK(alt_qsum_lhs(1, 2, c) == q_pow(1));
        CHECK(alt_qsum_lhs(2, 2, c) == monomial_q(3));
    }
    // n = 2, k = 3, base q: + q^3 - (1+q^2)(1+q) q^{3/2}
    const RatFunc expected = monomial_q(6) - (one + q_pow(2)) * (one + q_pow(1)) * monomial_q(3);
    CHECK(alt_qsum_lhs(2, 3, Convention::q) == expected);
}

TEST_CASE("difference identity holds under each uniform convention")
{
    for (auto c : kAllConventions)
        for (int n = 1; n <= 8; ++n)
            for (int k = 1; k <= 8; ++k) {
                const auto rec = verify_theorem4(n, k, c);
                CHECK(rec.identity == "theorem4");
                CHECK(rec.passed());
            }
}

TEST_CASE("difference identity with mixed conventions fails with a witness")
{
    const auto rec = verify_theorem4_mixed(3, 4, Convention::q, Convention::q2);
    CHECK_FALSE(rec.passed());
    REQUIRE(rec.witness.has_value());
    CHECK_FALSE(std::get<RatFunc>(*rec.witness).is_zero());
    CHECK(rec.values.at("oracle_convention") == "q2");
}

TEST_CASE("shift law on random term lists")
{
    Gen gen(2718);
    for (int i = 0; i < 200; ++i) {
        const TermList terms = gen.terms(5);
        const long k = gen.integer(0, 6);
        CHECK(fermionic_sum(shift_terms(terms, k)) == fermionic_sum(terms) - partial_sum(terms, k));
    }
    for (auto c : kAllConventions)
        CHECK(shift_law_check(3, 4, c).passed());
}

TEST_CASE("shift_terms composes")
{
    Gen gen(8);
    for (int i = 0; i < 30; ++i) {
        const TermList t = gen.terms(4);
        const long a = gen.integer(0, 4);
        const long b = gen.integer(0, 4);
        CHECK(canonical_terms(shift_terms(shift_terms(t, a), b)) ==
              canonical_terms(shift_terms(t, a + b)));
    }
}

TEST_CASE("series cross-check matches the oracle")
{
    for (auto c : kAllConventions)
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 3; ++k)
                for (int terms = 0; terms <= 3; ++terms) {
                    CHECK(series_crosscheck(n, k, Variant::plain, c, terms) ==
                          g_oracle(n, k, c).value);
                    CHECK(series_crosscheck(n, k, Variant::shifted, c, terms) ==
                          g_shift_oracle(n, k, c).value);
                }
}

TEST_CASE("oracle values are finite rational functions")
{
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= 10; ++k) {
            const RatFunc v = g_oracle(n, k, Convention::q).value;
            // x = 1/2 lies in the convergence region; no pole there
            CHECK_NOTHROW(v(r(1, 2)));
        }
}

TEST_CASE("printed closed-form records")
{
    for (auto c : kAllConventions)
        for (int n = 1; n <= 6; ++n)
            for (int k = 1; k <= 6; ++k) {
                for (const auto& rec : {verify_theorem1(n, k, c), verify_theorem2(n, k, c)}) {
                    CHECK(rec.passed() == !rec.witness.has_value());
                    if (!rec.passed()) {
                        CHECK_FALSE(std::get<RatFunc>(*rec.witness).is_zero());
                        CHECK(rec.values.count("witness_at_x_half") == 1);
                    }
                }
            }
    // n = 1, k = 1 under base q: the printed form does not match the oracle
    CHECK_FALSE(verify_theorem1(1, 1, Convention::q).passed());
    CHECK(verify_theorem1(2, 1, Convention::q).passed());
}

TEST_CASE("q -> 1 limit claim records")
{
    for (auto c : kAllConventions)
        for (int n = 1; n <= 6; ++n)
            for (int k = 1; k <= 6; ++k) {
                const auto recs = remark3_check(n, k, c);
                CHECK(recs.claim1.identity == "remark3_claim1");
                CHECK(recs.claim2.identity == "remark3_claim2");
                CHECK(recs.claim1.values.count("limit") == 1);
                CHECK(recs.claim1.values.count("genocchi_order2") == 1);
                CHECK(recs.claim2.values.count("limit") == 1);
                CHECK(recs.claim2.values.count("genocchi_order2_at_k") == 1);
                CHECK(recs.claim1.passed() == !recs.claim1.witness.has_value());
                CHECK(recs.claim2.passed() == !recs.claim2.witness.has_value());
            }
    // n = 1: the limit is 1/2 while G_1^(2) = -1/2
    const auto recs = remark3_check(1, 1, Convention::q);
    CHECK(recs.claim1.values.at("limit") == "1/2");
    CHECK(recs.claim1.values.at("genocchi_order2") == "-1/2");
    CHECK(std::get<Rational>(*recs.claim1.witness) == 1);
}
