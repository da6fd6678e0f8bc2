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

#include "qgl/ratfunc.hpp"
#include "qgl/series.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace qgl;
using qgl::testing::Gen;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == r(1, 2));
    CHECK(parse_rational("-4") == r(-4));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("poly_mul")
{
    CHECK(Poly{1, 1} * Poly{1, -1} == Poly{1, 0, -1});
    CHECK((Poly{1, 2, 3} * Poly{}).is_zero());
    // schoolbook expansion of (1+x+x^2)^2
    CHECK(Poly{1, 1, 1} * Poly{1, 1, 1} == Poly{1, 2, 3, 2, 1});
    CHECK((Poly{1, 2} * Poly{0, 0, 5}).degree() == 3);
}

TEST_CASE("poly trims trailing zeros")
{
    CHECK(Poly{1, 0, 0}.degree() == 0);
    CHECK(Poly{0, 0}.is_zero());
    CHECK(Poly{}.degree() == -1);
}

TEST_CASE("poly_gcd")
{
    CHECK(gcd(Poly{-1, 0, 1}, Poly{-1, 1}) == Poly{-1, 1});
    CHECK(gcd(Poly{1, 1}, Poly{2, 1}) == Poly{1});
    // (1+x)^2 (1-x) and (1+x)(1-x)^2 share (1+x)(1-x); monic: x^2 - 1
    const Poly a = Poly{1, 1} * Poly{1, 1} * Poly{1, -1};
    const Poly b = Poly{1, 1} * Poly{1, -1} * Poly{1, -1};
    CHECK(gcd(a, b) == Poly{-1, 0, 1});
    CHECK(gcd(Poly{}, Poly{0, 2}) == Poly{0, 1});
    CHECK_THROWS_WITH_AS(gcd(Poly{}, Poly{}), "gcd undefined", Error);
    // powers of x are split off and restored
    CHECK(gcd(Poly::monomial(5) * Poly{1, 1}, Poly::monomial(3) * Poly{1, 1} * Poly{2, 1}) ==
          Poly::monomial(3) * Poly{1, 1});
}

TEST_CASE("poly_gcd divides both inputs")
{
    Gen gen(11);
    for (int i = 0; i < 100; ++i) {
        const Poly common = gen.poly(3);
        const Poly a = common * gen.poly(3);
        const Poly b = common * gen.poly(3);
        if (a.is_zero() && b.is_zero())
            continue;
        const Poly g = gcd(a, b);
        CHECK(divmod(a, g).second.is_zero());
        CHECK(divmod(b, g).second.is_zero());
        if (!common.is_zero())
            CHECK(divmod(g, common.monic()).second.is_zero());
    }
}

TEST_CASE("divmod")
{
    const auto [q, rem] = divmod(Poly{1, 0, 0, 1}, Poly{1, 1});
    CHECK(q == Poly{1, -1, 1});
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(divmod(Poly{1}, Poly{}), Error);
}

TEST_CASE("ratfunc_normalize")
{
    CHECK(RatFunc::normalize(Poly{-1, 0, 1}, Poly{-1, 1}) == RatFunc(Poly{1, 1}));
    const RatFunc zero = RatFunc::normalize(Poly{}, Poly{3, 1});
    CHECK(zero.is_zero());
    CHECK(zero.den() == Poly{1});
    const RatFunc half = RatFunc::normalize(Poly{2, 2}, Poly{4});
    CHECK(half.num() == Poly{r(1, 2), r(1, 2)});
    CHECK(half.den() == Poly{1});
    CHECK_THROWS_AS(RatFunc::normalize(Poly{1}, Poly{}), Error);
    // denominator is made monic
    const RatFunc f = RatFunc::normalize(Poly{1}, Poly{2, 4});
    CHECK(f.den() == Poly{r(1, 2), 1});
    CHECK(f.num() == Poly{r(1, 4)});
}

TEST_CASE("ratfunc_eval")
{
    const RatFunc removable = RatFunc::normalize(Poly{-1, 0, 1}, Poly{-1, 1});
    CHECK(removable(1) == 2);
    const RatFunc pole = RatFunc::normalize(Poly{1}, Poly{-1, 1});
    CHECK_THROWS_AS(pole(1), PoleError);
    CHECK(pole.pole_order(1) == 1);
    CHECK(RatFunc::normalize(Poly{1}, Poly{1, -2, 1}).pole_order(1) == 2);
    CHECK(RatFunc(Poly{r(1, 2), r(1, 2)})(r(1, 2)) == r(3, 4));
}

TEST_CASE("monomial_q")
{
    CHECK(monomial_q(2) == RatFunc(Poly{0, 0, 1}));
    CHECK(monomial_q(0) == RatFunc(1));
    const RatFunc inv = monomial_q(-3);
    CHECK(inv.num() == Poly{1});
    CHECK(inv.den() == Poly::monomial(3));
    CHECK(monomial_q(5) * monomial_q(-5) == RatFunc(1));
}

TEST_CASE("eval_at_q")
{
    // q^(1/2) at q = 1/4 is 1/2
    CHECK(eval_at_q(monomial_q(1), r(1, 4)) == r(1, 2));
    // even functions need no square root
    CHECK(eval_at_q(monomial_q(2) + RatFunc(1), r(1, 3)) == r(4, 3));
    CHECK_FALSE(eval_at_q(monomial_q(1), r(1, 3)).has_value());
    CHECK_THROWS_AS(eval_at_q(RatFunc::normalize(Poly{1}, Poly{-1, 0, 1}), 1), PoleError);
}

TEST_CASE("ratfunc serialization round-trips")
{
    Gen gen(3);
    for (int i = 0; i < 50; ++i) {
        const RatFunc f = gen.ratfunc(3);
        CHECK(RatFunc::parse(f.to_string()) == f);
    }
    CHECK(RatFunc::normalize(Poly{1}, Poly{-1, 1}).to_string() == "num=[1];den=[-1,1]");
    CHECK_THROWS_AS(RatFunc::parse("num=[1]"), Error);
}

TEST_CASE("ring laws on random rational functions")
{
    Gen gen(2026);
    for (int i = 0; i < 60; ++i) {
        const RatFunc a = gen.ratfunc(2);
        const RatFunc b = gen.ratfunc(2);
        const RatFunc c = gen.ratfunc(2);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc());
        if (!a.is_zero())
            CHECK(a / a == RatFunc(1));
    }
}

TEST_CASE("ring laws on random polynomials")
{
    Gen gen(99);
    for (int i = 0; i < 100; ++i) {
        const Poly a = gen.poly(4);
        const Poly b = gen.poly(4);
        const Poly c = gen.poly(4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("normalize is idempotent and scale invariant")
{
    Gen gen(7);
    for (int i = 0; i < 60; ++i) {
        const RatFunc f = gen.ratfunc(3);
        CHECK(RatFunc::normalize(f.num(), f.den()) == f);
        Poly scale = gen.poly(3);
        if (scale.is_zero())
            scale = Poly{1, 1};
        CHECK(RatFunc::normalize(f.num() * scale, f.den() * scale) == f);
    }
}

TEST_CASE("evaluation is additive where defined")
{
    Gen gen(5);
    const Rational points[] = {r(1, 2), r(-3, 7), r(5, 3)};
    for (int i = 0; i < 60; ++i) {
        const RatFunc f = gen.ratfunc(2);
        const RatFunc g = gen.ratfunc(2);
        for (const auto& x0 : points) {
            try {
                const Rational lhs = (f + g)(x0);
                CHECK(lhs == f(x0) + g(x0));
            } catch (const PoleError&) {
            }
        }
    }
}

TEST_CASE("degree cap")
{
    const std::size_t saved = max_degree();
    set_max_degree(10);
    CHECK_THROWS_AS(Poly::monomial(6) * Poly::monomial(6), DegreeLimitError);
    CHECK_NOTHROW(Poly::monomial(5) * Poly::monomial(5));
    set_max_degree(saved);
}

TEST_CASE("series_mul and series_recip")
{
    using RS = Series<Rational>;
    // recip(e^t) = e^{-t}: 1 - t + t^2/2 - t^3/6, from solving the triangular system by hand
    const RS inv = RS::exp(3).reciprocal();
    CHECK(inv[0] == 1);
    CHECK(inv[1] == -1);
    CHECK(inv[2] == r(1, 2));
    CHECK(inv[3] == r(-1, 6));
    CHECK(RS::one(4).reciprocal() == RS::one(4));
    const RS t = RS::monomial(3, 1);
    CHECK(t * t == RS::monomial(3, 2));
    CHECK_THROWS_AS(t.reciprocal(), Error);
    // mixed orders truncate to the smaller one
    CHECK((RS::exp(5) * RS::exp(2)).order() == 2);
}

TEST_CASE("series reciprocal property")
{
    Gen gen(17);
    using RS = Series<Rational>;
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> coeffs;
        for (int j = 0; j <= 6; ++j)
            coeffs.push_back(gen.rational());
        if (coeffs[0] == 0)
            coeffs[0] = 1;
        const RS a(6, coeffs);
        CHECK(a * a.reciprocal() == RS::one(6));
    }
}

TEST_CASE("series over rational functions")
{
    using FS = Series<RatFunc>;
    const RatFunc x = monomial_q(1);
    const FS e = FS::exp_scaled(4, x);
    CHECK(e.egf_coefficient(3) == x * x * x);
    CHECK(e * e.reciprocal() == FS::one(4));
}

TEST_CASE("series_exp")
{
    using RS = Series<Rational>;
    const RS e = RS::exp(2);
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == r(1, 2));
    CHECK(RS::exp_scaled(4, 0) == RS::one(4));
    const RS e2 = RS::exp_scaled(2, 2);
    CHECK(e2[1] == 2);
    CHECK(e2[2] == 2);
}
