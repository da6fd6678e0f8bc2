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

#include <regex>

namespace qgl {

namespace {

bool is_one(const Poly& p) { return p.degree() == 0 && p.leading() == 1; }

std::vector<Rational> parse_list(const std::string& body)
{
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string::npos)
            comma = body.size();
        out.push_back(parse_rational(std::string_view(body).substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

} // namespace

RatFunc RatFunc::normalize(const Poly& num, const Poly& den)
{
    if (den.is_zero())
        throw Error("zero denominator");
    if (num.is_zero())
        return {};
    const Poly g = gcd(num, den);
    Poly n = is_one(g) ? num : exact_div(num, g);
    Poly d = is_one(g) ? den : exact_div(den, g);
    const Rational lead = d.leading();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        n *= inv;
        d *= inv;
    }
    return RatFunc(std::move(n), std::move(d), 0);
}

Rational RatFunc::operator()(const Rational& x0) const
{
    const Rational d = den_(x0);
    if (d == 0)
        throw PoleError("pole at x = " + qgl::to_string(x0));
    return num_(x0) / d;
}

unsigned RatFunc::pole_order(const Rational& x0) const
{
    unsigned order = 0;
    Poly d = den_;
    const Poly linear{-x0, Rational(1)};
    while (d.degree() > 0 && d(x0) == 0) {
        d = exact_div(d, linear);
        ++order;
    }
    return order;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc RatFunc::inverse() const
{
    if (is_zero())
        throw Error("division by zero rational function");
    return normalize(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (is_one(a.den_) && is_one(b.den_))
        return RatFunc(a.num_ + b.num_, a.den_, 0);
    if (a.den_ == b.den_)
        return RatFunc::normalize(a.num_ + b.num_, a.den_);
    const Poly g = gcd(a.den_, b.den_);
    if (is_one(g))
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, 0).normalized_lead();
    const Poly bq = exact_div(b.den_, g);
    const Poly aq = exact_div(a.den_, g);
    Poly num = a.num_ * bq + b.num_ * aq;
    if (num.is_zero())
        return {};
    Poly den = a.den_ * bq;
    const Poly h = gcd(num, g);
    if (!is_one(h)) {
        num = exact_div(num, h);
        den = exact_div(den, h);
    }
    return RatFunc(std::move(num), std::move(den), 0).normalized_lead();
}

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (is_one(a.den_) && is_one(b.den_))
        return RatFunc(a.num_ * b.num_, a.den_, 0);
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    const Poly an = is_one(g1) ? a.num_ : exact_div(a.num_, g1);
    const Poly bd = is_one(g1) ? b.den_ : exact_div(b.den_, g1);
    const Poly bn = is_one(g2) ? b.num_ : exact_div(b.num_, g2);
    const Poly ad = is_one(g2) ? a.den_ : exact_div(a.den_, g2);
    return RatFunc(an * bn, ad * bd, 0).normalized_lead();
}

RatFunc RatFunc::normalized_lead() &&
{
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
    return std::move(*this);
}

std::string RatFunc::to_string() const
{
    return "num=" + num_.to_string() + ";den=" + den_.to_string();
}

RatFunc RatFunc::parse(const std::string& text)
{
    static const std::regex shape(R"(num=\[([^\]]*)\];den=\[([^\]]*)\])");
    std::smatch match;
    if (!std::regex_match(text, match, shape))
        throw Error("malformed rational function '" + text + "'");
    return normalize(Poly(parse_list(match[1].str())), Poly(parse_list(match[2].str())));
}

RatFunc pow(const RatFunc& base, long exponent)
{
    if (exponent < 0)
        return pow(base.inverse(), -exponent);
    // Canonical parts stay coprime under powers.
    return RatFunc::normalize(pow(base.num(), static_cast<unsigned>(exponent)),
                              pow(base.den(), static_cast<unsigned>(exponent)));
}

RatFunc monomial_q(long twice_exponent)
{
    if (twice_exponent >= 0)
        return RatFunc(Poly::monomial(static_cast<std::size_t>(twice_exponent)));
    return RatFunc::normalize(Poly::constant(1),
                              Poly::monomial(static_cast<std::size_t>(-twice_exponent)));
}

std::optional<Rational> rational_sqrt(const Rational& r)
{
    if (r < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    return make_rational(n, d);
}

std::optional<Rational> eval_at_q(const RatFunc& f, const Rational& q)
{
    if (auto x = rational_sqrt(q))
        return f(*x);
    if (!f.is_even())
        return std::nullopt;
    // Even parts are polynomials in q = x^2.
    auto in_q = [&](const Poly& p) {
        Rational acc = 0;
        const auto c = p.coefficients();
        for (std::size_t i = c.size(); i-- > 0;) {
            if (i % 2)
                continue;
            acc = acc * q + c[i];
        }
        return acc;
    };
    const Rational d = in_q(f.den());
    if (d == 0)
        throw PoleError("pole at q = " + to_string(q));
    return in_q(f.num()) / d;
}

} // namespace qgl
