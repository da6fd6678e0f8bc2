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

#include "qgl/poly.hpp"

#include <algorithm>
#include <atomic>

namespace qgl {

namespace {

std::atomic<std::size_t> g_max_degree{10000};

void check_degree(std::size_t degree)
{
    if (degree > g_max_degree.load(std::memory_order_relaxed))
        throw DegreeLimitError("polynomial degree " + std::to_string(degree) +
                               " exceeds cap " + std::to_string(max_degree()));
}

// Integer polynomials for the gcd kernel.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void make_primitive(ZPoly& p)
{
    Integer content = 0;
    for (const auto& c : p) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content == 1)
            break;
    }
    if (p.back() < 0)
        content = -content;
    if (content != 1 && content != 0)
        for (auto& c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

ZPoly to_primitive(std::span<const Rational> coeffs)
{
    Integer common = 1;
    for (const auto& c : coeffs)
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    ZPoly out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Integer v = common / c.get_den();
        v *= c.get_num();
        out.push_back(std::move(v));
    }
    make_primitive(out);
    return out;
}

// a <- primitive part of prem(a, b), deg b >= 0.
void primitive_remainder(ZPoly& a, const ZPoly& b)
{
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    Integer g, fa, fb;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        mpz_gcd(g.get_mpz_t(), lb.get_mpz_t(), a.back().get_mpz_t());
        fa = lb / g;
        fb = a.back() / g;
        for (auto& c : a)
            c *= fa;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] -= fb * b[i];
        trim(a);
    }
    if (!a.empty())
        make_primitive(a);
}

} // namespace

std::size_t max_degree() noexcept { return g_max_degree.load(std::memory_order_relaxed); }

void set_max_degree(std::size_t cap) noexcept { g_max_degree.store(cap, std::memory_order_relaxed); }

Poly::Poly(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs)
{
    trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(std::size_t power, const Rational& c)
{
    if (c == 0)
        return {};
    check_degree(power);
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Poly(std::move(coeffs));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const
{
    if (coeffs_.empty())
        throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

std::size_t Poly::low_degree() const
{
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0)
        ++i;
    return i;
}

bool Poly::is_even() const noexcept
{
    for (std::size_t i = 1; i < coeffs_.size(); i += 2)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rational Poly::operator()(const Rational& x0) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

Poly Poly::monic() const
{
    if (is_zero())
        return {};
    return *this * (Rational(1) / leading());
}

Poly Poly::shifted(std::size_t k) const
{
    if (is_zero() || k == 0)
        return *this;
    check_degree(coeffs_.size() - 1 + k);
    std::vector<Rational> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
}

Poly Poly::unshifted(std::size_t k) const
{
    if (k > low_degree() && !is_zero())
        throw Error("unshift would drop nonzero coefficients");
    if (k >= coeffs_.size())
        return {};
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_)
        v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const std::size_t na = a.coeffs_.size();
    const std::size_t nb = b.coeffs_.size();
    check_degree(na + nb - 2);
    std::vector<Rational> out(na + nb - 1);
    for (std::size_t i = 0; i < na; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < nb; ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw Error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<Rational> rem = a.coeffs_;
    const std::size_t db = b.coeffs_.size() - 1;
    std::vector<Rational> quot(rem.size() - db);
    const Rational inv_lead = Rational(1) / b.coeffs_.back();
    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top] == 0)
            continue;
        const Rational factor = rem[top] * inv_lead;
        const std::size_t shift = top - db;
        quot[shift] = factor;
        for (std::size_t i = 0; i <= db; ++i)
            rem[shift + i] -= factor * b.coeffs_[i];
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string Poly::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out += ',';
        out += qgl::to_string(coeffs_[i]);
    }
    out += ']';
    return out;
}

Poly pow(const Poly& base, unsigned exponent)
{
    Poly result = Poly::constant(1);
    Poly square = base;
    while (exponent) {
        if (exponent & 1u)
            result = result * square;
        exponent >>= 1u;
        if (exponent)
            square = square * square;
    }
    return result;
}

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero() && b.is_zero())
        throw Error("gcd undefined");
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.degree() == 0 || b.degree() == 0)
        return Poly::constant(1);

    // Powers of x are split off first; they are common in q-expressions and
    // cheap to handle exactly.
    const std::size_t va = a.low_degree();
    const std::size_t vb = b.low_degree();
    const std::size_t v = std::min(va, vb);
    ZPoly p = to_primitive(a.unshifted(va).coefficients());
    ZPoly r = to_primitive(b.unshifted(vb).coefficients());
    if (p.size() < r.size())
        std::swap(p, r);
    while (!r.empty()) {
        if (r.size() == 1) {
            p = ZPoly{1};
            break;
        }
        primitive_remainder(p, r);
        std::swap(p, r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(p.size());
    for (auto& c : p)
        coeffs.emplace_back(c);
    return Poly(std::move(coeffs)).monic().shifted(v);
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error("inexact polynomial division");
    return q;
}

} // namespace qgl
