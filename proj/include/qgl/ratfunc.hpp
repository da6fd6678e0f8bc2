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

#include "qgl/poly.hpp"

#include <optional>
#include <string>

namespace qgl {

/// Element of Q(x), x = q^(1/2), kept in canonical form: gcd(num, den) = 1
/// and den monic. Two values are equal iff their coefficients are equal.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(1)) {}
    RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

    /// Canonical form of num / den. Throws Error if den is zero.
    static RatFunc normalize(const Poly& num, const Poly& den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    /// True when both parts only use even powers of x (a function of q alone).
    bool is_even() const noexcept { return num_.is_even() && den_.is_even(); }

    /// Exact value at x = x0. Throws PoleError if x0 is a root of the denominator.
    Rational operator()(const Rational& x0) const;
    /// Multiplicity of x0 as a root of the denominator (0 when finite).
    unsigned pole_order(const Rational& x0) const;

    RatFunc operator-() const;
    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    /// "num=[c0,c1,...];den=[d0,...]"
    std::string to_string() const;
    /// Inverse of to_string().
    static RatFunc parse(const std::string& text);

private:
    RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
    RatFunc normalized_lead() &&;

    Poly num_;
    Poly den_;
};

RatFunc pow(const RatFunc& base, long exponent);

/// q^(a/2) as x^a (negative a gives 1/x^-a).
RatFunc monomial_q(long twice_exponent);

/// Value at a given q. Exact when the function is even in x, or when q is the
/// square of a rational; std::nullopt when the value would be irrational.
/// Throws PoleError on a pole.
std::optional<Rational> eval_at_q(const RatFunc& f, const Rational& q);

/// Square root of a nonnegative rational if it is rational.
std::optional<Rational> rational_sqrt(const Rational& r);

} // namespace qgl
