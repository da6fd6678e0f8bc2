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

#include "qgl/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qgl {

/// Degree cap applied by every polynomial product. Default 10000.
std::size_t max_degree() noexcept;
void set_max_degree(std::size_t cap) noexcept;

/// Dense univariate polynomial over Rational in x, where x stands for q^(1/2).
/// Coefficient i belongs to x^i; the highest stored coefficient is never zero
/// and the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    /// c * x^power
    static Poly monomial(std::size_t power, const Rational& c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    /// Index of the lowest nonzero coefficient (x-adic valuation).
    std::size_t low_degree() const;
    /// True when only even powers of x occur, i.e. the value is a polynomial in q.
    bool is_even() const noexcept;

    Rational operator()(const Rational& x0) const;

    Poly monic() const;
    /// Multiplies by x^k.
    Poly shifted(std::size_t k) const;
    /// Divides by x^k; the low k coefficients must vanish.
    Poly unshifted(std::size_t k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Quotient and remainder; throws Error when dividing by zero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    /// "[c0,c1,...]" with each coefficient rendered as p/q.
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Monic gcd over the rationals. Throws Error("gcd undefined") if both are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Exact quotient a / b; throws Error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

} // namespace qgl
