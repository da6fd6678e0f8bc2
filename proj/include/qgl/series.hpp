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

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace qgl {

/// Truncated power series in t over a field F (Rational or RatFunc), holding
/// the coefficients of t^0 .. t^order.
template <class F>
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1, F(0)) {}
    Series(std::size_t order, std::vector<F> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1, F(0));
    }

    static Series one(std::size_t order)
    {
        Series s(order);
        s.coeffs_[0] = F(1);
        return s;
    }

    /// c * t^power, truncated.
    static Series monomial(std::size_t order, std::size_t power, const F& c = F(1))
    {
        Series s(order);
        if (power <= order)
            s.coeffs_[power] = c;
        return s;
    }

    /// e^(x t): coefficients x^n / n!.
    static Series exp_scaled(std::size_t order, const F& x)
    {
        Series s(order);
        F term(1);
        for (std::size_t n = 0; n <= order; ++n) {
            s.coeffs_[n] = term;
            term = term * x * F(make_rational(1, static_cast<long>(n + 1)));
        }
        return s;
    }

    static Series exp(std::size_t order) { return exp_scaled(order, F(1)); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const F& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<F>& coefficients() const noexcept { return coeffs_; }

    /// n! times the coefficient of t^n: the value read off an exponential
    /// generating function.
    F egf_coefficient(std::size_t n) const { return coeffs_.at(n) * F(Rational(factorial(static_cast<long>(n)))); }

    friend Series operator+(const Series& a, const Series& b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        Series out(order);
        for (std::size_t i = 0; i <= order; ++i)
            out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }

    friend Series operator-(const Series& a, const Series& b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        Series out(order);
        for (std::size_t i = 0; i <= order; ++i)
            out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return out;
    }

    friend Series operator*(const Series& a, const F& c)
    {
        Series out = a;
        for (auto& v : out.coeffs_)
            v = v * c;
        return out;
    }

    /// Truncated Cauchy product.
    friend Series operator*(const Series& a, const Series& b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        Series out(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (a.coeffs_[i] == F(0))
                continue;
            for (std::size_t j = 0; i + j <= order; ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    /// Multiplicative inverse via the triangular recurrence; the constant
    /// term must be nonzero.
    Series reciprocal() const
    {
        if (coeffs_[0] == F(0))
            throw Error("series reciprocal needs a nonzero constant term");
        Series out(order());
        const F inv0 = F(1) / coeffs_[0];
        out.coeffs_[0] = inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            F acc(0);
            for (std::size_t i = 1; i <= n; ++i)
                acc = acc + coeffs_[i] * out.coeffs_[n - i];
            out.coeffs_[n] = -(acc * inv0);
        }
        return out;
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.reciprocal(); }

    Series pow(unsigned exponent) const
    {
        Series result = one(order());
        for (unsigned i = 0; i < exponent; ++i)
            result = result * *this;
        return result;
    }

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<F> coeffs_;
};

} // namespace qgl
