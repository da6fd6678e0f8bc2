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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgl {

using Integer = mpz_class;

/// Exact rational number. mpq_class keeps gcd(num, den) = 1 and den > 0
/// as long as every value goes through make_rational() or arithmetic.
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation hit a genuine pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A polynomial grew past the configured degree cap.
class DegreeLimitError : public Error {
public:
    using Error::Error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1)
{
    if (den == 0)
        throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Throws Error on malformed input.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, long exponent);

Integer binomial(long n, long k);
Integer factorial(long n);

} // namespace qgl
