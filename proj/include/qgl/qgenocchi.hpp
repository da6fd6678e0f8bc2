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

// q-Genocchi numbers G_{n,k,q} and their shifted companions G_{n,k,q}(k).
//
// Both are defined by exponential generating functions of the shape
//
//   [2]_q t sum_{j>=0} (-1)^{j-1} w_j exp(t a_j)
//
// whose j-sums diverge for 0 < q < 1. Each coefficient of t^n/n! expands into
// a finite combination of geometric terms c q^{beta j}, and every such term is
// summed with the regularization
//
//   sum_{j>=0} (-1)^{j-1} q^{beta j} := -1 / (1 + q^beta).
//
// The regularized value is the definition used throughout this module; the
// closed forms theorem1_closed / theorem2_closed are compared against it.

#include "qgl/qcore.hpp"
#include "qgl/ratfunc.hpp"
#include "qgl/record.hpp"

#include <vector>

namespace qgl::qgenocchi {

/// coeff * q^{beta j}, stored with beta2 = 2 beta so that q^{beta j} = x^{beta2 j}.
struct ExpTerm {
    RatFunc coeff;
    long beta2 = 0;

    friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// Sorted by beta2, equal exponents merged, zero coefficients dropped.
using TermList = std::vector<ExpTerm>;

TermList canonical_terms(TermList terms);

/// Regularized sum_{j>=0} (-1)^{j-1} sum_terms coeff x^{beta2 j}.
RatFunc fermionic_sum(const TermList& terms);

/// The series re-indexed to start at j = shift: term j of the result is
/// term j + shift of the input, sign included.
TermList shift_terms(const TermList& terms, long shift);

/// sum_{j=0}^{count-1} (-1)^{j-1} sum_terms coeff x^{beta2 j}, summed literally.
RatFunc partial_sum(const TermList& terms, long count);

enum class Variant { plain, shifted };

/// The j-th summand's contribution to the coefficient of t^n/n!, expanded
/// into geometric terms in j. Requires n >= 1 and k >= 0.
TermList expand_term(int n, int k, Variant variant, Convention conv);

struct QGenocchiValue {
    int n = 0;
    int k = 0;
    Variant variant = Variant::plain;
    RatFunc value;
};

/// G_{n,k,q} from the regularized generating function. Requires n >= 1,
/// k >= 0 (k = 0 is the degenerate shift).
QGenocchiValue g_oracle(int n, int k, Convention conv);
/// G_{n,k,q}(k) from the regularized generating function.
QGenocchiValue g_shift_oracle(int n, int k, Convention conv);

/// Literal closed form stated for G_{n,k,q}.
QGenocchiValue theorem1_closed(int n, int k);
/// Literal closed form stated for G_{n,k,q}(k).
QGenocchiValue theorem2_closed(int n, int k);

/// sum_{j=0}^{k-1} [j]_{q^2} (-1)^{j-1} [j]_{q^b}^{n-1} q^{(k-j)(n+1)/2}, b from conv.
RatFunc alt_qsum_lhs(int n, int k, Convention conv);

/// Direct evaluation of the first `terms` summands of the generating function
/// as a truncated series over Q(x), with the remaining tail regularized
/// through the expansion. Must agree with the oracle for every `terms`.
RatFunc series_crosscheck(int n, int k, Variant variant, Convention conv, int terms);

VerificationRecord verify_theorem1(int n, int k, Convention conv);
VerificationRecord verify_theorem2(int n, int k, Convention conv);

/// alt_qsum_lhs(n, k, conv) against (G_{n,k,q} - G_{n,k,q}(k)) / (n [2]_q).
VerificationRecord verify_theorem4(int n, int k, Convention conv);
/// Same comparison with the left side and the oracles on different bases.
VerificationRecord verify_theorem4_mixed(int n, int k, Convention lhs_conv, Convention oracle_conv);

/// The shift law fermionic_sum(shift(T, k)) = fermionic_sum(T) - partial_sum(T, k)
/// on T = expand_term(n, k, plain, conv).
VerificationRecord shift_law_check(int n, int k, Convention conv);

struct Remark3Records {
    VerificationRecord claim1; ///< q -> 1 limit of G_{n,k,q} equals G_n^(2)
    VerificationRecord claim2; ///< q -> 1 limit of G_{n,k,q}(k) differs from G_n^(2)(k)
};

Remark3Records remark3_check(int n, int k, Convention conv);

} // namespace qgl::qgenocchi
