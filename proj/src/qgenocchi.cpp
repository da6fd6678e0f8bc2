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

#include "qgl/classical.hpp"
#include "qgl/series.hpp"

#include <algorithm>
#include <map>

namespace qgl::qgenocchi {

using qcore::q_integer;

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(what);
}

RatFunc x_power(long e) { return monomial_q(e); }

// -1 / (1 + x^a)
RatFunc regularized_geometric(long beta2)
{
    const std::size_t a = static_cast<std::size_t>(beta2 < 0 ? -beta2 : beta2);
    const Poly one_plus = Poly::constant(1) + Poly::monomial(a);
    // 1/(1 + x^-a) = x^a / (1 + x^a)
    const Poly num = beta2 < 0 ? Poly::monomial(a, -1) : Poly::constant(-1);
    return RatFunc::normalize(num, one_plus);
}

// [2]_q n / ((1 - q^2)(1 - q^b)^{n-1}): the j-independent factor shared by
// both variants.
RatFunc common_prefactor(int n, int b)
{
    const RatFunc one_minus_q2 = RatFunc(1) - x_power(4);
    const RatFunc one_minus_qb = RatFunc(1) - x_power(2L * b);
    return q_integer(2) * RatFunc(Rational(n)) / (one_minus_q2 * pow(one_minus_qb, n - 1));
}

void attach_witness_value(VerificationRecord& rec)
{
    if (!rec.witness)
        return;
    if (const auto* f = std::get_if<RatFunc>(&*rec.witness)) {
        try {
            rec.values["witness_at_x_half"] = to_string((*f)(make_rational(1, 2)));
        } catch (const PoleError&) {
            rec.values["witness_at_x_half"] = "pole";
        }
    }
}

std::map<std::string, long> nk(int n, int k) { return {{"k", k}, {"n", n}}; }

} // namespace

TermList canonical_terms(TermList terms)
{
    std::map<long, RatFunc> merged;
    for (auto& t : terms)
        merged[t.beta2] += t.coeff;
    TermList out;
    for (auto& [beta2, coeff] : merged)
        if (!coeff.is_zero())
            out.push_back({std::move(coeff), beta2});
    return out;
}

RatFunc fermionic_sum(const TermList& terms)
{
    // Terms sharing |beta2| share the denominator 1 + x^|beta2|, so their
    // numerators are combined before any rational-function addition.
    std::map<long, RatFunc> by_denominator;
    for (const auto& t : terms)
        by_denominator[t.beta2 < 0 ? -t.beta2 : t.beta2] +=
            t.coeff * (t.beta2 < 0 ? x_power(-t.beta2) : RatFunc(1));
    RatFunc acc;
    for (const auto& [a, numer] : by_denominator)
        acc += numer * regularized_geometric(a);
    return acc;
}

TermList shift_terms(const TermList& terms, long shift)
{
    require(shift >= 0, "shift_terms: shift must be nonnegative");
    TermList out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        RatFunc c = t.coeff * x_power(t.beta2 * shift);
        if (shift % 2)
            c = -c;
        out.push_back({std::move(c), t.beta2});
    }
    return out;
}

RatFunc partial_sum(const TermList& terms, long count)
{
    RatFunc acc;
    for (long j = 0; j < count; ++j) {
        RatFunc term;
        for (const auto& t : terms)
            term += t.coeff * x_power(t.beta2 * j);
        // (-1)^{j-1}
        acc += j % 2 ? term : -term;
    }
    return acc;
}

TermList expand_term(int n, int k, Variant variant, Convention conv)
{
    require(n >= 1 && k >= 0, "expand_term: need n >= 1, k >= 0");
    const int b = base_power(conv);
    const RatFunc pre = common_prefactor(n, b);

    // plain:   q^{k-j} [j]_{q^2} ([j]_{q^b} q^{(k-j)/2})^{n-1}
    // shifted: (-1)^k q^{-j} [j+k]_{q^2} ([j+k]_{q^b} q^{-j/2})^{n-1}
    // with (1 - q^{2(j+c)})(1 - q^{b(j+c)})^{n-1} expanded over s in {0,1}
    // and m in 0..n-1; c = 0 for plain, c = k for shifted.
    RatFunc outer;
    long shift = 0;
    if (variant == Variant::plain) {
        outer = pre * x_power(2L * k + static_cast<long>(k) * (n - 1));
    } else {
        outer = k % 2 ? -pre : pre;
        shift = k;
    }

    TermList terms;
    for (int s = 0; s <= 1; ++s) {
        for (int m = 0; m < n; ++m) {
            const bool negative = (s + m) % 2 != 0;
            Rational c(binomial(n - 1, m));
            if (negative)
                c = -c;
            const long extra = shift * (4L * s + 2L * b * m);
            const long beta2 = 4L * s + 2L * b * m - (n + 1);
            terms.push_back({outer * RatFunc(c) * x_power(extra), beta2});
        }
    }
    return canonical_terms(std::move(terms));
}

QGenocchiValue g_oracle(int n, int k, Convention conv)
{
    return {n, k, Variant::plain, fermionic_sum(expand_term(n, k, Variant::plain, conv))};
}

QGenocchiValue g_shift_oracle(int n, int k, Convention conv)
{
    return {n, k, Variant::shifted, fermionic_sum(expand_term(n, k, Variant::shifted, conv))};
}

QGenocchiValue theorem1_closed(int n, int k)
{
    require(n >= 1 && k >= 1, "theorem1_closed: need n >= 1, k >= 1");
    RatFunc sum;
    for (int m = 1; m <= n; ++m) {
        const long e_num = 2L * m + 2L * k + static_cast<long>(n - 1) * (k - 1) - 4;
        const long e_d1 = -4 + 2L * m - (n - 1);
        const long e_d2 = 2L * m - (n - 1);
        Rational c = Rational(binomial(n, m)) * Rational(m);
        if ((m - 1) % 2)
            c = -c;
        sum += RatFunc(c) * x_power(e_num) /
               ((RatFunc(1) + x_power(e_d1)) * (RatFunc(1) + x_power(e_d2)));
    }
    const RatFunc one_minus_q = RatFunc(1) - x_power(2);
    return {n, k, Variant::plain, sum / pow(one_minus_q, n)};
}

QGenocchiValue theorem2_closed(int n, int k)
{
    require(n >= 1 && k >= 1, "theorem2_closed: need n >= 1, k >= 1");
    RatFunc sum;
    for (int m = 1; m <= n; ++m) {
        const long e_d1 = 2L * m - 4 - (n - 1);
        const long e_d2 = 2L * m - (n - 1);
        const RatFunc first = RatFunc(Rational(m)) * x_power(2L * (m - 1) * k) /
                              (RatFunc(1) + x_power(e_d1));
        const RatFunc second = RatFunc(Rational(m)) * x_power(2L * (m + 1) * k) /
                               (RatFunc(1) + x_power(e_d2));
        Rational c(binomial(n, m));
        if ((m - 1 + k) % 2)
            c = -c;
        sum += RatFunc(c) * (first - second);
    }
    const RatFunc one_minus_q = RatFunc(1) - x_power(2);
    return {n, k, Variant::shifted, sum / pow(one_minus_q, n)};
}

RatFunc alt_qsum_lhs(int n, int k, Convention conv)
{
    require(n >= 1 && k >= 1, "alt_qsum_lhs: need n >= 1, k >= 1");
    const int b = base_power(conv);
    RatFunc acc;
    for (int j = 1; j < k; ++j) { // j = 0 vanishes with [0] = 0
        RatFunc term = q_integer(j, 2) * pow(q_integer(j, b), n - 1) *
                       x_power(static_cast<long>(k - j) * (n + 1));
        acc += j % 2 ? term : -term;
    }
    return acc;
}

RatFunc series_crosscheck(int n, int k, Variant variant, Convention conv, int terms)
{
    require(n >= 1 && k >= 0 && terms >= 0, "series_crosscheck: bad arguments");
    const int b = base_power(conv);
    const auto order = static_cast<std::size_t>(n);
    Series<RatFunc> head(order);
    for (int j = 0; j < terms; ++j) {
        RatFunc weight;
        RatFunc argument;
        bool negative;
        if (variant == Variant::plain) {
            weight = x_power(2L * (k - j)) * q_integer(j, 2);
            argument = q_integer(j, b) * x_power(k - j);
            negative = (j - 1) % 2 != 0;
        } else {
            weight = x_power(-2L * j) * q_integer(j + k, 2);
            argument = q_integer(j + k, b) * x_power(-j);
            negative = (j + k - 1) % 2 != 0;
        }
        if (negative)
            weight = -weight;
        head = head + Series<RatFunc>::exp_scaled(order, argument) * weight;
    }
    const Series<RatFunc> gen =
        Series<RatFunc>::monomial(order, 1) * head * q_integer(2);
    const RatFunc tail = fermionic_sum(shift_terms(expand_term(n, k, variant, conv), terms));
    return gen.egf_coefficient(order) + tail;
}

VerificationRecord verify_theorem1(int n, int k, Convention conv)
{
    auto rec = equality_record("theorem1", nk(n, k), conv, theorem1_closed(n, k).value,
                               g_oracle(n, k, conv).value);
    attach_witness_value(rec);
    return rec;
}

VerificationRecord verify_theorem2(int n, int k, Convention conv)
{
    auto rec = equality_record("theorem2", nk(n, k), conv, theorem2_closed(n, k).value,
                               g_shift_oracle(n, k, conv).value);
    attach_witness_value(rec);
    return rec;
}

namespace {

RatFunc theorem4_rhs(int n, int k, Convention conv)
{
    const RatFunc diff = g_oracle(n, k, conv).value - g_shift_oracle(n, k, conv).value;
    return diff / (RatFunc(Rational(n)) * q_integer(2));
}

} // namespace

VerificationRecord verify_theorem4(int n, int k, Convention conv)
{
    require(n >= 1 && k >= 1, "verify_theorem4: need n >= 1, k >= 1");
    auto rec = equality_record("theorem4", nk(n, k), conv, alt_qsum_lhs(n, k, conv),
                               theorem4_rhs(n, k, conv));
    attach_witness_value(rec);
    return rec;
}

VerificationRecord verify_theorem4_mixed(int n, int k, Convention lhs_conv, Convention oracle_conv)
{
    require(n >= 1 && k >= 1, "verify_theorem4_mixed: need n >= 1, k >= 1");
    auto rec = equality_record("theorem4_mixed", nk(n, k), lhs_conv, alt_qsum_lhs(n, k, lhs_conv),
                               theorem4_rhs(n, k, oracle_conv));
    rec.values["oracle_convention"] = std::string(to_string(oracle_conv));
    attach_witness_value(rec);
    return rec;
}

VerificationRecord shift_law_check(int n, int k, Convention conv)
{
    const TermList terms = expand_term(n, k, Variant::plain, conv);
    return equality_record("shift_law", nk(n, k), conv, fermionic_sum(shift_terms(terms, k)),
                           fermionic_sum(terms) - partial_sum(terms, k));
}

Remark3Records remark3_check(int n, int k, Convention conv)
{
    require(n >= 1 && k >= 1, "remark3_check: need n >= 1, k >= 1");
    const auto g2 = classical::order_r_genocchi(2, n).values[static_cast<std::size_t>(n)];
    const auto g2_at_k =
        classical::order_r_genocchi(2, n, Rational(k)).values[static_cast<std::size_t>(n)];
    const auto lim_plain = qcore::limit_q1(g_oracle(n, k, conv).value);
    const auto lim_shift = qcore::limit_q1(g_shift_oracle(n, k, conv).value);

    Remark3Records out{{"remark3_claim1", nk(n, k), conv}, {"remark3_claim2", nk(n, k), conv}};

    // Claim (1): equality. A pole counts as a failure with the pole as witness.
    if (const auto* v = std::get_if<Rational>(&lim_plain)) {
        out.claim1 = equality_record("remark3_claim1", nk(n, k), conv, *v, g2);
    } else {
        out.claim1.status = Status::fail;
        out.claim1.witness = std::get<Pole>(lim_plain);
    }
    out.claim1.values = {{"limit", qcore::limit_to_string(lim_plain)},
                         {"genocchi_order2", to_string(g2)}};

    // Claim (2): inequality. On failure the witness is the coinciding value.
    const auto* v2 = std::get_if<Rational>(&lim_shift);
    if (v2 && *v2 == g2_at_k) {
        out.claim2.status = Status::fail;
        out.claim2.witness = *v2;
    }
    out.claim2.values = {{"limit", qcore::limit_to_string(lim_shift)},
                         {"genocchi_order2_at_k", to_string(g2_at_k)}};
    return out;
}

} // namespace qgl::qgenocchi
