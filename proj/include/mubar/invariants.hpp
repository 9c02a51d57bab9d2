#pragma once

#include "mubar/dedekind.hpp"
#include "mubar/seifert.hpp"

namespace mubar {

namespace detail {

inline CoefficientVector coefficients_for_case(const SeifertData& y, CoefficientVector bv) {
    if (y.even_case && !bv.even_normalized) return normalize_even(y, bv);
    return bv;
}

inline int strict_sign(const Int& v) {
    const int s = sign(v);
    if (s == 0) throw internal_error("coefficient b_i = 0 cannot occur for coprime data");
    return s;
}

} // namespace detail

/// The combination (1/2) eta_Dir + (1/8) eta_Sign, evaluated in closed form:
///   1/8 + (1/2) sum_i s(A/a_i, a_i) + sum_i s(A/a_i, a_i; 1/2, 1/2)
/// with A = a_1...a_n, minus 1/(8A) when all a_i are odd. Each sum reduces
/// its first argument internally by its exact period, so the huge cofactors
/// A/a_i cost nothing.
inline Rational eta_combination(const SeifertData& y) {
    const Int prod = y.product();
    const Rational half(1, 2);
    Rational v(1, 8);
    for (const Int& ai : y.a) {
        const Int cofactor = prod / ai;
        v += half * dedekind_sum(cofactor, ai);
        v += dedekind_rademacher_sum(cofactor, ai, half, half);
    }
    if (!y.even_case) v -= Rational(Int(1), 8 * prod);
    return v;
}

/// mu-bar from the integer c-invariants:
///   -mu = 1/8 - (1/8) sum (c(a_i, b_i) + sign b_i)   (all a_i odd)
///   -mu = 1/8 - (1/8) sum c(a_i - b_i, a_i)          (a_1 even, b normalized)
/// Returns mu-bar. The even case normalizes the coefficients if needed.
inline Int mubar_c_form(const SeifertData& y, CoefficientVector bv) {
    bv = detail::coefficients_for_case(y, std::move(bv));
    Int total = 0;
    if (y.even_case) {
        for (int i = 0; i < y.n(); ++i) total += c_invariant(y.a[i] - bv.b[i], y.a[i]);
    } else {
        for (int i = 0; i < y.n(); ++i)
            total += c_invariant(y.a[i], bv.b[i]) + detail::strict_sign(bv.b[i]);
    }
    const Int num = total - 1;  // 8 mu
    if (num % 8 != 0)
        throw internal_error("mubar_c_form: sum does not clear the denominator 8 for " +
                             y.name());
    return num / 8;
}

inline Int mubar_c_form(const SeifertData& y) { return mubar_c_form(y, solve_coefficients(y)); }

/// mu-bar through Dedekind sums alone:
///   -mu = 1/8 - (1/8) sum sign b_i + (1/2) sum sign b_i s(a_i, |b_i|)
///         - sum sign b_i s(a_i, 2|b_i|)                  (all a_i odd)
///   -mu = 1/8 + (1/2) sum s(a_i - b_i, a_i) - sum s(a_i - b_i, 2 a_i)
///                                                        (a_1 even, b normalized)
/// Returns mu-bar as an exact rational; integrality is a theorem, not an
/// assumption, so the caller can assert it.
inline Rational mubar_dedekind_form(const SeifertData& y, CoefficientVector bv) {
    bv = detail::coefficients_for_case(y, std::move(bv));
    const Rational half(1, 2);
    Rational v(1, 8);
    if (y.even_case) {
        for (int i = 0; i < y.n(); ++i) {
            const Int q = y.a[i] - bv.b[i];
            v += half * dedekind_sum(q, y.a[i]);
            v -= dedekind_sum(q, 2 * y.a[i]);
        }
    } else {
        for (int i = 0; i < y.n(); ++i) {
            const int s = detail::strict_sign(bv.b[i]);
            const Int babs = boost::multiprecision::abs(bv.b[i]);
            v -= Rational(s, 8);
            v += s * half * dedekind_sum(y.a[i], babs);
            v -= s * dedekind_sum(y.a[i], 2 * babs);
        }
    }
    return -v;
}

inline Rational mubar_dedekind_form(const SeifertData& y) {
    return mubar_dedekind_form(y, solve_coefficients(y));
}

} // namespace mubar
