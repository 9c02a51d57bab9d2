#pragma once

#include "mubar/rational.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace mubar {

namespace detail {

// Common-denominator evaluation of sum_{mu=1}^{p-1} <<mu/p>> <<q mu/p>>.
// Every term is (2 mu - p)(2 k - p)/(4 p^2) with k = q mu mod p, so the whole
// sum is one integer accumulation over a fixed denominator.
template <typename I, typename Acc>
Rational sawtooth_sum_loop(I q, I p) {
    Acc acc = 0;
    I k = 0;
    for (I mu = 1; mu < p; ++mu) {
        k += q;
        if (k >= p) k -= p;
        if (k == 0) continue;
        acc += Acc(2 * mu - p) * Acc(2 * k - p);
    }
    return Rational(Int(acc), 4 * Int(p) * Int(p));
}

// Same idea for sum_{mu=0}^{p-1} <<(mu+y)/p>> <<q(mu+y)/p + x>> with
// x = xn/xd, y = yn/yd already reduced mod 1. The two sawtooth arguments have
// fixed denominators d1 = p yd and d2 = p yd xd; their numerators advance by
// constant steps, so each is tracked by one modular counter.
template <typename I, typename Acc>
Rational rademacher_loop(I p, I d1, I d2, I k1, I k2, I step1, I step2) {
    Acc acc = 0;
    for (I mu = 0; mu < p; ++mu) {
        if (k1 != 0 && k2 != 0)
            acc += Acc(2 * k1 - d1) * Acc(2 * k2 - d2);
        k1 += step1;
        if (k1 >= d1) k1 -= d1;
        k2 += step2;
        if (k2 >= d2) k2 -= d2;
    }
    return Rational(Int(acc), 4 * Int(d1) * Int(d2));
}

// int64 counters with int128 accumulator are exact up to this bound
inline const Int small_loop_limit = Int(1) << 40;

inline Int positive_mod(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

} // namespace detail

/// Literal evaluation of sum_{mu mod p} <<mu/p>> <<q mu/p>> for any integer q
/// and p >= 1. This is the defining summation of the Dedekind sum, without
/// the classical coprimality convention; it is periodic and odd in q.
inline Rational sawtooth_sum(const Int& q, const Int& p) {
    if (p < 1) throw input_error("sawtooth_sum: modulus must be positive, got " + to_string(p));
    const Int qr = detail::positive_mod(q, p);
    if (p <= detail::small_loop_limit)
        return detail::sawtooth_sum_loop<std::int64_t, boost::multiprecision::int128_t>(
            qr.convert_to<std::int64_t>(), p.convert_to<std::int64_t>());
    return detail::sawtooth_sum_loop<Int, Int>(qr, p);
}

/// Dedekind sum s(q,p) for gcd(|q|,p) = 1, p >= 1; odd in q.
inline Rational dedekind_sum(const Int& q, const Int& p) {
    if (p < 1) throw input_error("dedekind_sum: modulus must be positive, got " + to_string(p));
    if (boost::multiprecision::gcd(boost::multiprecision::abs(q), p) != 1)
        throw input_error("dedekind_sum: arguments must be coprime, got q = " + to_string(q) +
                          ", p = " + to_string(p));
    return sawtooth_sum(q, p);
}

/// Dedekind-Rademacher sum s(q,p;x,y) = sum_{mu mod p} <<(mu+y)/p>>
/// <<q(mu+y)/p + x>> for coprime positive q, p and rational shifts x, y.
/// Depends on x and y only mod 1.
inline Rational dedekind_rademacher_sum(const Int& q, const Int& p, const Rational& x,
                                        const Rational& y) {
    if (q < 1 || p < 1)
        throw input_error("dedekind_rademacher_sum: q and p must be positive, got q = " +
                          to_string(q) + ", p = " + to_string(p));
    if (boost::multiprecision::gcd(q, p) != 1)
        throw input_error("dedekind_rademacher_sum: arguments must be coprime, got q = " +
                          to_string(q) + ", p = " + to_string(p));

    const Rational xf = fractional_part(x);
    const Rational yf = fractional_part(y);
    const Int xn = numerator(xf), xd = denominator(xf);
    const Int yn = numerator(yf), yd = denominator(yf);

    const Int d1 = p * yd;
    const Int d2 = p * yd * xd;
    // q enters both counters only through multiples of xd*(mu*yd + yn) mod d2,
    // so it may be reduced mod d2 up front; this is what makes huge first
    // arguments cheap.
    const Int qr = q % d2;
    const Int k1 = yn;
    const Int step1 = yd;
    const Int k2 = detail::positive_mod(qr * xd * yn + xn * p * yd, d2);
    const Int step2 = detail::positive_mod(qr * xd * yd, d2);

    if (d2 <= detail::small_loop_limit) {
        using I = std::int64_t;
        return detail::rademacher_loop<I, boost::multiprecision::int128_t>(
            p.convert_to<I>(), d1.convert_to<I>(), d2.convert_to<I>(), k1.convert_to<I>(),
            k2.convert_to<I>(), step1.convert_to<I>(), step2.convert_to<I>());
    }
    return detail::rademacher_loop<Int, Int>(p, d1, d2, k1, k2, step1, step2);
}

/// The integer invariant c(q,p) = -4 s(q,p) + 8 s(q,2p) for odd q, extended
/// to negative arguments by c(q,p) = sign(pq) c(|q|,|p|). Throws
/// internal_error if the value fails to be an integer.
inline Int c_invariant(const Int& q, const Int& p) {
    if (q % 2 == 0)
        throw input_error("c_invariant: q must be odd, got " + to_string(q));
    if (p == 0) throw input_error("c_invariant: p must be nonzero");
    const Int qa = boost::multiprecision::abs(q);
    const Int pa = boost::multiprecision::abs(p);
    if (boost::multiprecision::gcd(qa, pa) != 1)
        throw input_error("c_invariant: arguments must be coprime, got q = " + to_string(q) +
                          ", p = " + to_string(p));
    const Rational v = -4 * sawtooth_sum(qa, pa) + 8 * sawtooth_sum(qa, 2 * pa);
    if (!is_integer(v))
        throw internal_error("c_invariant(" + to_string(q) + ", " + to_string(p) +
                             ") is not an integer: " + to_string(v));
    Int r = numerator(v);
    return sign(p) * sign(q) < 0 ? Int(-r) : r;
}

/// Floating-point cotangent form (1/p) sum_{k odd, 1<=k<2p} cot(pi k/2p)
/// cot(pi q k/2p). Cross-check only: must round to c_invariant(q,p).
inline double c_invariant_cotangent(long long q, long long p) {
    if (q < 1 || p < 1)
        throw input_error("c_invariant_cotangent: q and p must be positive");
    if (q % 2 == 0) throw input_error("c_invariant_cotangent: q must be odd");
    if (std::gcd(q, p) != 1)
        throw input_error("c_invariant_cotangent: arguments must be coprime");
    const long double pi = std::numbers::pi_v<long double>;
    const long double half_period = 2.0L * static_cast<long double>(p);
    const long long qr = q % (2 * p);
    long double total = 0.0L;
    for (long long k = 1; k < 2 * p; k += 2) {
        // q, k odd means qk mod 2p is odd, so neither cotangent blows up
        const long long m = (qr * k) % (2 * p);
        const long double t1 = pi * static_cast<long double>(k) / half_period;
        const long double t2 = pi * static_cast<long double>(m) / half_period;
        total += (std::cos(t1) / std::sin(t1)) * (std::cos(t2) / std::sin(t2));
    }
    return static_cast<double>(total / static_cast<long double>(p));
}

} // namespace mubar
