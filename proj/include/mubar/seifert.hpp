#pragma once

#include "mubar/rational.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace mubar {

/// Validated multiplicities of a Seifert fibered homology sphere
/// Sigma(a_1,...,a_n): n >= 3, all a_i >= 2, pairwise coprime. Canonical
/// order is ascending with the (at most one) even multiplicity moved to
/// position 1.
struct SeifertData {
    std::vector<Int> a;
    bool even_case = false;

    int n() const { return static_cast<int>(a.size()); }

    Int product() const {
        Int prod = 1;
        for (const Int& ai : a) prod *= ai;
        return prod;
    }

    std::string name() const {
        std::string s = "Sigma(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ',';
            s += to_string(a[i]);
        }
        return s + ")";
    }

    bool operator==(const SeifertData& o) const { return a == o.a; }
};

/// Integers b_1,...,b_n with sum b_i (a_1...a_n)/a_i = 1. In the even case
/// they may additionally be normalized so that every a_i - b_i is odd.
struct CoefficientVector {
    std::vector<Int> b;
    bool even_normalized = false;
};

inline SeifertData validate(std::vector<Int> raw) {
    if (raw.size() < 3)
        throw input_error("Seifert data requires at least 3 multiplicities, got " +
                          std::to_string(raw.size()));
    for (const Int& v : raw)
        if (v < 2)
            throw input_error("multiplicities must be at least 2, got " + to_string(v));
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
            const Int g = boost::multiprecision::gcd(raw[i], raw[j]);
            if (g != 1)
                throw input_error("multiplicities " + to_string(raw[i]) + " and " +
                                  to_string(raw[j]) + " are not coprime (gcd " + to_string(g) +
                                  ")");
        }
    std::sort(raw.begin(), raw.end());
    SeifertData y;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] % 2 == 0) {
            // pairwise coprimality leaves at most one even entry
            std::rotate(raw.begin(), raw.begin() + i, raw.begin() + i + 1);
            y.even_case = true;
            break;
        }
    }
    y.a = std::move(raw);
    return y;
}

namespace detail {

// inverse of a mod m in (0, m); requires gcd(a, m) = 1
inline Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = positive_mod(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        const Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw internal_error("mod_inverse: arguments not coprime: " + to_string(a) + " mod " +
                             to_string(m));
    return positive_mod(old_s, m);
}

inline Int coefficient_sum(const SeifertData& y, const std::vector<Int>& b) {
    const Int prod = y.product();
    Int total = 0;
    for (int i = 0; i < y.n(); ++i) total += b[i] * (prod / y.a[i]);
    return total;
}

} // namespace detail

/// Solves sum b_i (a_1...a_n)/a_i = 1. For i >= 2, b_i is the inverse of
/// (a_1...a_n)/a_i mod a_i taken in (0, a_i); b_1 makes the sum exact.
inline CoefficientVector solve_coefficients(const SeifertData& y) {
    const Int prod = y.product();
    const int n = y.n();
    CoefficientVector cv;
    cv.b.assign(n, 0);
    Int rest = 0;
    for (int i = 1; i < n; ++i) {
        const Int cofactor = prod / y.a[i];
        cv.b[i] = detail::mod_inverse(cofactor, y.a[i]);
        rest += cv.b[i] * cofactor;
    }
    const Int lead = prod / y.a[0];
    const Int num = 1 - rest;
    if (num % lead != 0)
        throw internal_error("solve_coefficients: leading coefficient is not integral for " +
                             y.name());
    cv.b[0] = num / lead;
    if (detail::coefficient_sum(y, cv.b) != 1)
        throw internal_error("solve_coefficients: defining equation not satisfied for " +
                             y.name());
    return cv;
}

/// In the even case, shifts b_i (i >= 2) by +-a_i until every a_i - b_i is
/// odd, compensating b_1 so the defining equation is preserved. The shift
/// keeping |b_i| smaller is chosen. b_1 comes out odd automatically.
inline CoefficientVector normalize_even(const SeifertData& y, const CoefficientVector& bv) {
    if (!y.even_case)
        throw input_error("normalize_even: " + y.name() + " has no even multiplicity");
    if (detail::coefficient_sum(y, bv.b) != 1)
        throw input_error("normalize_even: coefficients do not satisfy the defining equation");
    CoefficientVector out = bv;
    for (int i = 1; i < y.n(); ++i) {
        if (out.b[i] % 2 == 0) continue;  // a_i odd, so a_i - b_i odd already
        const Int down = out.b[i] - y.a[i];
        const Int up = out.b[i] + y.a[i];
        if (boost::multiprecision::abs(down) < boost::multiprecision::abs(up)) {
            out.b[i] = down;
            out.b[0] += y.a[0];
        } else {
            out.b[i] = up;
            out.b[0] -= y.a[0];
        }
    }
    if (detail::coefficient_sum(y, out.b) != 1)
        throw internal_error("normalize_even: compensation broke the defining equation");
    for (int i = 0; i < y.n(); ++i)
        if ((y.a[i] - out.b[i]) % 2 == 0)
            throw internal_error("normalize_even: parity constraint failed for " + y.name());
    out.even_normalized = true;
    return out;
}

/// Produces another valid coefficient vector by b_i -> b_i + k_i a_i for
/// i >= 2, re-solving b_1. shifts[0] is ignored.
inline CoefficientVector alternate_coefficients(const SeifertData& y, const CoefficientVector& bv,
                                                const std::vector<Int>& shifts) {
    if (static_cast<int>(shifts.size()) != y.n())
        throw input_error("alternate_coefficients: expected " + std::to_string(y.n()) +
                          " shifts, got " + std::to_string(shifts.size()));
    const Int prod = y.product();
    CoefficientVector out;
    out.b.assign(y.n(), 0);
    Int rest = 0;
    for (int i = 1; i < y.n(); ++i) {
        out.b[i] = bv.b[i] + shifts[i] * y.a[i];
        rest += out.b[i] * (prod / y.a[i]);
    }
    const Int lead = prod / y.a[0];
    const Int num = 1 - rest;
    if (num % lead != 0)
        throw internal_error("alternate_coefficients: compensation is not integral");
    out.b[0] = num / lead;
    return out;
}

/// Calls emit for every valid Sigma(a_1,...,a_n) with the given n and all
/// multiplicities <= max_a, in lexicographic order of the ascending tuple.
inline void enumerate_corpus(int n, long long max_a,
                             const std::function<void(const SeifertData&)>& emit) {
    if (n < 3) throw input_error("enumerate_corpus: n must be at least 3");
    std::vector<long long> chosen;
    chosen.reserve(n);
    auto recurse = [&](auto&& self, long long next) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            std::vector<Int> tuple(chosen.begin(), chosen.end());
            emit(validate(std::move(tuple)));
            return;
        }
        const int remaining = n - static_cast<int>(chosen.size());
        for (long long v = next; v + remaining - 1 <= max_a; ++v) {
            bool ok = true;
            for (long long c : chosen)
                if (std::gcd(c, v) != 1) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 2);
}

inline std::vector<SeifertData> enumerate_corpus(int n, long long max_a) {
    std::vector<SeifertData> out;
    enumerate_corpus(n, max_a, [&](const SeifertData& y) { out.push_back(y); });
    return out;
}

} // namespace mubar
