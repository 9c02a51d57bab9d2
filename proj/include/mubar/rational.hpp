#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <sstream>

namespace mubar {

// Exact arbitrary-precision arithmetic. Rational values are kept in lowest
// terms with positive denominator, so equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad arguments supplied by a caller (CLI maps this to exit code 1).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical consistency check failed inside the library. Always a bug:
// either a convention mismatch or a broken theorem (CLI exit code 2).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// floor(n/d) for d > 0
inline Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if (n % d != 0 && (n < 0) != (d < 0)) --q;
    return q;
}

inline Int floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

/// {r} = r - [r], always in [0, 1)
inline Rational fractional_part(const Rational& r) { return r - Rational(floor(r)); }

/// Sawtooth <<r>>: 0 on integers, {r} - 1/2 otherwise. Odd, 1-periodic,
/// takes values in (-1/2, 1/2).
inline Rational sawtooth(const Rational& r) {
    if (is_integer(r)) return Rational(0);
    return fractional_part(r) - Rational(1, 2);
}

inline int sign(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }
inline int sign(const Rational& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Canonical text form: "n/d" in lowest terms, "n" when integral.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string to_string(const Int& v) { return v.str(); }

/// Parses "n" or "n/d" (optional leading sign); canonicalizes the result.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> Int {
        if (s.empty()) throw input_error("empty integer in rational literal");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw input_error("sign without digits in rational literal");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw input_error("invalid character in rational literal: '" + std::string(s) + "'");
        return Int(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in rational literal");
    return Rational(num, den);
}

} // namespace mubar
