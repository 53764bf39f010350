#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "chaundy/errors.hpp"

namespace chaundy {

// Arbitrary-precision integers and rationals are the coefficient field for
// everything in this library. cpp_rational keeps values canonical: the
// denominator is positive and gcd(|num|, den) == 1 after every operation,
// with 0 stored as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Nonnegative integer parameters (n, m, k, p, nu, ...).
using Index = std::uint32_t;

inline Int numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

/// num/den with machine integers, normalized by the Rational constructor.
inline Rational frac(long long num, long long den) { return Rational(Int(num), Int(den)); }

inline std::string to_string(const Int& z) { return z.str(); }

/// Canonical rendering: "-3/7" for proper fractions, a plain integer otherwise.
inline std::string to_string(const Rational& q) {
    Int d = denom(q);
    if (d == 1) return numer(q).str();
    return numer(q).str() + "/" + d.str();
}

inline long double to_long_double(const Rational& q) {
    return q.convert_to<long double>();
}

/// Full-precision decimal rendering for numeric (long double) results.
inline std::string decimal_string(long double v) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<long double>::max_digits10) << v;
    return os.str();
}

namespace detail {

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace detail

/// Parses "123", "-4/7" and decimal literals like "0.35" into exact rationals.
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw config_error("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.erase(s.begin());
    }

    auto bad = [&]() -> config_error {
        return config_error("not a rational literal: '" + text + "'");
    };

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) throw bad();
        Int d(den);
        if (d == 0) throw config_error("zero denominator in '" + text + "'");
        value = Rational(Int(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string fracpart = s.substr(dot + 1);
        if (whole.empty() && fracpart.empty()) throw bad();
        if (!whole.empty() && !detail::all_digits(whole)) throw bad();
        if (!fracpart.empty() && !detail::all_digits(fracpart)) throw bad();
        Int scale = 1;
        for (std::size_t i = 0; i < fracpart.size(); ++i) scale *= 10;
        Int num = (whole.empty() ? Int(0) : Int(whole)) * scale +
                  (fracpart.empty() ? Int(0) : Int(fracpart));
        value = Rational(num, scale);
    } else {
        if (!detail::all_digits(s)) throw bad();
        value = Rational(Int(s));
    }
    return negative ? Rational(-value) : value;
}

} // namespace chaundy
