#pragma once

// Exact rationals backed by boost::multiprecision, plus the string forms used
// on the command line and in JSON output.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "polycob/errors.hpp"

namespace polycob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    const BigInt den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline BigInt pow10(unsigned k) {
    BigInt p = 1;
    for (unsigned i = 0; i < k; ++i) p *= 10;
    return p;
}

/// Decimal digit string to integer; leading zeros are not an octal prefix.
inline BigInt parse_digits(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return BigInt(std::string(digits.substr(first)));
}

}  // namespace detail

/// Parses an integer ("3"), a fraction ("7/2") or a decimal literal ("1.5",
/// ".25", "1e-3"). Decimals are converted exactly, never through binary floating point.
inline Rational parse_rational(std::string_view text) {
    const std::string original(text);
    auto fail = [&]() -> Rational { throw InputError("not a rational literal: '" + original + "'"); };

    if (text.empty()) return fail();
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
        const BigInt d = detail::parse_digits(den);
        if (d == 0) throw InputError("zero denominator in '" + original + "'");
        value = Rational(detail::parse_digits(num), d);
    } else {
        std::string_view mantissa = text;
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = text.substr(0, e);
            auto exp_text = text.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!detail::all_digits(exp_text) || exp_text.size() > 6) return fail();
            exponent = std::stol(std::string(exp_text));
            if (exp_negative) exponent = -exponent;
        }
        std::string_view int_part = mantissa;
        std::string_view frac_part;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            int_part = mantissa.substr(0, dot);
            frac_part = mantissa.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty()) return fail();
        if (!int_part.empty() && !detail::all_digits(int_part)) return fail();
        if (!frac_part.empty() && !detail::all_digits(frac_part)) return fail();

        const BigInt num = detail::parse_digits(std::string(int_part) + std::string(frac_part));
        exponent -= static_cast<long>(frac_part.size());
        if (exponent >= 0)
            value = Rational(num * detail::pow10(static_cast<unsigned>(exponent)));
        else
            value = Rational(num, detail::pow10(static_cast<unsigned>(-exponent)));
    }
    return negative ? Rational(-value) : value;
}

inline BigInt lcm_of(const BigInt& a, const BigInt& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace polycob
