#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <string_view>

#include "fairchore/errors.hpp"

namespace fairchore {

// Every quantity in the library (weights, disutilities, payments, ratios) is an
// exact rational; nothing is ever rounded. boost keeps the value reduced with a
// positive denominator, which is the canonical form files and hashes rely on.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string format_rational(const Rational& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

/// Parses "p", "-p" or "p/q" with q > 0 after reduction. Rejects anything else
/// (in particular decimal notation).
inline Rational parse_rational(std::string_view text) {
    const std::string input(text);
    auto fail = [&] { throw ValidationError("invalid rational: '" + input + "'"); };

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.empty()) fail();
    }
    auto check_integer = [&](std::string_view s, bool allow_sign) {
        if (s.empty()) fail();
        std::size_t start = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
        if (start == s.size()) fail();
        for (std::size_t k = start; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') fail();
    };
    check_integer(num, true);
    BigInt numerator{std::string(num)};
    if (den.empty()) return Rational(numerator);
    check_integer(den, false);
    BigInt denominator{std::string(den)};
    if (denominator == 0) throw ValidationError("zero denominator in '" + input + "'");
    return Rational(numerator, denominator);
}

}  // namespace fairchore
