#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gzfloer {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical fraction string: "p" when the denominator is 1, else "p/q".
inline std::string frac_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) {
        s += "/";
        s += den(r).str();
    }
    return s;
}

// Parses "p" or "p/q" (optional leading '-', no whitespace). Throws on malformed
// input or zero denominator.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    std::size_t slash = s.find('/');
    auto parse_int = [&](std::string_view part) -> Int {
        if (part.empty()) fail();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) fail();
        for (std::size_t k = i; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9') fail();
        return Int(std::string(part));
    };
    Int p = parse_int(s.substr(0, slash));
    Int q = 1;
    if (slash != std::string_view::npos) {
        q = parse_int(s.substr(slash + 1));
        if (q == 0) fail();
    }
    return Rational(p, q);
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace gzfloer
