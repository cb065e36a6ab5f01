#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "asailab/errors.hpp"

namespace asailab {

// Exact rational scalar. boost::rational keeps values canonical
// (reduced, positive denominator), which the serialization layer relies on.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

// Reduce into [0,1); used for angles r of roots of unity e^{2*pi*i*r}.
inline Rat mod1(const Rat& x) {
    long long q = x.numerator() / x.denominator();
    Rat r = x - Rat(q);
    if (r < Rat(0)) r += Rat(1);
    return r;
}

inline std::string to_string(const Rat& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

// Parses "a" or "a/b".
inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw SpecError("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::logic_error&) {
        bad();
    }
    return Rat(0);  // unreachable
}

}  // namespace asailab
