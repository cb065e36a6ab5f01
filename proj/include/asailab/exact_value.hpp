#pragma once

#include <compare>
#include <string>
#include <vector>

#include "asailab/rational.hpp"

namespace asailab {

// Element of the value group { e^{2*pi*i*r} * q_F^a : r in Q/Z, a in Q },
// written multiplicatively.  Character values, q-power twists q^{s0} and
// Euler-factor inverse roots all live here.  The representation (r mod 1, a)
// is canonical, so equality and ordering are exact.
struct ExactValue {
    Rat zeta;  // r with 0 <= r < 1, meaning e^{2*pi*i*r}
    Rat qexp;  // a, meaning q_F^a

    ExactValue() : zeta(0), qexp(0) {}
    ExactValue(Rat z, Rat q) : zeta(mod1(z)), qexp(q) {}

    static ExactValue one() { return {}; }
    static ExactValue minus_one() { return {Rat(1, 2), Rat(0)}; }
    static ExactValue root_of_unity(Rat r) { return {r, Rat(0)}; }
    static ExactValue q_power(Rat a) { return {Rat(0), a}; }

    bool is_one() const { return zeta.numerator() == 0 && qexp.numerator() == 0; }
    bool is_root_of_unity() const { return qexp.numerator() == 0; }

    ExactValue operator*(const ExactValue& o) const { return {zeta + o.zeta, qexp + o.qexp}; }
    ExactValue inverse() const { return {-zeta, -qexp}; }

    ExactValue pow(long long k) const { return {zeta * Rat(k), qexp * Rat(k)}; }

    // Principal f-th root: divide both components by f.
    ExactValue principal_root(long long f) const {
        return {zeta / Rat(f), qexp / Rat(f)};
    }

    // The full fiber of f-th roots, principal root first.
    std::vector<ExactValue> root_fiber(long long f) const {
        std::vector<ExactValue> out;
        ExactValue pr = principal_root(f);
        out.reserve(static_cast<std::size_t>(f));
        for (long long k = 0; k < f; ++k) out.push_back({pr.zeta + Rat(k, f), pr.qexp});
        return out;
    }

    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        return a.zeta == b.zeta && a.qexp == b.qexp;
    }
    friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

    // Canonical order: lexicographic on (qexp, zeta).
    friend bool operator<(const ExactValue& a, const ExactValue& b) {
        if (a.qexp != b.qexp) return a.qexp < b.qexp;
        return a.zeta < b.zeta;
    }

    // "1", "e(1/8)", "q^-2", "e(1/2)*q^1/2", ...
    std::string str() const {
        std::string z = zeta.numerator() == 0 ? "" : "e(" + to_string(zeta) + ")";
        std::string q = qexp.numerator() == 0 ? "" : "q^" + to_string(qexp);
        if (z.empty() && q.empty()) return "1";
        if (z.empty()) return q;
        if (q.empty()) return z;
        return z + "*" + q;
    }
};

}  // namespace asailab
