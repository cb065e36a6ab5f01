#pragma once

#include <random>

#include "asailab/local_field.hpp"
#include "asailab/units.hpp"

namespace asailab::testing {

// Deterministic sampling helpers.  std::uniform_int_distribution is
// implementation-defined, so draws go through rejection sampling on the raw
// engine to keep fixtures reproducible across toolchains.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Rng::below(0)");
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
        std::uint64_t x;
        do { x = eng(); } while (x >= limit);
        return x % n;
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// Random unit of E built from random canonical digits at the given level.
inline FieldElement random_unit(Rng& rng, const FieldPtr& E, int level) {
    FieldElement acc = E->residue_rep(1 + rng.below(E->q() - 1));
    FieldElement piv = E->one();
    for (int i = 1; i < level; ++i) {
        piv = piv * E->uniformizer();
        std::uint64_t idx = rng.below(E->q());
        if (idx) acc = acc + E->residue_rep(idx) * piv;
    }
    return acc;
}

inline FieldElement random_nonzero(Rng& rng, const FieldPtr& E, int level = 3, int val_span = 2) {
    FieldElement u = random_unit(rng, E, level);
    long long v = rng.range(-val_span, val_span);
    return u * (v >= 0 ? E->uniformizer() : E->uniformizer_inverse()).pow(std::abs(v));
}

}  // namespace asailab::testing
