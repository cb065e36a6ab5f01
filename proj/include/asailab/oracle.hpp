#pragma once

#include <set>

#include "asailab/chars.hpp"
#include "asailab/towers.hpp"

namespace asailab {

// Brute-force verifiers for the lemmas the formula pipeline relies on.
// These enumerate unit groups directly and share nothing with the pipeline
// beyond the core field arithmetic.
namespace oracle {

// Exact image of N_{E'/E} at finite level, by enumeration (E = parent of E').
struct NormImage {
    FieldPtr Eprime, E;
    int level = 1;                             // level in E
    std::set<std::uint64_t> unit_norm_keys;    // keys of norms of units
    FieldElement unif_norm;                    // N(w_{E'})
    int unif_norm_val = 0;                     // its valuation in E

    // Membership of x in N(E'^*) modulo level-n unit data.
    bool contains(const FieldElement& x) const;
};

NormImage norm_image_enum(const FieldPtr& Eprime, int level,
                          std::uint64_t budget = kDefaultUnitBudget);

// Lemma check: F* lies in N_{B/K}(B*), both by direct membership of every
// enumerated element of F* and by re-deriving F* as the product of the two
// subgroup images N_{K'/F}(K'*) and N_{K''/F}(K''*).
bool verify_normbiquad(const BiquadraticLattice& lat, int level,
                       std::uint64_t budget = kDefaultUnitBudget);

// Lemma check: every enumerated unit of B with N_{B/K}(u) = 1 (mod P^level)
// admits a Hilbert-90 witness x with u = x/sigma(x), and the witness
// satisfies u = N_{B/K'}(x) / N_{B/K''}(sigma_{B/K}(x)) exactly.
bool verify_ker_lemma(const BiquadraticLattice& lat, int level,
                      std::uint64_t budget = kDefaultUnitBudget);

// Distinguishedness of pi(omega) read off by raw enumeration of K'* and
// K''* (never through the restriction machinery): is omega trivial, resp.
// equal to eta_{B/K'}, on each subfield?
struct DistinguishedVerdict {
    bool trivial_on_Kp = false, trivial_on_Kpp = false;
    bool eta_on_Kp = false, eta_on_Kpp = false;
    bool distinguished() const { return trivial_on_Kp || trivial_on_Kpp; }
    bool eta_distinguished() const { return eta_on_Kp || eta_on_Kpp; }
};

DistinguishedVerdict independent_distinguished(const BiquadraticLattice& lat,
                                               const SmoothChar& omega_B,
                                               std::uint64_t budget = kDefaultUnitBudget);

// Tower classification by constructive square roots (Hensel lifting)
// instead of square-class arithmetic.
TowerClass classify_tower_oracle(const FieldPtr& L);

}  // namespace oracle
}  // namespace asailab
