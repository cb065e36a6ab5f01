#pragma once

#include <optional>
#include <string>

#include "asailab/galois.hpp"

namespace asailab {

// Classification of a tower L = K(sqrt delta) over K over F, L/K quadratic.
enum class TowerClass { Biquadratic, Cyclic4, NonGaloisDihedral8 };

std::string to_string(TowerClass c);

// Decides the class from square-class data only: Biquadratic iff delta can
// be chosen in F* * (K*)^2, otherwise Galois (cyclic of order 4) iff
// sigma(delta)/delta is a square of K, otherwise non-Galois with dihedral
// closure of order 8.
TowerClass classify_tower(const FieldPtr& L);

// The lattice F < {K, K', K''} < B of a biquadratic extension, with the
// three conjugations of B/F and the embeddings of the three quadratic
// subfields.  B is constructed canonically as K(sqrt c) for the chosen
// F-class representative c; when the lattice is built from a user tower
// L = K(sqrt delta), the isomorphism L <-> B is carried along.
struct BiquadraticLattice {
    FieldPtr F, K, Kp, Kpp, B;
    FieldElement c_rep;  // in F: L = K(sqrt c) up to K-squares
    Embedding emb_K;     // K  -> B (chain)
    Embedding emb_Kp;    // K' -> B
    Embedding emb_Kpp;   // K''-> B
    GaloisElement sigma_B_K;    // fixes K
    GaloisElement sigma_B_Kp;   // fixes K'
    GaloisElement sigma_B_Kpp;  // fixes K''
    std::optional<Embedding> iso_L_to_B;  // from the originating L, when any
    std::optional<Embedding> iso_B_to_L;
};

// Lattice of B := K(sqrt c) for a nonsquare class representative c of F.
BiquadraticLattice biquadratic_lattice_for(const FieldPtr& K, const FieldElement& c_rep);

// Lattice built from a tower L = K(sqrt delta) with classify_tower(L) ==
// Biquadratic; WrongClass otherwise.
BiquadraticLattice biquadratic_lattice(const FieldPtr& L);

// Figure-2 data of a non-Galois quartic L/F: the degree-8 Galois closure
// M = B(sqrt delta) with its biquadratic-over-F subfield B, the conjugate
// quartic L', the conjugations sigma_{M/L}, sigma_{M/B}, and the quadratic
// subfield over which M is cyclic of degree 4.
struct DihedralClosure {
    FieldPtr L;
    BiquadraticLattice lattice;  // B over K over F with K' and K''
    FieldPtr M;
    FieldPtr Lp;
    Embedding emb_L;   // L  -> M
    Embedding emb_Lp;  // L' -> M
    GaloisElement sigma_M_L;
    GaloisElement sigma_M_B;
    FieldPtr cyclic_subfield;  // lattice.Kp or lattice.Kpp with M/. cyclic
    bool cyclic_choice_ambiguous = false;
};

DihedralClosure galois_closure(const FieldPtr& L);

// The two extensions to M of the involution of B fixing the given quadratic
// subfield K' or K''.  Over the cyclic subfield these are the order-4
// rotations of the dihedral group; over the other one they are reflections.
std::vector<GaloisElement> closure_lifts(const DihedralClosure& cl, const FieldPtr& subfield);

}  // namespace asailab
