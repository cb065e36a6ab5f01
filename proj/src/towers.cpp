#include "asailab/towers.hpp"

namespace asailab {

std::string to_string(TowerClass c) {
    switch (c) {
        case TowerClass::Biquadratic: return "Biquadratic";
        case TowerClass::Cyclic4: return "Cyclic4";
        case TowerClass::NonGaloisDihedral8: return "NonGaloisDihedral8";
    }
    return "?";
}

namespace {

void check_tower_shape(const FieldPtr& L) {
    if (L->height() != 2 || !L->parent() || !L->parent()->parent() ||
        !L->parent()->parent()->is_base())
        throw NotInTower("expected a tower L over K over the base field");
}

// First canonical nontrivial square-class representative c of F with
// delta ~ c modulo (K*)^2, if any.
std::optional<FieldElement> matching_base_class(const FieldPtr& K, const FieldElement& delta) {
    const FieldPtr& F = K->parent();
    std::vector<FieldElement> reps = F->square_class_reps();
    for (std::size_t i = 1; i < reps.size(); ++i) {  // skip the trivial class
        if (square_class(delta * K->embed(reps[i])).is_trivial()) return reps[i];
    }
    return std::nullopt;
}

}  // namespace

TowerClass classify_tower(const FieldPtr& L) {
    check_tower_shape(L);
    const FieldPtr& K = L->parent();
    const FieldElement& delta = L->adjoined_square();
    if (matching_base_class(K, delta)) return TowerClass::Biquadratic;
    GaloisElement sigma = GaloisElement::top_conjugation(K);
    if (square_class(sigma.apply(delta) * delta).is_trivial()) return TowerClass::Cyclic4;
    return TowerClass::NonGaloisDihedral8;
}

BiquadraticLattice biquadratic_lattice_for(const FieldPtr& K, const FieldElement& c_rep) {
    if (!K->parent() || !K->parent()->is_base())
        throw NotInTower("K must be quadratic over the base field");
    const FieldPtr& F = K->parent();
    if (c_rep.field() != F) throw FieldMismatch("class representative must lie in the base field");

    BiquadraticLattice lat;
    lat.F = F;
    lat.K = K;
    lat.c_rep = c_rep;
    lat.B = LocalField::make_extension(K, K->embed(c_rep), K->name() + "(sqrt c)");
    lat.Kp = LocalField::make_extension(F, c_rep, F->name() + "(sqrt c)");
    const FieldElement& d = K->adjoined_square();
    lat.Kpp = LocalField::make_extension(F, d * c_rep, F->name() + "(sqrt dc)");

    lat.emb_K = Embedding::chain(K, lat.B);
    lat.emb_Kp = Embedding::aligned_via_sqrt(lat.Kp, lat.B, Embedding::chain(F, K));
    lat.emb_Kpp = Embedding::aligned_via_sqrt(lat.Kpp, lat.B, Embedding::chain(F, K));

    GaloisElement sigma_KF = GaloisElement::top_conjugation(K);
    lat.sigma_B_K = GaloisElement::top_conjugation(lat.B);
    // Of the two extensions of sigma_{K/F} to B, pick per subfield the one
    // fixing its embedded generator (the sign depends on how the adjoined
    // class was reduced).
    GaloisElement tau_plus = GaloisElement::extend(sigma_KF, lat.B, K->one());
    GaloisElement tau_minus = GaloisElement::extend(sigma_KF, lat.B, -K->one());
    auto fixing = [&](const Embedding& emb, const FieldPtr& sub) -> const GaloisElement& {
        FieldElement g = emb.apply(sub->generator());
        if (tau_plus.apply(g).eq_at_precision(g)) return tau_plus;
        if (tau_minus.apply(g).eq_at_precision(g)) return tau_minus;
        throw Error("internal: no extension of sigma_{K/F} fixes " + sub->name());
    };
    lat.sigma_B_Kp = fixing(lat.emb_Kp, lat.Kp);
    lat.sigma_B_Kpp = fixing(lat.emb_Kpp, lat.Kpp);
    // canonical lattices transport trivially
    lat.iso_L_to_B = Embedding::identity(lat.B);
    lat.iso_B_to_L = Embedding::identity(lat.B);
    if (lat.sigma_B_Kp.apply(lat.emb_Kpp.apply(lat.Kpp->generator()))
            .eq_at_precision(lat.emb_Kpp.apply(lat.Kpp->generator())))
        throw Error("internal: the same extension of sigma_{K/F} fixes both K' and K''");
    return lat;
}

BiquadraticLattice biquadratic_lattice(const FieldPtr& L) {
    check_tower_shape(L);
    const FieldPtr& K = L->parent();
    const FieldElement& delta = L->adjoined_square();
    std::optional<FieldElement> c = matching_base_class(K, delta);
    if (!c) throw WrongClass("tower is not biquadratic");
    BiquadraticLattice lat = biquadratic_lattice_for(K, *c);
    // delta = c * t^2 in K: transport between L = K(sqrt delta) and B = K(sqrt c)
    FieldElement ratio = delta * K->embed(c->inverse());
    std::optional<FieldElement> t = try_sqrt(ratio);
    if (!t) throw Error("internal: matched class is not a square ratio");
    lat.iso_L_to_B = Embedding::aligned(L, lat.B, Embedding::identity(K), *t);
    lat.iso_B_to_L = Embedding::aligned(lat.B, L, Embedding::identity(K), t->inverse());
    return lat;
}

namespace {

// Is M = B(sqrt dM) biquadratic over the quadratic subfield 'cand' of B?
// True iff dM may be chosen in cand* x (B*)^2.
bool biquadratic_over(const FieldPtr& M, const FieldPtr& cand, const Embedding& emb_cand) {
    const FieldElement& dM = M->adjoined_square();
    for (const FieldElement& y : cand->square_class_reps()) {
        if (square_class(dM * emb_cand.apply(y)).is_trivial()) return true;
    }
    return false;
}

// Is M Galois over cand?  (sigma_{B/cand}(dM) * dM must be a B-square.)
bool galois_over(const FieldPtr& M, const GaloisElement& sigma_B_cand) {
    const FieldElement& dM = M->adjoined_square();
    return square_class(sigma_B_cand.apply(dM) * dM).is_trivial();
}

}  // namespace

DihedralClosure galois_closure(const FieldPtr& L) {
    if (classify_tower(L) != TowerClass::NonGaloisDihedral8)
        throw WrongClass("galois_closure requires a non-Galois tower");
    const FieldPtr& K = L->parent();
    const FieldPtr& F = K->parent();
    const FieldElement& delta = L->adjoined_square();
    GaloisElement sigma_KF = GaloisElement::top_conjugation(K);
    FieldElement sdelta = sigma_KF.apply(delta);

    // N(delta) = delta * sigma(delta) lies in F and is a nonsquare in K;
    // its F-class representative c defines B = K(sqrt c), biquadratic over F.
    FieldElement ndelta = norm_to(delta, F);
    SquareClass cls = square_class(ndelta);
    if (cls.is_trivial())
        throw Error("internal: N(delta) is a square in F for a non-Galois tower");
    std::vector<FieldElement> reps = F->square_class_reps();
    FieldElement c = cls.val_parity == 0 ? reps[1] : (cls.residue_square ? reps[2] : reps[3]);

    DihedralClosure cl;
    cl.L = L;
    cl.lattice = biquadratic_lattice_for(K, c);
    const FieldPtr& B = cl.lattice.B;

    cl.M = LocalField::make_extension(B, B->embed(delta), B->name() + "(sqrt delta)");
    cl.Lp = LocalField::make_extension(K, sdelta, K->name() + "(sqrt sigma-delta)");
    Embedding KB = Embedding::chain(K, B);
    cl.emb_L = Embedding::aligned_via_sqrt(L, cl.M, KB);
    cl.emb_Lp = Embedding::aligned_via_sqrt(cl.Lp, cl.M, KB);

    cl.sigma_M_B = GaloisElement::top_conjugation(cl.M);
    cl.sigma_M_L = GaloisElement::extend(cl.lattice.sigma_B_K, cl.M, B->one());

    bool p_cyclic = galois_over(cl.M, cl.lattice.sigma_B_Kp) &&
                    !biquadratic_over(cl.M, cl.lattice.Kp, cl.lattice.emb_Kp);
    bool pp_cyclic = galois_over(cl.M, cl.lattice.sigma_B_Kpp) &&
                     !biquadratic_over(cl.M, cl.lattice.Kpp, cl.lattice.emb_Kpp);
    if (p_cyclic && pp_cyclic) {
        // square-class-least tie-break; recorded so output metadata can flag it
        cl.cyclic_subfield = cl.lattice.Kp;
        cl.cyclic_choice_ambiguous = true;
    } else if (p_cyclic) {
        cl.cyclic_subfield = cl.lattice.Kp;
    } else if (pp_cyclic) {
        cl.cyclic_subfield = cl.lattice.Kpp;
    } else {
        throw Error("internal: no cyclic quadratic subfield found in dihedral closure");
    }
    return cl;
}

std::vector<GaloisElement> closure_lifts(const DihedralClosure& cl, const FieldPtr& subfield) {
    const FieldPtr& M = cl.M;
    const GaloisElement& tauB =
        subfield == cl.lattice.Kp ? cl.lattice.sigma_B_Kp : cl.lattice.sigma_B_Kpp;
    FieldElement ratio = tauB.apply(M->adjoined_square()) * M->adjoined_square().inverse();
    std::optional<FieldElement> r = try_sqrt(ratio);
    if (!r) throw Error("internal: sigma_{K/F} does not extend to the closure");
    return {GaloisElement::extend(tauB, M, *r), GaloisElement::extend(tauB, M, -*r)};
}

}  // namespace asailab
