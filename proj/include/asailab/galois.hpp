#pragma once

#include <memory>

#include "asailab/local_field.hpp"

namespace asailab {

// Automorphism of a tower field over some subfield, stored recursively:
// x = a + b*g maps to tau(a) + tau(b)*factor*g, where tau is the action on
// the parent and factor is an element of the parent with
// tau(d) = factor^2 * d for the adjoined square d.  This covers the Galois
// groups of all lattices in scope (Klein four, cyclic 4, dihedral 8) with
// exact coordinate arithmetic.
class GaloisElement {
  public:
    static GaloisElement identity(const FieldPtr& field);
    // sigma_{E/parent}: fixes the parent, negates the adjoined root.
    static GaloisElement top_conjugation(const FieldPtr& field);
    // Extend an automorphism of the parent by g |-> factor * g; validates
    // tau(d) == factor^2 * d at working precision.
    static GaloisElement extend(const GaloisElement& parent_action, const FieldPtr& field,
                                const FieldElement& factor);

    const FieldPtr& field() const { return field_; }
    FieldElement apply(const FieldElement& x) const;
    GaloisElement compose(const GaloisElement& other) const;  // this after other
    bool is_identity() const;
    int order(int max_order = 8) const;

    GaloisElement() = default;

  private:
    FieldPtr field_;
    std::shared_ptr<const GaloisElement> parent_action_;  // null = identity on parent
    FieldElement factor_;                                 // in the parent field
};

// galois_apply with the tower-membership check of the public operation.
FieldElement galois_apply(const GaloisElement& g, const FieldElement& x);

// Field embedding j : domain -> codomain between tower fields, in one of
// three shapes: the identity, a lift along the codomain's own chain, or an
// "aligned" map sending the top generator of the domain to twist * g where g
// is the top generator of the codomain.  Every embedding needed by the
// extension lattices here (K' and K'' into B, L and L' into M, the
// transport between K(sqrt delta) and the canonical K(sqrt c)) has this
// shape, which keeps pull-backs free of linear algebra.
class Embedding {
  public:
    static Embedding identity(const FieldPtr& field);
    // Canonical embedding of a chain subfield.
    static Embedding chain(const FieldPtr& sub, const FieldPtr& sup);
    // g_dom |-> twist * g_cod over parent_emb; validates
    // parent_emb(d_dom) == twist^2 * d_cod.
    static Embedding aligned(const FieldPtr& domain, const FieldPtr& codomain,
                             const Embedding& parent_emb, const FieldElement& twist);
    // Same, deriving the twist as sqrt(parent_emb(d_dom) / d_cod).
    static Embedding aligned_via_sqrt(const FieldPtr& domain, const FieldPtr& codomain,
                                      const Embedding& parent_emb);

    const FieldPtr& domain() const { return domain_; }
    const FieldPtr& codomain() const { return codomain_; }

    FieldElement apply(const FieldElement& x) const;
    // Inverse image; NotInTower if y is provably outside the image.
    FieldElement pull_back(const FieldElement& y) const;

    Embedding() = default;

  private:
    enum class Kind { Identity, Lift, Aligned };
    Kind kind_ = Kind::Identity;
    FieldPtr domain_, codomain_;
    std::shared_ptr<const Embedding> inner_;       // Lift: domain -> codomain->parent
    std::shared_ptr<const Embedding> parent_emb_;  // Aligned: null = parents identical
    FieldElement twist_;                           // Aligned: in codomain->parent
    FieldElement twist_inv_;
};

}  // namespace asailab
