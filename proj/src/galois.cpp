#include "asailab/galois.hpp"

namespace asailab {

// --- GaloisElement -----------------------------------------------------------

GaloisElement GaloisElement::identity(const FieldPtr& field) {
    GaloisElement g;
    g.field_ = field;
    if (!field->is_base()) g.factor_ = field->parent()->one();
    return g;
}

GaloisElement GaloisElement::top_conjugation(const FieldPtr& field) {
    if (field->is_base()) throw NotInTower("base field has no conjugation");
    GaloisElement g;
    g.field_ = field;
    g.factor_ = -(field->parent()->one());
    return g;
}

GaloisElement GaloisElement::extend(const GaloisElement& parent_action, const FieldPtr& field,
                                    const FieldElement& factor) {
    if (field->is_base()) throw NotInTower("cannot extend to the base field");
    if (parent_action.field_ != field->parent())
        throw NotInTower("parent action acts on the wrong field");
    if (factor.field() != field->parent()) throw FieldMismatch("extension factor not in the parent");
    const FieldElement& d = field->adjoined_square();
    if (!parent_action.apply(d).eq_at_precision(factor * factor * d))
        throw Error("invalid Galois extension: tau(d) != factor^2 * d");
    GaloisElement g;
    g.field_ = field;
    g.parent_action_ = std::make_shared<GaloisElement>(parent_action);
    g.factor_ = factor;
    return g;
}

FieldElement GaloisElement::apply(const FieldElement& x) const {
    if (x.field() != field_) throw NotInTower("galois element applied outside its field");
    if (field_->is_base()) return x;
    FieldElement a = x.parent_lo(), b = x.parent_hi();
    if (parent_action_) {
        a = parent_action_->apply(a);
        b = parent_action_->apply(b);
    }
    b = b * factor_;
    std::vector<PadicNum> out;
    out.reserve(x.coords().size());
    out.insert(out.end(), a.coords().begin(), a.coords().end());
    out.insert(out.end(), b.coords().begin(), b.coords().end());
    return {field_, std::move(out)};
}

GaloisElement GaloisElement::compose(const GaloisElement& other) const {
    if (field_ != other.field_) throw NotInTower("composing automorphisms of different fields");
    if (field_->is_base()) return *this;
    GaloisElement g;
    g.field_ = field_;
    // (g1 g2)(a + b*x) = g1(g2 a) + g1(g2 b) * [g1(f2) * f1] * x
    FieldElement f2 = other.factor_;
    FieldElement g1f2 = parent_action_ ? parent_action_->apply(f2) : f2;
    g.factor_ = g1f2 * factor_;
    if (parent_action_ && other.parent_action_)
        g.parent_action_ = std::make_shared<GaloisElement>(parent_action_->compose(*other.parent_action_));
    else if (parent_action_)
        g.parent_action_ = parent_action_;
    else if (other.parent_action_)
        g.parent_action_ = other.parent_action_;
    return g;
}

bool GaloisElement::is_identity() const {
    if (field_->is_base()) return true;
    if (!factor_.eq_at_precision(field_->parent()->one())) return false;
    return parent_action_ ? parent_action_->is_identity() : true;
}

int GaloisElement::order(int max_order) const {
    GaloisElement acc = *this;
    for (int k = 1; k <= max_order; ++k) {
        if (acc.is_identity()) return k;
        acc = acc.compose(*this);
    }
    throw Error("automorphism order exceeds " + std::to_string(max_order));
}

FieldElement galois_apply(const GaloisElement& g, const FieldElement& x) {
    if (g.field() != x.field()) throw NotInTower("galois_apply: element outside the automorphism's field");
    return g.apply(x);
}

// --- Embedding ---------------------------------------------------------------

Embedding Embedding::identity(const FieldPtr& field) {
    Embedding e;
    e.kind_ = Kind::Identity;
    e.domain_ = field;
    e.codomain_ = field;
    return e;
}

Embedding Embedding::chain(const FieldPtr& sub, const FieldPtr& sup) {
    if (sub == sup) return identity(sub);
    if (sup->is_base()) throw NotInTower(sub->name() + " is not below " + sup->name());
    Embedding e;
    e.kind_ = Kind::Lift;
    e.domain_ = sub;
    e.codomain_ = sup;
    e.inner_ = std::make_shared<Embedding>(chain(sub, sup->parent()));
    return e;
}

Embedding Embedding::aligned(const FieldPtr& domain, const FieldPtr& codomain,
                             const Embedding& parent_emb, const FieldElement& twist) {
    if (domain->is_base() || codomain->is_base())
        throw NotInTower("aligned embedding needs extension fields on both sides");
    if (parent_emb.domain() != domain->parent() || parent_emb.codomain() != codomain->parent())
        throw FieldMismatch("aligned embedding: parent map has wrong endpoints");
    if (twist.field() != codomain->parent()) throw FieldMismatch("twist not in codomain parent");
    FieldElement lhs = parent_emb.apply(domain->adjoined_square());
    FieldElement rhs = twist * twist * codomain->adjoined_square();
    if (!lhs.eq_at_precision(rhs))
        throw Error("invalid embedding: emb(d_dom) != twist^2 * d_cod");
    Embedding e;
    e.kind_ = Kind::Aligned;
    e.domain_ = domain;
    e.codomain_ = codomain;
    e.parent_emb_ = std::make_shared<Embedding>(parent_emb);
    e.twist_ = twist;
    e.twist_inv_ = twist.inverse();
    return e;
}

Embedding Embedding::aligned_via_sqrt(const FieldPtr& domain, const FieldPtr& codomain,
                                      const Embedding& parent_emb) {
    FieldElement ratio =
        parent_emb.apply(domain->adjoined_square()) * codomain->adjoined_square().inverse();
    std::optional<FieldElement> twist = try_sqrt(ratio);
    if (!twist)
        throw Error("no embedding: adjoined squares differ by a nonsquare between " +
                    domain->name() + " and " + codomain->name());
    return aligned(domain, codomain, parent_emb, *twist);
}

FieldElement Embedding::apply(const FieldElement& x) const {
    if (x.field() != domain_) throw NotInTower("embedding applied outside its domain");
    switch (kind_) {
        case Kind::Identity:
            return x;
        case Kind::Lift:
            return codomain_->embed(inner_->apply(x));
        case Kind::Aligned: {
            FieldElement a = x.parent_lo(), b = x.parent_hi();
            FieldElement A = parent_emb_ ? parent_emb_->apply(a) : a;
            FieldElement B = (parent_emb_ ? parent_emb_->apply(b) : b) * twist_;
            std::vector<PadicNum> out;
            out.reserve(A.coords().size() * 2);
            out.insert(out.end(), A.coords().begin(), A.coords().end());
            out.insert(out.end(), B.coords().begin(), B.coords().end());
            return {codomain_, std::move(out)};
        }
    }
    throw Error("unreachable");
}

FieldElement Embedding::pull_back(const FieldElement& y) const {
    if (y.field() != codomain_) throw NotInTower("pull_back applied outside the codomain");
    switch (kind_) {
        case Kind::Identity:
            return y;
        case Kind::Lift:
            return inner_->pull_back(y.project_to_parent());
        case Kind::Aligned: {
            FieldElement ya = y.parent_lo();
            FieldElement yb = y.parent_hi() * twist_inv_;
            FieldElement a = parent_emb_ ? parent_emb_->pull_back(ya) : ya;
            FieldElement b = parent_emb_ ? parent_emb_->pull_back(yb) : yb;
            std::vector<PadicNum> out;
            out.reserve(a.coords().size() * 2);
            out.insert(out.end(), a.coords().begin(), a.coords().end());
            out.insert(out.end(), b.coords().begin(), b.coords().end());
            return {domain_, std::move(out)};
        }
    }
    throw Error("unreachable");
}

}  // namespace asailab
