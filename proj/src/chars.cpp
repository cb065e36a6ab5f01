#include "asailab/chars.hpp"

#include <algorithm>
#include <deque>

#include "asailab/euler.hpp"

namespace asailab {

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

ExactValue SmoothChar::eval(const FieldElement& x) const {
    if (x.field() != field_) throw FieldMismatch("character evaluated outside its field");
    int v = x.valuation();
    ExactValue out = unif_value_.pow(v);
    if (level_ > 0) {
        FieldElement u = x;
        const FieldElement& piv = v > 0 ? field_->uniformizer_inverse() : field_->uniformizer();
        for (int i = 0; i < std::abs(v); ++i) u = u * piv;
        std::uint64_t key = field_->unit_key(u, level_);
        auto it = unit_values_.find(key);
        if (it == unit_values_.end()) throw Error("internal: unit key missing from character table");
        out = out * it->second;
    }
    return out;
}

void SmoothChar::minimize() {
    while (level_ >= 2) {
        std::uint64_t trunc = pow_u64(field_->q(), level_ - 1);
        std::map<std::uint64_t, ExactValue> smaller;
        bool constant_on_fibers = true;
        for (const auto& [key, val] : unit_values_) {
            auto [it, inserted] = smaller.emplace(key % trunc, val);
            if (!inserted && !(it->second == val)) {
                constant_on_fibers = false;
                break;
            }
        }
        if (!constant_on_fibers) return;
        unit_values_ = std::move(smaller);
        --level_;
    }
    if (level_ == 1) {
        for (const auto& [key, val] : unit_values_)
            if (!val.is_one()) return;
        unit_values_.clear();
        level_ = 0;
    }
}

SmoothChar SmoothChar::trivial(const FieldPtr& E) {
    SmoothChar chi;
    chi.field_ = E;
    return chi;
}

SmoothChar SmoothChar::absvalue(const FieldPtr& E, const Rat& a) {
    SmoothChar chi;
    chi.field_ = E;
    chi.unif_value_ = ExactValue::q_power(-a * Rat(E->f()));
    return chi;
}

SmoothChar SmoothChar::eta_from_class(const FieldPtr& E, const FieldElement& d) {
    if (d.field() != E) throw FieldMismatch("eta: class representative not in the field");
    if (square_class(d).is_trivial()) throw IsSquareError("eta of a trivial extension");
    auto grp = E->unit_group(1, kDefaultUnitBudget);
    std::map<std::uint64_t, ExactValue> table;
    for (std::size_t i = 0; i < grp->size(); ++i) {
        int s = hilbert_symbol(grp->elements[i], d);
        table[grp->keys[i]] = s == 1 ? ExactValue::one() : ExactValue::minus_one();
    }
    int s = hilbert_symbol(E->uniformizer(), d);
    return from_unit_values(E, 1, std::move(table),
                            s == 1 ? ExactValue::one() : ExactValue::minus_one());
}

SmoothChar SmoothChar::eta(const FieldPtr& Eprime) {
    if (Eprime->is_base()) throw NotInTower("eta needs a quadratic extension");
    return eta_from_class(Eprime->parent(), Eprime->adjoined_square());
}

SmoothChar SmoothChar::from_unit_values(const FieldPtr& E, int level,
                                        std::map<std::uint64_t, ExactValue> values,
                                        const ExactValue& unif_value) {
    SmoothChar chi;
    chi.field_ = E;
    chi.level_ = level;
    chi.unif_value_ = unif_value;
    chi.unit_values_ = std::move(values);
    if (level > 0) {
        if (chi.unit_values_.size() != E->unit_group_cardinality(level))
            throw BadCharacter("unit table does not cover (R/P^n)^* exactly");
        for (const auto& [key, val] : chi.unit_values_)
            if (!val.is_root_of_unity())
                throw BadCharacter("unit values of a smooth character must be roots of unity");
    }
    chi.minimize();
    return chi;
}

SmoothChar SmoothChar::from_generator_values(const FieldPtr& E, int level,
                                             const std::vector<ExactValue>& images,
                                             const ExactValue& unif_value, std::uint64_t budget) {
    if (level == 0) {
        if (!images.empty()) throw BadCharacter("level-0 character takes no generator images");
        SmoothChar chi;
        chi.field_ = E;
        chi.unif_value_ = unif_value;
        return chi;
    }
    std::vector<FieldElement> gens = canonical_unit_generators(E, level);
    if (images.size() != gens.size())
        throw BadCharacter("expected " + std::to_string(gens.size()) + " generator images, got " +
                           std::to_string(images.size()));
    for (const ExactValue& img : images)
        if (!img.is_root_of_unity())
            throw BadCharacter("unit generator images must be roots of unity");

    auto grp = E->unit_group(level, budget);
    std::vector<std::optional<ExactValue>> values(grp->size());
    std::deque<std::uint32_t> work;
    std::uint32_t one_idx = grp->index_of_element(E->one());
    values[one_idx] = ExactValue::one();
    work.push_back(one_idx);
    while (!work.empty()) {
        std::uint32_t i = work.front();
        work.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            std::uint32_t j = grp->index_of_element(grp->elements[i] * gens[k]);
            ExactValue want = *values[i] * images[k];
            if (values[j]) {
                if (!(*values[j] == want))
                    throw BadCharacter("generator images violate the unit group relations");
            } else {
                values[j] = want;
                work.push_back(j);
            }
        }
    }
    std::map<std::uint64_t, ExactValue> table;
    for (std::size_t i = 0; i < grp->size(); ++i) {
        if (!values[i])
            throw BadCharacter("generator images do not span the unit group at level " +
                               std::to_string(level));
        table[grp->keys[i]] = *values[i];
    }
    return from_unit_values(E, level, std::move(table), unif_value);
}

// --- derived characters -------------------------------------------------------

SmoothChar char_mul(const SmoothChar& a, const SmoothChar& b) {
    if (a.field_ != b.field_) throw FieldMismatch("char_mul on different fields");
    SmoothChar chi;
    chi.field_ = a.field_;
    chi.unif_value_ = a.unif_value_ * b.unif_value_;
    int lvl = std::max(a.level_, b.level_);
    chi.level_ = lvl;
    if (lvl > 0) {
        auto grp = a.field_->unit_group(lvl, kDefaultUnitBudget);
        std::uint64_t qa = pow_u64(a.field_->q(), std::max(a.level_, 1));
        std::uint64_t qb = pow_u64(a.field_->q(), std::max(b.level_, 1));
        for (std::size_t i = 0; i < grp->size(); ++i) {
            ExactValue va = a.level_ ? a.unit_values_.at(grp->keys[i] % qa) : ExactValue::one();
            ExactValue vb = b.level_ ? b.unit_values_.at(grp->keys[i] % qb) : ExactValue::one();
            chi.unit_values_[grp->keys[i]] = va * vb;
        }
    }
    chi.minimize();
    return chi;
}

SmoothChar char_inv(const SmoothChar& a) {
    SmoothChar chi = a;
    chi.unif_value_ = a.unif_value_.inverse();
    for (auto& [key, val] : chi.unit_values_) val = val.inverse();
    return chi;
}

SmoothChar char_pow(const SmoothChar& a, long long k) {
    SmoothChar chi = a;
    chi.unif_value_ = a.unif_value_.pow(k);
    for (auto& [key, val] : chi.unit_values_) val = val.pow(k);
    chi.minimize();
    return chi;
}

SmoothChar restrict_char(const SmoothChar& chi, const Embedding& j) {
    if (j.codomain() != chi.field()) throw FieldMismatch("restrict: embedding lands elsewhere");
    const FieldPtr& D = j.domain();
    SmoothChar out;
    out.field_ = D;
    out.unif_value_ = chi.eval(j.apply(D->uniformizer()));
    if (chi.level_ > 0) {
        int e_rel = chi.field()->e() / D->e();
        int lvl = std::max(1, ceil_div(chi.level_, e_rel));
        out.level_ = lvl;
        auto grp = D->unit_group(lvl, kDefaultUnitBudget);
        for (std::size_t i = 0; i < grp->size(); ++i)
            out.unit_values_[grp->keys[i]] = chi.eval(j.apply(grp->elements[i]));
    }
    out.minimize();
    return out;
}

SmoothChar restrict_to(const SmoothChar& chi, const FieldPtr& sub) {
    return restrict_char(chi, Embedding::chain(sub, chi.field()));
}

SmoothChar compose_norm(const SmoothChar& chi, const FieldPtr& E) {
    if (!E->has_subfield(chi.field())) throw NotInTower("compose_norm: character field not below E");
    // level bound, stepping up the chain: unramified steps keep n, ramified
    // steps need 2n-1.
    int lvl = chi.level_;
    std::vector<const LocalField*> steps;
    for (const LocalField* g = E.get(); g != chi.field().get(); g = g->parent().get())
        steps.push_back(g);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        if (lvl > 0) lvl = (*it)->ramified_step() ? 2 * lvl - 1 : lvl;
    SmoothChar out;
    out.field_ = E;
    out.level_ = lvl;
    out.unif_value_ = chi.eval(norm_to(E->uniformizer(), chi.field()));
    if (lvl > 0) {
        auto grp = E->unit_group(lvl, kDefaultUnitBudget);
        for (std::size_t i = 0; i < grp->size(); ++i)
            out.unit_values_[grp->keys[i]] = chi.eval(norm_to(grp->elements[i], chi.field()));
    }
    out.minimize();
    return out;
}

SmoothChar compose_norm_embedded(const SmoothChar& chi, const Embedding& emb,
                                 const GaloisElement& sigma) {
    if (emb.domain() != chi.field()) throw FieldMismatch("compose_norm_embedded: wrong domain");
    const FieldPtr& E = emb.codomain();
    if (sigma.field() != E) throw FieldMismatch("compose_norm_embedded: sigma acts elsewhere");
    int e_rel = E->e() / chi.field()->e();
    if (e_rel != 1 && e_rel != 2) throw NotInTower("embedded norm expects a quadratic extension");
    auto norm = [&](const FieldElement& x) { return emb.pull_back(x * sigma.apply(x)); };
    int lvl = chi.level_ == 0 ? 0 : (e_rel == 2 ? 2 * chi.level_ - 1 : chi.level_);
    SmoothChar out;
    out.field_ = E;
    out.level_ = lvl;
    out.unif_value_ = chi.eval(norm(E->uniformizer()));
    if (lvl > 0) {
        auto grp = E->unit_group(lvl, kDefaultUnitBudget);
        for (std::size_t i = 0; i < grp->size(); ++i)
            out.unit_values_[grp->keys[i]] = chi.eval(norm(grp->elements[i]));
    }
    out.minimize();
    return out;
}

SmoothChar conj_char(const SmoothChar& chi, const GaloisElement& g) {
    if (g.field() != chi.field()) throw NotInTower("conj_char: automorphism of a different field");
    SmoothChar out;
    out.field_ = chi.field_;
    out.level_ = chi.level_;
    out.unif_value_ = chi.eval(g.apply(chi.field()->uniformizer()));
    if (chi.level_ > 0) {
        auto grp = chi.field()->unit_group(chi.level_, kDefaultUnitBudget);
        for (std::size_t i = 0; i < grp->size(); ++i)
            out.unit_values_[grp->keys[i]] = chi.eval(g.apply(grp->elements[i]));
    }
    out.minimize();
    return out;
}

bool is_regular(const SmoothChar& omega, const GaloisElement& sigma) {
    return conj_char(omega, sigma) != omega;
}

std::optional<std::pair<SmoothChar, SmoothChar>> descend_through_norm(const SmoothChar& chi,
                                                                      const FieldPtr& B,
                                                                      std::uint64_t budget) {
    const FieldPtr& E = chi.field();
    if (E->parent() != B) throw NotInTower("descend_through_norm expects the chain parent");
    GaloisElement sigma = GaloisElement::top_conjugation(E);
    // Hilbert 90: chi trivial on ker N_{E/B} iff chi is sigma-invariant.
    if (conj_char(chi, sigma) != chi) return std::nullopt;

    bool ram = E->ramified_step();
    int nchi = std::max(1, chi.level());
    int nmu = ram ? (nchi + 2) / 2 : nchi;
    int m = std::max(nchi, ram ? 2 * nmu - 1 : nmu);

    auto grpE = E->unit_group(m, budget);
    auto grpB = B->unit_group(nmu, budget);
    std::uint64_t qchi = pow_u64(E->q(), nchi);

    std::vector<std::optional<ExactValue>> nm(grpB->size());
    for (std::size_t i = 0; i < grpE->size(); ++i) {
        std::uint32_t j = grpB->index_of_element(grpE->elements[i].norm_to_parent());
        ExactValue val =
            chi.level() ? chi.unit_table().at(grpE->keys[i] % qchi) : ExactValue::one();
        if (nm[j]) {
            if (!(*nm[j] == val))
                throw Error("internal: norm descent mismatch for a sigma-invariant character");
        } else {
            nm[j] = val;
        }
    }

    FieldElement npi = E->uniformizer().norm_to_parent();
    int v0 = npi.valuation();
    FieldElement w1 = npi;
    for (int i = 0; i < v0; ++i) w1 = w1 * B->uniformizer_inverse();
    std::uint32_t w1_idx = grpB->index_of_element(w1);
    ExactValue chi_pi = chi.eval(E->uniformizer());

    auto build = [&](bool flip) {
        std::vector<std::optional<ExactValue>> mu = nm;
        std::size_t uncovered = 0;
        for (const auto& v : mu)
            if (!v) ++uncovered;
        if (uncovered) {
            std::uint32_t w0_idx = 0;
            while (mu[w0_idx]) ++w0_idx;
            const FieldElement& w0 = grpB->elements[w0_idx];
            std::uint32_t sq_idx = grpB->index_of_element(w0 * w0);
            if (!mu[sq_idx]) throw Error("internal: square of a unit escaped the norm image");
            ExactValue mu_w0 = mu[sq_idx]->principal_root(2);
            if (flip) mu_w0 = mu_w0 * ExactValue::minus_one();
            FieldElement w0_inv = w0.inverse();
            for (std::size_t j = 0; j < mu.size(); ++j) {
                if (mu[j]) continue;
                if (j == w0_idx) { mu[j] = mu_w0; continue; }
                std::uint32_t r = grpB->index_of_element(grpB->elements[j] * w0_inv);
                if (!nm[r]) throw Error("internal: quotient of non-norm units escaped the norm image");
                mu[j] = mu_w0 * *nm[r];
            }
        }
        ExactValue mu_pi;
        if (v0 == 1) {
            mu_pi = chi_pi * mu[w1_idx]->inverse();
        } else if (v0 == 2) {
            mu_pi = (chi_pi * mu[w1_idx]->inverse()).principal_root(2);
            if (flip) mu_pi = mu_pi * ExactValue::minus_one();
        } else {
            throw Error("internal: norm of uniformizer has unexpected valuation");
        }
        std::map<std::uint64_t, ExactValue> table;
        for (std::size_t j = 0; j < mu.size(); ++j) table[grpB->keys[j]] = *mu[j];
        return SmoothChar::from_unit_values(B, nmu, std::move(table), mu_pi);
    };

    SmoothChar mu_a = build(false);
    SmoothChar mu_b = build(true);
    if (char_mul(mu_a, SmoothChar::eta(E)) != mu_b)
        throw Error("internal: descent extensions do not differ by eta");
    return std::make_pair(mu_a, mu_b);
}

// tate_lfactor is declared in euler.hpp; it lives here next to the
// unramified-value accessors it relies on.
EulerFactor tate_lfactor(const SmoothChar& chi, const Rat& shift) {
    if (!chi.is_unramified()) return EulerFactor::one();
    long long f = chi.field()->f();
    ExactValue beta = chi.uniformizer_value() * ExactValue::q_power(-shift * Rat(f));
    return EulerFactor(beta.root_fiber(f));
}

}  // namespace asailab
