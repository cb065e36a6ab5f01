#include "asailab/oracle.hpp"

#include <deque>

namespace asailab {
namespace oracle {

bool NormImage::contains(const FieldElement& x) const {
    int v = x.valuation();
    if (v % unif_norm_val != 0) return false;
    FieldElement u = x * unif_norm.pow(-(v / unif_norm_val));
    return unit_norm_keys.count(E->unit_key(u, level)) > 0;
}

NormImage norm_image_enum(const FieldPtr& Eprime, int level, std::uint64_t budget) {
    if (Eprime->is_base()) throw NotInTower("norm_image_enum needs a quadratic extension");
    NormImage ni;
    ni.Eprime = Eprime;
    ni.E = Eprime->parent();
    ni.level = level;
    int m = Eprime->ramified_step() ? 2 * level - 1 : level;
    auto grp = Eprime->unit_group(m, budget);
    for (const FieldElement& x : grp->elements)
        ni.unit_norm_keys.insert(ni.E->unit_key(x.norm_to_parent(), level));
    ni.unif_norm = Eprime->uniformizer().norm_to_parent();
    ni.unif_norm_val = ni.unif_norm.valuation();
    return ni;
}

namespace {

// Closure of the subgroup of (R_F/P^n)^* x Z/2 generated by the given
// (unit, valuation-parity) pairs; returns its size.
std::size_t generated_subgroup_size(const FieldPtr& F, int level,
                                    const std::vector<std::pair<FieldElement, int>>& gens,
                                    std::uint64_t budget) {
    auto grp = F->unit_group(level, budget);
    std::vector<bool> seen(grp->size() * 2, false);
    std::deque<std::pair<std::uint32_t, int>> work;
    std::uint32_t one = grp->index_of_element(F->one());
    seen[one * 2] = true;
    work.emplace_back(one, 0);
    std::size_t count = 1;
    while (!work.empty()) {
        auto [i, par] = work.front();
        work.pop_front();
        for (const auto& [g, gpar] : gens) {
            std::uint32_t j = grp->index_of_element(grp->elements[i] * g);
            int npar = (par + gpar) % 2;
            if (!seen[j * 2 + npar]) {
                seen[j * 2 + npar] = true;
                ++count;
                work.emplace_back(j, npar);
            }
        }
    }
    return count;
}

}  // namespace

bool verify_normbiquad(const BiquadraticLattice& lat, int level, std::uint64_t budget) {
    NormImage ni = norm_image_enum(lat.B, level, budget);

    // direct route: every element of F* (units at the level, times w_F^{0,1})
    // is a norm from B to K
    auto grpF = lat.F->unit_group(level, budget);
    for (const FieldElement& u : grpF->elements) {
        if (!ni.contains(lat.K->embed(u))) return false;
        if (!ni.contains(lat.K->embed(u * lat.F->uniformizer()))) return false;
    }

    // proof route: the two subgroup images N_{K'/F}(K'*) and N_{K''/F}(K''*)
    // generate all of F* at this level
    std::vector<std::pair<FieldElement, int>> gens;
    for (const FieldPtr& sub : {lat.Kp, lat.Kpp}) {
        NormImage sub_ni = norm_image_enum(sub, level, budget);
        for (std::uint64_t key : sub_ni.unit_norm_keys) {
            auto sub_grp = lat.F->unit_group(level, budget);
            gens.emplace_back(sub_grp->elements[sub_grp->index_of_key(key)], 0);
        }
        FieldElement un = sub_ni.unif_norm;
        int v = sub_ni.unif_norm_val;
        gens.emplace_back(un * lat.F->uniformizer_inverse().pow(v), v % 2);
    }
    std::size_t full = grpF->size() * 2;
    return generated_subgroup_size(lat.F, level, gens, budget) == full;
}

bool verify_ker_lemma(const BiquadraticLattice& lat, int level, std::uint64_t budget) {
    const FieldPtr& B = lat.B;
    auto grpB = B->unit_group(level, budget);
    auto witnesses = B->unit_group(level + 1, budget);
    const GaloisElement& sig = lat.sigma_B_K;
    const GaloisElement& sig_p = lat.sigma_B_Kp;
    const GaloisElement& sig_pp = lat.sigma_B_Kpp;

    for (const FieldElement& u : grpB->elements) {
        if (!(u.norm_to_parent() - lat.K->one()).is_zero_at_precision(level)) continue;
        // Hilbert-90 witness: u = x / sigma(x), x searched over units and
        // units times the uniformizer
        bool witnessed = false;
        for (const FieldElement& x0 : witnesses->elements) {
            for (int with_pi = 0; with_pi < 2 && !witnessed; ++with_pi) {
                FieldElement x = with_pi ? x0 * B->uniformizer() : x0;
                if (!(u * sig.apply(x) - x).is_zero_at_precision(level)) continue;
                // identity of the lemma, recomputed exactly
                FieldElement np = x * sig_p.apply(x);
                FieldElement sx = sig.apply(x);
                FieldElement npp = sx * sig_pp.apply(sx);
                if ((np * npp.inverse() - u).is_zero_at_precision(level)) witnessed = true;
            }
            if (witnessed) break;
        }
        if (!witnessed) return false;
    }
    return true;
}

DistinguishedVerdict independent_distinguished(const BiquadraticLattice& lat,
                                               const SmoothChar& omega_B, std::uint64_t budget) {
    if (omega_B.field() != lat.B) throw FieldMismatch("omega must live on the lattice's B");
    DistinguishedVerdict verdict;
    int n_omega = std::max(1, omega_B.level());
    const FieldElement& dK = lat.K->adjoined_square();

    auto scan = [&](const FieldPtr& sub, const Embedding& emb, bool& trivial, bool& eta_match) {
        int e_rel = lat.B->e() / sub->e();
        int lvl = (n_omega + e_rel - 1) / e_rel;
        auto grp = sub->unit_group(lvl, budget);
        SmoothChar eta_sub = SmoothChar::eta_from_class(sub, sub->embed(dK));
        trivial = true;
        eta_match = true;
        for (const FieldElement& u : grp->elements) {
            ExactValue v = omega_B.eval(emb.apply(u));
            if (!v.is_one()) trivial = false;
            if (!(v == eta_sub.eval(u))) eta_match = false;
            if (!trivial && !eta_match) break;
        }
        ExactValue vpi = omega_B.eval(emb.apply(sub->uniformizer()));
        if (!vpi.is_one()) trivial = false;
        if (!(vpi == eta_sub.eval(sub->uniformizer()))) eta_match = false;
    };

    scan(lat.Kp, lat.emb_Kp, verdict.trivial_on_Kp, verdict.eta_on_Kp);
    scan(lat.Kpp, lat.emb_Kpp, verdict.trivial_on_Kpp, verdict.eta_on_Kpp);
    return verdict;
}

TowerClass classify_tower_oracle(const FieldPtr& L) {
    const FieldPtr& K = L->parent();
    const FieldPtr& F = K->parent();
    if (!F || !F->is_base()) throw NotInTower("expected a tower L over K over the base");
    const FieldElement& delta = L->adjoined_square();
    std::vector<FieldElement> reps = F->square_class_reps();
    for (std::size_t i = 1; i < reps.size(); ++i)
        if (try_sqrt(delta * K->embed(reps[i]))) return TowerClass::Biquadratic;
    GaloisElement sigma = GaloisElement::top_conjugation(K);
    if (try_sqrt(sigma.apply(delta) * delta)) return TowerClass::Cyclic4;
    return TowerClass::NonGaloisDihedral8;
}

}  // namespace oracle
}  // namespace asailab
