#include "asailab/asai.hpp"

#include <algorithm>

namespace asailab {

namespace {

void check_quadratic_over_base(const FieldPtr& K) {
    if (K->height() != 1 || !K->parent()->is_base())
        throw Inadmissible("representation field must be quadratic over the base field");
}

void check_tower(const FieldPtr& L) {
    if (L->height() != 2 || !L->parent()->parent()->is_base())
        throw Inadmissible("dihedral parameter field must be quadratic over K quadratic over F");
}

}  // namespace

// --- representations ----------------------------------------------------------

GL2Rep GL2Rep::dihedral(FieldPtr L, SmoothChar omega) {
    check_tower(L);
    if (omega.field() != L) throw Inadmissible("omega must be a character of L");
    if (!is_regular(omega, GaloisElement::top_conjugation(L)))
        throw Inadmissible("omega factors through the norm: pi(omega) is not supercuspidal");
    GL2Rep pi;
    pi.K_ = L->parent();
    pi.data_ = DihedralData{std::move(L), std::move(omega)};
    return pi;
}

GL2Rep GL2Rep::steinberg(SmoothChar chi) {
    check_quadratic_over_base(chi.field());
    GL2Rep pi;
    pi.K_ = chi.field();
    pi.data_ = SteinbergData{std::move(chi)};
    return pi;
}

GL2Rep GL2Rep::principal(SmoothChar lambda, SmoothChar mu) {
    check_quadratic_over_base(lambda.field());
    if (lambda.field() != mu.field()) throw Inadmissible("lambda and mu live on different fields");
    SmoothChar ratio = char_mul(lambda, char_inv(mu));
    const FieldPtr& K = lambda.field();
    if (ratio == SmoothChar::absvalue(K, Rat(1)) || ratio == SmoothChar::absvalue(K, Rat(-1)))
        throw Inadmissible("lambda/mu = |.|^{+-1}: pi(lambda,mu) is not irreducible");
    GL2Rep pi;
    pi.K_ = K;
    pi.data_ = PrincipalData{std::move(lambda), std::move(mu)};
    return pi;
}

std::string GL2Rep::kind_name() const {
    if (is_dihedral()) return "dihedral-supercuspidal";
    if (is_steinberg()) return "twisted-steinberg";
    return "principal-series";
}

WDRep2 WDRep2::induced(FieldPtr L, SmoothChar omega) {
    check_tower(L);
    if (omega.field() != L) throw Inadmissible("omega must be a character of L");
    if (!is_regular(omega, GaloisElement::top_conjugation(L)))
        throw Inadmissible("omega is not regular: the induced parameter is reducible");
    WDRep2 rho;
    rho.kind_ = Kind::Induced;
    rho.K_ = L->parent();
    rho.data_ = DihedralData{std::move(L), std::move(omega)};
    return rho;
}

WDRep2 WDRep2::special_twist(SmoothChar chi) {
    check_quadratic_over_base(chi.field());
    WDRep2 rho;
    rho.kind_ = Kind::SpecialTwist;
    rho.K_ = chi.field();
    rho.data_ = SteinbergData{std::move(chi)};
    return rho;
}

WDRep2 WDRep2::char_sum(SmoothChar lambda, SmoothChar mu) {
    GL2Rep check = GL2Rep::principal(lambda, mu);  // shares the admissibility constraints
    WDRep2 rho;
    rho.kind_ = Kind::CharSum;
    rho.K_ = check.K();
    rho.data_ = PrincipalData{std::move(lambda), std::move(mu)};
    return rho;
}

WDRep2 langlands_parameter(const GL2Rep& pi) {
    if (pi.is_dihedral()) return WDRep2::induced(pi.dihedral_data().L, pi.dihedral_data().omega);
    if (pi.is_steinberg()) return WDRep2::special_twist(pi.steinberg_data().chi);
    return WDRep2::char_sum(pi.principal_data().lambda, pi.principal_data().mu);
}

GL2Rep representation_of(const WDRep2& rho) {
    switch (rho.kind()) {
        case WDRep2::Kind::Induced:
            return GL2Rep::dihedral(rho.induced_data().L, rho.induced_data().omega);
        case WDRep2::Kind::SpecialTwist:
            return GL2Rep::steinberg(rho.twist_data().chi);
        case WDRep2::Kind::CharSum:
            return GL2Rep::principal(rho.sum_data().lambda, rho.sum_data().mu);
    }
    throw Error("unreachable");
}

SmoothChar central_char(const GL2Rep& pi) {
    if (pi.is_dihedral()) {
        const DihedralData& d = pi.dihedral_data();
        return char_mul(SmoothChar::eta(d.L), restrict_to(d.omega, pi.K()));
    }
    if (pi.is_steinberg()) return char_pow(pi.steinberg_data().chi, 2);
    return char_mul(pi.principal_data().lambda, pi.principal_data().mu);
}

// --- engine --------------------------------------------------------------------

const BiquadraticLattice& AsaiEngine::lattice_of(const FieldPtr& L) {
    auto it = lattices_.find(L.get());
    if (it == lattices_.end()) it = lattices_.emplace(L.get(), biquadratic_lattice(L)).first;
    return it->second;
}

const DihedralClosure& AsaiEngine::closure_of(const FieldPtr& L) {
    auto it = closures_.find(L.get());
    if (it == closures_.end()) {
        if (degree8_used_ >= opt_.degree8_budget)
            throw BudgetExceeded("degree-8 closure budget exhausted", opt_.degree8_budget);
        ++degree8_used_;
        it = closures_.emplace(L.get(), galois_closure(L)).first;
    }
    return it->second;
}

SmoothChar AsaiEngine::omega_on_lattice(const BiquadraticLattice& lat, const SmoothChar& omega) {
    if (omega.field() == lat.B) return omega;
    if (!lat.iso_B_to_L || lat.iso_B_to_L->codomain() != omega.field())
        throw FieldMismatch("omega does not live on this lattice's tower");
    // omega composed with the transport B -> L is the same character seen on B
    return restrict_char(omega, *lat.iso_B_to_L);
}

AsaiEngine::DihedralResolution AsaiEngine::resolve_dihedral(const DihedralData& d) {
    auto& memo = resolutions_[d.L.get()];
    for (const auto& [omega, res] : memo)
        if (omega == d.omega) return res;
    DihedralResolution res;
    res.cls = classify_tower(d.L);
    switch (res.cls) {
        case TowerClass::Biquadratic: {
            const BiquadraticLattice& lat = lattice_of(d.L);
            res.lattice = &lat;
            res.omega_B = omega_on_lattice(lat, d.omega);
            break;
        }
        case TowerClass::Cyclic4:
            break;
        case TowerClass::NonGaloisDihedral8: {
            const DihedralClosure& cl = closure_of(d.L);
            res.lattice = &cl.lattice;
            res.reduction_used = true;
            res.ambiguous = cl.cyclic_choice_ambiguous;
            SmoothChar chiM = compose_norm_embedded(d.omega, cl.emb_L, cl.sigma_M_L);
            auto desc = descend_through_norm(chiM, cl.lattice.B, opt_.unit_budget);
            if (!desc) {
                res.reduction_failed = true;
                break;
            }
            // pi(omega) is supercuspidal, so the descended character must be
            // regular over B/K
            if (!is_regular(desc->first, cl.lattice.sigma_B_K) ||
                !is_regular(desc->second, cl.lattice.sigma_B_K))
                throw Error("internal: descended character is not regular over B/K");
            res.omega_B = desc->first;
            res.omega_B_alt = desc->second;
            break;
        }
    }
    memo.emplace_back(d.omega, res);
    return res;
}

Decomposition AsaiEngine::induction_decompose(const WDRep2& rho) {
    Decomposition dec;
    const FieldPtr& K = rho.K();
    const FieldPtr& F = K->parent();
    switch (rho.kind()) {
        case WDRep2::Kind::Induced: {
            DihedralResolution res = resolve_dihedral(rho.induced_data());
            dec.nongalois_reduction_used = res.reduction_used;
            dec.nongalois_reduction_failed = res.reduction_failed;
            dec.cyclic_choice_ambiguous = res.ambiguous;
            if (!res.omega_B) {
                dec.irreducible = true;
                break;
            }
            const BiquadraticLattice& lat = *res.lattice;
            dec.summands.push_back({InductionSummand::Kind::InducedFromQuadratic,
                                    restrict_char(*res.omega_B, lat.emb_Kp), 1, lat.Kp});
            dec.summands.push_back({InductionSummand::Kind::InducedFromQuadratic,
                                    restrict_char(*res.omega_B, lat.emb_Kpp), 1, lat.Kpp});
            break;
        }
        case WDRep2::Kind::SpecialTwist: {
            SmoothChar chi_F = restrict_to(rho.twist_data().chi, F);
            dec.summands.push_back(
                {InductionSummand::Kind::CharOnF, char_mul(chi_F, SmoothChar::eta(K)), 1, nullptr});
            dec.summands.push_back({InductionSummand::Kind::CharOnF, chi_F, 3, nullptr});
            break;
        }
        case WDRep2::Kind::CharSum: {
            const PrincipalData& d = rho.sum_data();
            GaloisElement sigma = GaloisElement::top_conjugation(K);
            dec.summands.push_back(
                {InductionSummand::Kind::CharOnF, restrict_to(d.lambda, F), 1, nullptr});
            dec.summands.push_back(
                {InductionSummand::Kind::CharOnF, restrict_to(d.mu, F), 1, nullptr});
            dec.summands.push_back({InductionSummand::Kind::InducedFromQuadratic,
                                    char_mul(d.lambda, conj_char(d.mu, sigma)), 1, K});
            break;
        }
    }
    return dec;
}

namespace {

EulerFactor lw_of_summands(const std::vector<InductionSummand>& summands) {
    EulerFactor out;
    for (const InductionSummand& s : summands) {
        if (s.kind == InductionSummand::Kind::CharOnF)
            out = ef_mul(out, tate_lfactor(s.chi, s.sp_dim == 3 ? Rat(1) : Rat(0)));
        else
            out = ef_mul(out, tate_lfactor(s.chi));
    }
    return out;
}

}  // namespace

EulerFactor AsaiEngine::lw_factor(const WDRep2& rho) {
    if (rho.kind() == WDRep2::Kind::Induced) {
        DihedralResolution res = resolve_dihedral(rho.induced_data());
        if (!res.omega_B) return EulerFactor::one();
        const BiquadraticLattice& lat = *res.lattice;
        auto factor_for = [&](const SmoothChar& om) {
            return ef_mul(tate_lfactor(restrict_char(om, lat.emb_Kp)),
                          tate_lfactor(restrict_char(om, lat.emb_Kpp)));
        };
        EulerFactor lw = factor_for(*res.omega_B);
        if (res.omega_B_alt && !(factor_for(*res.omega_B_alt) == lw))
            throw Error("internal: descent extensions give different L_W factors");
        return lw;
    }
    return lw_of_summands(induction_decompose(rho).summands);
}

EulerFactor AsaiEngine::l1_factor(const GL2Rep& pi) {
    const FieldPtr& F = pi.K()->parent();
    if (pi.is_dihedral()) return EulerFactor::one();
    if (pi.is_steinberg())
        return tate_lfactor(restrict_to(pi.steinberg_data().chi, F), Rat(1));
    const PrincipalData& d = pi.principal_data();
    EulerFactor lf = tate_lfactor(restrict_to(d.lambda, F));
    if (d.lambda == d.mu) return ef_mul(lf, lf);
    return ef_lcm(lf, tate_lfactor(restrict_to(d.mu, F)));
}

TwistSet AsaiEngine::twists_on_lattice(const BiquadraticLattice& lat, const SmoothChar& omega_B) {
    auto fiber_of = [&](const Embedding& emb, const FieldPtr& sub) -> std::vector<ExactValue> {
        SmoothChar rho = restrict_char(omega_B, emb);
        if (!rho.is_unramified()) return {};
        return rho.uniformizer_value().root_fiber(sub->f());
    };
    std::vector<ExactValue> a = fiber_of(lat.emb_Kp, lat.Kp);
    std::vector<ExactValue> b = fiber_of(lat.emb_Kpp, lat.Kpp);
    TwistSet out(a.begin(), a.end());
    for (const ExactValue& v : b) {
        // for regular omega the two restrictions never share a pole
        if (out.count(v))
            throw Error("internal: common pole between the K' and K'' restrictions");
        out.insert(v);
    }
    return out;
}

TwistSet AsaiEngine::distinguishing_twists(const GL2Rep& pi) {
    const FieldPtr& K = pi.K();
    const FieldPtr& F = K->parent();
    if (pi.is_dihedral()) {
        DihedralResolution res = resolve_dihedral(pi.dihedral_data());
        if (!res.omega_B) return {};
        TwistSet out = twists_on_lattice(*res.lattice, *res.omega_B);
        if (res.omega_B_alt && twists_on_lattice(*res.lattice, *res.omega_B_alt) != out)
            throw Error("internal: descent extensions give different twist sets");
        return out;
    }
    if (pi.is_steinberg()) {
        SmoothChar rho = char_mul(restrict_to(pi.steinberg_data().chi, F), SmoothChar::eta(K));
        if (!rho.is_unramified()) return {};
        return {rho.uniformizer_value()};
    }
    const PrincipalData& d = pi.principal_data();
    TwistSet out;
    SmoothChar cross = char_mul(d.lambda, conj_char(d.mu, GaloisElement::top_conjugation(K)));
    std::vector<ExactValue> fiber;
    if (cross.is_unramified()) {
        fiber = cross.uniformizer_value().root_fiber(K->f());
        out.insert(fiber.begin(), fiber.end());
    }
    SmoothChar lambda_F = restrict_to(d.lambda, F);
    SmoothChar mu_F = restrict_to(d.mu, F);
    if (lambda_F.is_unramified() && lambda_F == mu_F) {
        ExactValue beta = *lambda_F.unramified_value();
        if (!(d.lambda == d.mu) && !fiber.empty() &&
            std::find(fiber.begin(), fiber.end(), beta) != fiber.end())
            throw Error("internal: common pole between the cross factor and L1 for lambda != mu");
        out.insert(beta);
    }
    return out;
}

EulerFactor AsaiEngine::lradex_factor(const GL2Rep& pi) {
    TwistSet twists = distinguishing_twists(pi);
    return EulerFactor(std::vector<ExactValue>(twists.begin(), twists.end()));
}

EulerFactor AsaiEngine::las_factor(const GL2Rep& pi) {
    return ef_mul(l1_factor(pi), lradex_factor(pi));
}

bool AsaiEngine::is_distinguished(const GL2Rep& pi) {
    return distinguishing_twists(pi).count(ExactValue::one()) > 0;
}

bool AsaiEngine::is_eta_distinguished(const GL2Rep& pi) {
    if (!pi.is_dihedral())
        throw Inadmissible("eta-distinguished verdict is implemented for dihedral representations");
    DihedralResolution res = resolve_dihedral(pi.dihedral_data());
    if (!res.omega_B) return false;
    const BiquadraticLattice& lat = *res.lattice;
    const FieldElement& dK = lat.K->adjoined_square();  // B = K'(sqrt dK) = K''(sqrt dK)
    auto matches = [&](const Embedding& emb, const FieldPtr& sub) {
        SmoothChar eta_sub = SmoothChar::eta_from_class(sub, sub->embed(dK));
        return restrict_char(*res.omega_B, emb) == eta_sub;
    };
    return matches(lat.emb_Kp, lat.Kp) || matches(lat.emb_Kpp, lat.Kpp);
}

EgalReport AsaiEngine::check_egal(const GL2Rep& pi) {
    EgalReport rep;
    WDRep2 rho = langlands_parameter(pi);
    rep.decomposition = induction_decompose(rho);
    rep.lw = lw_factor(rho);
    rep.l1 = l1_factor(pi);
    rep.twists = distinguishing_twists(pi);
    rep.lradex = EulerFactor(std::vector<ExactValue>(rep.twists.begin(), rep.twists.end()));
    rep.las = ef_mul(rep.l1, rep.lradex);
    rep.equal = rep.lw == rep.las;
    return rep;
}

}  // namespace asailab
