#include "asailab/asai.hpp"

#include "asailab/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace asailab;

namespace {

ExactValue zeta(long long n, long long d) { return ExactValue::root_of_unity(Rat(n, d)); }

struct Fixture {
    FieldPtr F = LocalField::make_base(3, 8);
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));   // unramified
    FieldPtr Kr = LocalField::make_extension(F, F->from_integer(3));  // ramified
    AsaiEngine eng;
};

// All level <= max_level characters of E with grid uniformizer values
// (zeta k/8, qexp a/2), a in [-2, 2]; used for small exhaustive sweeps.
std::vector<SmoothChar> char_sweep(const FieldPtr& E, int max_level) {
    std::vector<SmoothChar> out;
    std::vector<ExactValue> unif_values;
    for (long long k = 0; k < 8; ++k)
        for (long long a = -2; a <= 2; ++a) unif_values.push_back({Rat(k, 8), Rat(a, 2)});

    std::vector<std::vector<ExactValue>> image_lists = {{}};
    for (int lvl = 0; lvl <= max_level; ++lvl) {
        if (lvl > 0) {
            std::vector<FieldElement> gens = canonical_unit_generators(E, lvl);
            std::vector<std::vector<ExactValue>> lists = {{}};
            long long q1 = static_cast<long long>(E->q()) - 1;
            long long p = E->context().p;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                long long ord = g == 0 ? q1 : p;
                std::vector<std::vector<ExactValue>> next;
                for (const auto& l : lists)
                    for (long long j = 0; j < ord; j += (g == 0 ? 1 : 1)) {
                        auto c = l;
                        c.push_back(zeta(j, ord));
                        next.push_back(std::move(c));
                    }
                lists = std::move(next);
            }
            image_lists = std::move(lists);
        }
        for (const auto& images : image_lists)
            for (const ExactValue& uv : unif_values) {
                try {
                    SmoothChar chi = SmoothChar::from_generator_values(E, lvl, images, uv);
                    if (chi.level() == lvl) out.push_back(chi);  // skip duplicates of lower level
                } catch (const BadCharacter&) {
                }
            }
    }
    return out;
}

}  // namespace

TEST_CASE("central characters of the three shapes") {
    Fixture fx;
    SmoothChar triv = SmoothChar::trivial(fx.K);
    CHECK(central_char(GL2Rep::principal(triv, triv)).is_trivial());
    CHECK(central_char(GL2Rep::steinberg(triv)).is_trivial());
    // dihedral: c = eta_{L/K} * omega|_K
    FieldPtr B = LocalField::make_extension(fx.Kr, fx.Kr->embed(fx.F->from_integer(2)));
    SmoothChar omega = SmoothChar::from_generator_values(B, 1, {zeta(2, 8)}, zeta(1, 8));
    GL2Rep pi = GL2Rep::dihedral(B, omega);
    SmoothChar c = central_char(pi);
    CHECK(c == char_mul(SmoothChar::eta(B), restrict_to(omega, fx.Kr)));
}

TEST_CASE("admissibility constraints are enforced") {
    Fixture fx;
    SmoothChar triv = SmoothChar::trivial(fx.K);
    CHECK_THROWS_AS(GL2Rep::principal(SmoothChar::absvalue(fx.K, Rat(1)), triv), Inadmissible);
    CHECK_THROWS_AS(GL2Rep::principal(triv, SmoothChar::absvalue(fx.K, Rat(1))), Inadmissible);
    GL2Rep ok = GL2Rep::principal(SmoothChar::absvalue(fx.K, Rat(1, 2)), triv);
    CHECK(ok.is_principal());
    // omega factoring through the norm is rejected
    FieldPtr B = LocalField::make_extension(fx.K, fx.K->embed(fx.F->from_integer(3)));
    SmoothChar normed = compose_norm(SmoothChar::absvalue(fx.K, Rat(1, 2)), B);
    CHECK_THROWS_AS(GL2Rep::dihedral(B, normed), Inadmissible);
}

TEST_CASE("induction decomposition: frozen shapes") {
    Fixture fx;
    SmoothChar triv = SmoothChar::trivial(fx.K);
    AsaiEngine& eng = fx.eng;

    // CharSum(1,1): two trivial characters of F and Ind_K(1)
    Decomposition dec = eng.induction_decompose(WDRep2::char_sum(triv, triv));
    REQUIRE(dec.summands.size() == 3);
    CHECK(dec.summands[0].kind == InductionSummand::Kind::CharOnF);
    CHECK(dec.summands[0].chi.is_trivial());
    CHECK(dec.summands[1].chi.is_trivial());
    CHECK(dec.summands[2].kind == InductionSummand::Kind::InducedFromQuadratic);
    CHECK(dec.summands[2].Eprime == fx.K);
    CHECK(dec.summands[2].chi.is_trivial());

    // SpecialTwist(1): eta_{K/F} + sp(3)
    Decomposition dst = eng.induction_decompose(WDRep2::special_twist(triv));
    REQUIRE(dst.summands.size() == 2);
    CHECK(dst.summands[0].sp_dim == 1);
    CHECK(dst.summands[0].chi == SmoothChar::eta(fx.K));
    CHECK(dst.summands[1].sp_dim == 3);
    CHECK(dst.summands[1].chi.is_trivial());

    // induced from a cyclic tower: irreducible, L_W = 1
    FieldPtr L2 = LocalField::make_extension(fx.K, fx.K->canonical_nonsquare_unit());
    SmoothChar omega = SmoothChar::from_generator_values(L2, 1, {zeta(1, 80)}, ExactValue::one());
    Decomposition dcy = eng.induction_decompose(WDRep2::induced(L2, omega));
    CHECK(dcy.irreducible);
    CHECK(eng.lw_factor(WDRep2::induced(L2, omega)) == EulerFactor::one());
}

TEST_CASE("boxed formulas: steinberg sigma(1) over the unramified K") {
    Fixture fx;
    SmoothChar triv = SmoothChar::trivial(fx.K);
    GL2Rep pi = GL2Rep::steinberg(triv);

    EulerFactor l1 = fx.eng.l1_factor(pi);
    CHECK(l1 == EulerFactor::from_root(ExactValue::q_power(Rat(-1))));  // 1/(1 - q^{-1} X)

    TwistSet tw = fx.eng.distinguishing_twists(pi);
    CHECK(tw == TwistSet{ExactValue::minus_one()});

    EulerFactor las = fx.eng.las_factor(pi);
    EulerFactor expected({ExactValue::q_power(Rat(-1)), ExactValue::minus_one()});
    CHECK(las == expected);  // 1/((1 - q^{-1}X)(1 + X))

    EulerFactor lw = fx.eng.lw_factor(WDRep2::special_twist(triv));
    CHECK(lw == expected);
    CHECK(fx.eng.check_egal(pi).equal);
}

TEST_CASE("boxed formulas: principal pi(1,1) over the unramified K") {
    Fixture fx;
    SmoothChar triv = SmoothChar::trivial(fx.K);
    GL2Rep pi = GL2Rep::principal(triv, triv);

    CHECK(fx.eng.l1_factor(pi) ==
          EulerFactor({ExactValue::one(), ExactValue::one()}));  // 1/(1-X)^2
    TwistSet tw = fx.eng.distinguishing_twists(pi);
    CHECK(tw == TwistSet{ExactValue::one(), ExactValue::minus_one()});
    EulerFactor expected({ExactValue::one(), ExactValue::one(), ExactValue::one(),
                          ExactValue::minus_one()});  // 1/((1-X)^2 (1-X^2))
    CHECK(fx.eng.las_factor(pi) == expected);
    CHECK(fx.eng.lw_factor(WDRep2::char_sum(triv, triv)) == expected);
    CHECK(fx.eng.check_egal(pi).equal);
    CHECK(fx.eng.is_distinguished(pi));
}

TEST_CASE("steinberg sigma(chi) with chi|F* = eta is distinguished at s0 = 0") {
    Fixture fx;
    // K/F unramified: chi unramified with chi(w_K) = -1 restricts to eta_{K/F}
    SmoothChar chi = SmoothChar::from_generator_values(fx.K, 0, {}, ExactValue::minus_one());
    CHECK(restrict_to(chi, fx.F) == SmoothChar::eta(fx.K));
    GL2Rep pi = GL2Rep::steinberg(chi);
    CHECK(fx.eng.distinguishing_twists(pi) == TwistSet{ExactValue::one()});
    CHECK(fx.eng.is_distinguished(pi));
    CHECK(fx.eng.check_egal(pi).equal);
}

TEST_CASE("dihedral with omega trivial on K'': distinguished, both routes agree") {
    Fixture fx;
    // lattice over ramified K: B = K(sqrt 2), K' = F(sqrt 6), K'' = F(sqrt 2)
    FieldPtr B = LocalField::make_extension(fx.Kr, fx.Kr->embed(fx.F->from_integer(2)));
    BiquadraticLattice lat = biquadratic_lattice(B);

    // sweep level-1 characters for a regular omega trivial on one subfield
    bool found = false;
    for (long long k = 1; k < 8 && !found; ++k) {
        for (long long m = 0; m < 8 && !found; ++m) {
            SmoothChar omega;
            try {
                omega = SmoothChar::from_generator_values(B, 1, {zeta(k, 8)},
                                                          ExactValue(Rat(m, 8), Rat(0)));
            } catch (const BadCharacter&) {
                continue;
            }
            if (!is_regular(omega, GaloisElement::top_conjugation(B))) continue;
            SmoothChar omega_B = fx.eng.omega_on_lattice(lat, omega);
            bool triv_p = restrict_char(omega_B, lat.emb_Kp).is_trivial();
            bool triv_pp = restrict_char(omega_B, lat.emb_Kpp).is_trivial();
            if (!triv_p && !triv_pp) continue;
            found = true;
            GL2Rep pi = GL2Rep::dihedral(B, omega);
            CHECK(fx.eng.is_distinguished(pi));
            CHECK(fx.eng.l1_factor(pi) == EulerFactor::one());
            EgalReport rep = fx.eng.check_egal(pi);
            CHECK(rep.equal);
            CHECK(rep.las == rep.lradex);
            CHECK(rep.las.has_simple_poles());
            // the independent enumeration oracle agrees
            auto verdict = oracle::independent_distinguished(lat, omega_B);
            CHECK(verdict.distinguished());
            CHECK(!verdict.eta_distinguished());
            CHECK(!fx.eng.is_eta_distinguished(pi));
        }
    }
    CHECK(found);
}

TEST_CASE("dihedral on a cyclic tower: everything is 1") {
    Fixture fx;
    FieldPtr L2 = LocalField::make_extension(fx.K, fx.K->canonical_nonsquare_unit());
    CHECK(classify_tower(L2) == TowerClass::Cyclic4);
    SmoothChar omega = SmoothChar::from_generator_values(L2, 1, {zeta(1, 80)}, zeta(1, 8));
    GL2Rep pi = GL2Rep::dihedral(L2, omega);
    CHECK(fx.eng.distinguishing_twists(pi).empty());
    CHECK(fx.eng.las_factor(pi) == EulerFactor::one());
    EgalReport rep = fx.eng.check_egal(pi);
    CHECK(rep.equal);
    CHECK(rep.lw == EulerFactor::one());
}

TEST_CASE("non-Galois towers run through the closure reduction") {
    Fixture fx;
    FieldPtr L = LocalField::make_extension(fx.Kr, fx.Kr->uniformizer());
    REQUIRE(classify_tower(L) == TowerClass::NonGaloisDihedral8);
    int reduced = 0, failed = 0, egal_checked = 0;
    for (const SmoothChar& omega : char_sweep(L, 1)) {
        if (!is_regular(omega, GaloisElement::top_conjugation(L))) continue;
        GL2Rep pi = GL2Rep::dihedral(L, omega);
        EgalReport rep = fx.eng.check_egal(pi);
        CHECK(rep.equal);
        ++egal_checked;
        if (rep.decomposition.nongalois_reduction_failed) {
            ++failed;
            CHECK(rep.las == EulerFactor::one());
        } else {
            ++reduced;
        }
    }
    CHECK(egal_checked > 0);
    INFO("reduced=", reduced, " failed=", failed);
    CHECK(reduced + failed == egal_checked);
}

TEST_CASE("descended non-Galois instances agree with the enumeration oracle") {
    Fixture fx;
    FieldPtr L = LocalField::make_extension(fx.Kr, fx.Kr->uniformizer());
    const DihedralClosure& cl = fx.eng.closure_of(L);
    GaloisElement sigma_L = GaloisElement::top_conjugation(L);
    int reduced_checked = 0;
    for (const SmoothChar& omega : char_sweep(L, 1)) {
        if (!is_regular(omega, sigma_L)) continue;
        SmoothChar chiM = compose_norm_embedded(omega, cl.emb_L, cl.sigma_M_L);
        auto desc = descend_through_norm(chiM, cl.lattice.B);
        if (!desc) continue;
        ++reduced_checked;
        GL2Rep pi = GL2Rep::dihedral(L, omega);
        oracle::DistinguishedVerdict v =
            oracle::independent_distinguished(cl.lattice, desc->first);
        CHECK(v.distinguished() == fx.eng.is_distinguished(pi));
        CHECK(v.eta_distinguished() == fx.eng.is_eta_distinguished(pi));
        // and the second descent extension gives the same verdicts
        oracle::DistinguishedVerdict v2 =
            oracle::independent_distinguished(cl.lattice, desc->second);
        CHECK(v2.distinguished() == v.distinguished());
        CHECK(v2.eta_distinguished() == v.eta_distinguished());
    }
    CHECK(reduced_checked > 0);
}

TEST_CASE("theorem cardist sweep: check_egal over many representations") {
    Fixture fx;
    std::vector<SmoothChar> chars = char_sweep(fx.K, 1);
    int count = 0;
    for (std::size_t i = 0; i < chars.size(); i += 7) {
        const SmoothChar& chi = chars[i];
        GL2Rep st = GL2Rep::steinberg(chi);
        CHECK(fx.eng.check_egal(st).equal);
        for (std::size_t j = 0; j < chars.size(); j += 13) {
            GL2Rep ps = [&]() -> GL2Rep {
                try {
                    return GL2Rep::principal(chi, chars[j]);
                } catch (const Inadmissible&) {
                    return GL2Rep::steinberg(chi);
                }
            }();
            CHECK(fx.eng.check_egal(ps).equal);
            ++count;
        }
    }
    CHECK(count > 20);
}

TEST_CASE("invariants: L1 divides LAs; simple-pole relation to the central character") {
    Fixture fx;
    std::vector<SmoothChar> chars = char_sweep(fx.K, 1);
    for (std::size_t i = 0; i < chars.size(); i += 5) {
        for (std::size_t j = 0; j < chars.size(); j += 11) {
            GL2Rep pi = [&]() -> GL2Rep {
                try {
                    return GL2Rep::principal(chars[i], chars[j]);
                } catch (const Inadmissible&) {
                    return GL2Rep::steinberg(chars[i]);
                }
            }();
            CHECK(ef_divides(fx.eng.l1_factor(pi), fx.eng.las_factor(pi)));
            TwistSet tw = fx.eng.distinguishing_twists(pi);
            SmoothChar cF = restrict_to(central_char(pi), fx.F);
            if (!cF.is_unramified()) {
                CHECK(tw.empty());
            } else {
                for (const ExactValue& alpha : tw) CHECK(alpha.pow(2) == *cF.unramified_value());
            }
        }
    }
}

TEST_CASE("a principal series failing both criteria is not distinguished") {
    Fixture fx;
    // lambda ramified with lambda*mu^sigma ramified and lambda|F != mu|F
    SmoothChar lambda =
        SmoothChar::from_generator_values(fx.K, 1, {zeta(1, 8)}, ExactValue::one());
    SmoothChar mu = SmoothChar::trivial(fx.K);
    GL2Rep pi = GL2Rep::principal(lambda, mu);
    SmoothChar cross = char_mul(lambda, conj_char(mu, GaloisElement::top_conjugation(fx.K)));
    REQUIRE(!cross.is_unramified());
    REQUIRE(restrict_to(lambda, fx.F) != restrict_to(mu, fx.F));
    CHECK(!fx.eng.is_distinguished(pi));
    CHECK(fx.eng.distinguishing_twists(pi).empty());
    CHECK(fx.eng.check_egal(pi).equal);
}

TEST_CASE("langlands parameter round trip") {
    Fixture fx;
    SmoothChar chi = SmoothChar::from_generator_values(fx.K, 1, {zeta(1, 8)}, zeta(3, 8));
    GL2Rep pi = GL2Rep::steinberg(chi);
    WDRep2 rho = langlands_parameter(pi);
    GL2Rep back = representation_of(rho);
    CHECK(back.is_steinberg());
    CHECK(back.steinberg_data().chi == chi);
}
