#include "asailab/oracle.hpp"

#include "asailab/asai.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace asailab;
using asailab::testing::Rng;
using asailab::testing::random_nonzero;

TEST_CASE("norm image of the unramified extension: all units, even valuations") {
    FieldPtr F = LocalField::make_base(3, 8);
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    for (int level : {1, 2}) {
        oracle::NormImage ni = oracle::norm_image_enum(K, level);
        CHECK(ni.unit_norm_keys.size() == F->unit_group(level, 1000)->size());
        CHECK(ni.unif_norm_val == 2);
    }
}

TEST_CASE("norm image has index two (unit part halves for ramified extensions)") {
    for (long long p : {3LL, 5LL}) {
        FieldPtr F = LocalField::make_base(p, 8);
        std::vector<FieldElement> reps = F->square_class_reps();
        for (std::size_t i = 1; i < reps.size(); ++i) {
            FieldPtr E = LocalField::make_extension(F, reps[i]);
            oracle::NormImage ni = oracle::norm_image_enum(E, 2);
            std::size_t units = F->unit_group(2, 1000)->size();
            if (E->ramified_step()) {
                CHECK(ni.unit_norm_keys.size() == units / 2);
                CHECK(ni.unif_norm_val == 1);
            } else {
                CHECK(ni.unit_norm_keys.size() == units);
                CHECK(ni.unif_norm_val == 2);
            }
        }
    }
}

TEST_CASE("norm image membership matches the Hilbert symbol on samples") {
    Rng rng(101);
    for (long long p : {3LL, 5LL, 7LL}) {
        FieldPtr F = LocalField::make_base(p, 8);
        std::vector<FieldElement> reps = F->square_class_reps();
        for (std::size_t i = 1; i < reps.size(); ++i) {
            FieldPtr E = LocalField::make_extension(F, reps[i]);
            oracle::NormImage ni = oracle::norm_image_enum(E, 2);
            for (int t = 0; t < 200; ++t) {
                FieldElement x = random_nonzero(rng, F);
                bool is_norm = ni.contains(x);
                CHECK(is_norm == (hilbert_symbol(x, reps[i]) == 1));
            }
        }
    }
}

TEST_CASE("lemma: F* inside N_{B/K}(B*), at every lattice for p in {3,5}, level 2") {
    for (long long p : {3LL, 5LL}) {
        FieldPtr F = LocalField::make_base(p, 8);
        std::vector<FieldElement> reps = F->square_class_reps();
        for (std::size_t i = 1; i < reps.size(); ++i) {
            FieldPtr K = LocalField::make_extension(F, reps[i]);
            for (std::size_t j = 1; j < reps.size(); ++j) {
                if (j == i) continue;
                BiquadraticLattice lat = biquadratic_lattice_for(K, reps[j]);
                CHECK(oracle::verify_normbiquad(lat, 2));
            }
        }
    }
}

TEST_CASE("lemma: kernel of N_{B/K} is witnessed inside N_{B/K'} N_{B/K''}") {
    for (long long p : {3LL, 5LL}) {
        FieldPtr F = LocalField::make_base(p, 8);
        std::vector<FieldElement> reps = F->square_class_reps();
        for (std::size_t i = 1; i < reps.size(); ++i) {
            FieldPtr K = LocalField::make_extension(F, reps[i]);
            for (std::size_t j = 1; j < reps.size(); ++j) {
                if (j == i) continue;
                BiquadraticLattice lat = biquadratic_lattice_for(K, reps[j]);
                CHECK(oracle::verify_ker_lemma(lat, 2));
            }
        }
    }
}

TEST_CASE("independent distinguishedness agrees with the pipeline on a sweep") {
    FieldPtr F = LocalField::make_base(3, 8);
    FieldPtr K = LocalField::make_extension(F, F->from_integer(3));
    FieldPtr B = LocalField::make_extension(K, K->embed(F->from_integer(2)));
    BiquadraticLattice lat = biquadratic_lattice(B);
    AsaiEngine eng;
    GaloisElement sigma = GaloisElement::top_conjugation(B);

    int regular_seen = 0, distinguished_seen = 0, eta_seen = 0;
    for (long long k = 0; k < 8; ++k) {
        for (long long m = 0; m < 8; ++m) {
            SmoothChar omega;
            try {
                omega = SmoothChar::from_generator_values(
                    B, 1, {ExactValue::root_of_unity(Rat(k, 8))},
                    ExactValue(Rat(m, 8), Rat(0)));
            } catch (const BadCharacter&) {
                continue;
            }
            if (!is_regular(omega, sigma)) continue;
            ++regular_seen;
            GL2Rep pi = GL2Rep::dihedral(B, omega);
            SmoothChar omega_B = eng.omega_on_lattice(lat, omega);
            oracle::DistinguishedVerdict v = oracle::independent_distinguished(lat, omega_B);
            CHECK(v.distinguished() == eng.is_distinguished(pi));
            CHECK(v.eta_distinguished() == eng.is_eta_distinguished(pi));
            // exclusivity: never distinguished and eta-distinguished together
            CHECK(!(v.distinguished() && v.eta_distinguished()));
            if (v.distinguished()) ++distinguished_seen;
            if (v.eta_distinguished()) ++eta_seen;
        }
    }
    CHECK(regular_seen > 0);
    CHECK(distinguished_seen > 0);
    CHECK(eta_seen > 0);
}

TEST_CASE("non-regular omega is rejected before any verdict") {
    FieldPtr F = LocalField::make_base(3, 8);
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    FieldPtr B = LocalField::make_extension(K, K->embed(F->from_integer(3)));
    SmoothChar mu = SmoothChar::absvalue(K, Rat(1, 2));
    CHECK_THROWS_AS(GL2Rep::dihedral(B, compose_norm(mu, B)), Inadmissible);
}

TEST_CASE("tower classification oracle is the constructive-sqrt route") {
    // distinct code path from classify_tower: already compared exhaustively in
    // the towers suite; spot-check the unramified quartic here
    FieldPtr F = LocalField::make_base(5, 8);
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    FieldPtr L = LocalField::make_extension(K, K->canonical_nonsquare_unit());
    CHECK(oracle::classify_tower_oracle(L) == TowerClass::Cyclic4);
}
