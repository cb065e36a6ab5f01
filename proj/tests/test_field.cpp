#include "asailab/local_field.hpp"

#include "asailab/galois.hpp"
#include "asailab/units.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace asailab;
using asailab::testing::Rng;
using asailab::testing::random_nonzero;
using asailab::testing::random_unit;

namespace {

FieldPtr Q3() { return LocalField::make_base(3, 8); }

}  // namespace

TEST_CASE("make_extension: unramified, ramified, square rejection") {
    FieldPtr F = Q3();
    // 2 is a nonsquare unit mod 3
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    CHECK(K->e() == 1);
    CHECK(K->f() == 2);
    CHECK(K->q() == 9);

    FieldPtr Kr = LocalField::make_extension(F, F->from_integer(3));
    CHECK(Kr->e() == 2);
    CHECK(Kr->f() == 1);
    CHECK(Kr->q() == 3);

    CHECK_THROWS_AS(LocalField::make_extension(F, F->from_integer(4)), IsSquareError);
}

TEST_CASE("adjoined squares are reduced modulo even uniformizer powers") {
    FieldPtr F = Q3();
    // 27 = 3 * 3^2: same field as adjoining 3
    FieldPtr K = LocalField::make_extension(F, F->from_integer(27));
    CHECK(K->e() == 2);
    CHECK(K->adjoined_square().eq_at_precision(F->from_integer(3)));
    // generator squares to the reduced element
    CHECK((K->generator() * K->generator()).eq_at_precision(K->embed(F->from_integer(3))));
}

TEST_CASE("arith: inverse law, conjugate product") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        FieldElement x = random_nonzero(rng, K);
        CHECK((x * x.inverse()).eq_at_precision(K->one()));
    }
    // (a + b sqrt u)(a - b sqrt u) = a^2 - u b^2
    FieldElement a = K->embed(F->from_integer(4)), b = K->embed(F->from_integer(5));
    FieldElement g = K->generator();
    FieldElement lhs = (a + b * g) * (a - b * g);
    FieldElement rhs = a * a - K->embed(F->from_integer(2)) * b * b;
    CHECK(lhs.eq_at_precision(rhs));
}

TEST_CASE("valuation: uniformizers, p in ramified and unramified extensions") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    FieldPtr Kr = LocalField::make_extension(F, F->from_integer(3));
    CHECK(F->uniformizer().valuation() == 1);
    CHECK(K->uniformizer().valuation() == 1);
    CHECK(Kr->uniformizer().valuation() == 1);
    // v(p) = 2 in Q_3(sqrt 3): p is a unit times the square of the uniformizer
    FieldElement p_up = Kr->embed(F->from_integer(3));
    CHECK(p_up.valuation() == 2);
    FieldElement w2 = Kr->uniformizer() * Kr->uniformizer();
    CHECK(w2.valuation() == 2);
    CHECK((p_up * w2.inverse()).valuation() == 0);
    // v(p) = 1 in the unramified extension
    CHECK(K->embed(F->from_integer(3)).valuation() == 1);
}

TEST_CASE("valuation ultrametric properties on random samples") {
    Rng rng(11);
    FieldPtr F = LocalField::make_base(5, 8);
    FieldPtr K = LocalField::make_extension(F, F->from_integer(5 * 2));
    for (int i = 0; i < 50; ++i) {
        FieldElement x = random_nonzero(rng, K), y = random_nonzero(rng, K);
        CHECK((x * y).valuation() == x.valuation() + y.valuation());
        FieldElement s = x + y;
        if (!s.is_zero_at_precision(K->context().precision))
            CHECK(s.valuation() >= std::min(x.valuation(), y.valuation()));
    }
}

TEST_CASE("galois: top conjugation, fixed field, homomorphism") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    GaloisElement sigma = GaloisElement::top_conjugation(K);
    FieldElement a = K->embed(F->from_integer(7)), b = K->embed(F->from_integer(5));
    FieldElement g = K->generator();
    CHECK(sigma.apply(a + b * g).eq_at_precision(a - b * g));
    CHECK(sigma.apply(a).eq_at_precision(a));  // fixes the base field
    CHECK(sigma.order() == 2);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        FieldElement x = random_nonzero(rng, K), y = random_nonzero(rng, K);
        CHECK(sigma.apply(x * y).eq_at_precision(sigma.apply(x) * sigma.apply(y)));
        CHECK(sigma.apply(x + y).eq_at_precision(sigma.apply(x) + sigma.apply(y)));
        CHECK(sigma.apply(sigma.apply(x)).eq_at_precision(x));
    }
}

TEST_CASE("norms: definition, multiplicativity, transitivity") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    FieldPtr B = LocalField::make_extension(K, K->embed(F->from_integer(3)));
    GaloisElement sigma = GaloisElement::top_conjugation(K);
    Rng rng(5);
    for (int i = 0; i < 15; ++i) {
        FieldElement x = random_nonzero(rng, K);
        CHECK(norm_to(x, F).eq_at_precision((x * sigma.apply(x)).project_to_parent()));
        FieldElement y = random_nonzero(rng, K);
        CHECK(norm_to(x * y, F).eq_at_precision(norm_to(x, F) * norm_to(y, F)));
    }
    for (int i = 0; i < 10; ++i) {
        FieldElement z = random_nonzero(rng, B);
        CHECK(norm_to(z, F).eq_at_precision(norm_to(norm_to(z, K), F)));
    }
    // N_{B/K} on an element of K is the square
    FieldElement k = random_nonzero(rng, K);
    CHECK(norm_to(B->embed(k), K).eq_at_precision(k * k));
}

TEST_CASE("square classes form a Klein four-group") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    CHECK(square_class(F->one()).is_trivial());
    // p * u with u a nonsquare unit: odd valuation, nonsquare residue
    SquareClass c = square_class(F->from_integer(3 * 2));
    CHECK(c.val_parity == 1);
    CHECK(!c.residue_square);
    Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        FieldElement x = random_nonzero(rng, K), y = random_nonzero(rng, K);
        CHECK(square_class(x * x).is_trivial());
        CHECK(square_class(x * y) == square_class(x) * square_class(y));
    }
    // exactly four classes, represented by {1, w, pi, w pi}
    std::vector<FieldElement> reps = K->square_class_reps();
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK(!(square_class(reps[i]) == square_class(reps[j])));
}

TEST_CASE("hilbert symbol: frozen examples and algebraic laws") {
    FieldPtr F = Q3();
    CHECK(hilbert_symbol(F->from_integer(2), F->from_integer(5)) == 1);   // two units
    CHECK(hilbert_symbol(F->from_integer(3), F->from_integer(2)) == -1);  // (pi, nonsquare unit)
    Rng rng(17);
    for (long long p : {3LL, 5LL, 7LL}) {
        FieldPtr Fp = LocalField::make_base(p, 8);
        for (int i = 0; i < 40; ++i) {
            FieldElement a = random_nonzero(rng, Fp), b = random_nonzero(rng, Fp),
                         c = random_nonzero(rng, Fp);
            CHECK(hilbert_symbol(a, -a) == 1);
            CHECK(hilbert_symbol(a, b) == hilbert_symbol(b, a));
            CHECK(hilbert_symbol(a * b, c) == hilbert_symbol(a, c) * hilbert_symbol(b, c));
        }
    }
}

TEST_CASE("hilbert symbol detects norms (enumeration cross-check)") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    // norms from the unramified extension: even-valuation elements times units
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        FieldElement x = random_nonzero(rng, K);
        CHECK(hilbert_symbol(norm_to(x, F), F->from_integer(2)) == 1);
    }
}

TEST_CASE("unit group enumeration: frozen cardinalities and budget") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    CHECK(F->unit_group(1, 100)->size() == 2);    // F_3^*
    CHECK(F->unit_group(2, 100)->size() == 6);    // 3 * 2
    CHECK(K->unit_group(2, 100)->size() == 72);   // 9 * 8
    try {
        K->unit_group(3, 100);
        FAIL("budget should have been exceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.cardinality == 648);  // 9^2 * 8
    }
    // keys are unique and multiplicative structure is consistent
    auto grp = K->unit_group(2, 1000);
    Rng rng(29);
    for (int i = 0; i < 25; ++i) {
        const FieldElement& a = grp->elements[rng.below(grp->size())];
        const FieldElement& b = grp->elements[rng.below(grp->size())];
        std::uint32_t ia = grp->index_of_element(a * b);
        FieldElement diff = grp->elements[ia] - a * b;
        CHECK(diff.val_lower_bound() >= 2);
    }
}

TEST_CASE("square roots: Hensel lifting round trip") {
    Rng rng(31);
    for (long long p : {3LL, 5LL, 7LL}) {
        FieldPtr F = LocalField::make_base(p, 8);
        FieldPtr K = LocalField::make_extension(F, F->from_integer(p));
        for (int i = 0; i < 15; ++i) {
            FieldElement x = random_nonzero(rng, K);
            std::optional<FieldElement> r = try_sqrt(x * x);
            REQUIRE(r.has_value());
            CHECK((*r * *r).eq_at_precision(x * x));
        }
        CHECK(!try_sqrt(F->from_integer(p)).has_value());
    }
}

TEST_CASE("projection to parent rejects genuine extension elements") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    CHECK_THROWS_AS(K->generator().project_to_parent(), NotInTower);
    CHECK(K->embed(F->from_integer(5)).project_to_parent().eq_at_precision(F->from_integer(5)));
}

TEST_CASE("precision exhaustion surfaces instead of guessing") {
    FieldPtr F = Q3();
    // square test indeterminate: the candidate is zero at the carried precision
    FieldElement fuzz = F->one().truncated(0);
    CHECK_THROWS_AS(LocalField::make_extension(F, fuzz), PrecisionExhausted);
    // valuation of an engineered full cancellation
    FieldElement z = F->from_integer(7) - F->from_integer(7);
    CHECK_THROWS_AS(z.valuation(), PrecisionExhausted);
    CHECK_THROWS_AS(square_class(z), PrecisionExhausted);
    CHECK_THROWS_AS(z.inverse(), PrecisionExhausted);
    // a zero test beyond the digits an operand carries
    FieldElement t = F->from_integer(1).truncated(2);
    CHECK((t - F->one()).is_zero_at_precision(2));
    CHECK_THROWS_AS((t - F->one()).is_zero_at_precision(3), PrecisionExhausted);
}

TEST_CASE("teichmueller generator has exact order q-1") {
    FieldPtr F = Q3();
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    FieldElement t = K->teichmueller_generator();
    CHECK((t.pow(8) - K->one()).val_lower_bound() >= K->context().rel_digits - 1);
    CHECK(!(t.pow(4) - K->one()).is_zero_at_precision(1));
    CHECK(!(t.pow(2) - K->one()).is_zero_at_precision(1));
}
