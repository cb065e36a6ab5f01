#include "asailab/euler.hpp"

#include "asailab/chars.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace asailab;
using asailab::testing::Rng;

namespace {

ExactValue ev(long long zn, long long zd, long long qn, long long qd) {
    return {Rat(zn, zd), Rat(qn, qd)};
}

EulerFactor random_factor(Rng& rng) {
    std::vector<ExactValue> roots;
    std::size_t n = rng.below(4);
    for (std::size_t i = 0; i < n; ++i)
        roots.push_back(ev(static_cast<long long>(rng.below(4)), 4,
                           rng.range(-2, 2), 1));
    return EulerFactor(std::move(roots));
}

}  // namespace

TEST_CASE("exact values: canonical form, fibers, ordering") {
    CHECK(ev(9, 8, 0, 1).zeta == Rat(1, 8));
    CHECK(ev(-1, 8, 0, 1).zeta == Rat(7, 8));
    CHECK(ExactValue::one().is_one());
    ExactValue x = ev(1, 3, -1, 2);
    CHECK((x * x.inverse()).is_one());
    CHECK(x.pow(6) == ev(0, 1, -3, 1));
    std::vector<ExactValue> fiber = x.root_fiber(3);
    CHECK(fiber.size() == 3);
    for (const ExactValue& r : fiber) CHECK(r.pow(3) == x);
    CHECK(fiber[0] == x.principal_root(3));
    CHECK(ev(0, 1, -1, 1) < ev(1, 2, 0, 1));  // qexp first
    CHECK(ev(1, 4, 0, 1) < ev(1, 2, 0, 1));
}

TEST_CASE("euler factors: mul, divides, lcm, gcd on frozen cases") {
    EulerFactor one = EulerFactor::one();
    EulerFactor l1 = EulerFactor::from_root(ExactValue::one());            // 1/(1-X)
    EulerFactor l1sq = ef_mul(l1, l1);                                     // 1/(1-X)^2
    EulerFactor lq = EulerFactor::from_root(ev(0, 1, -1, 1));              // 1/(1-q^-1 X)

    CHECK(ef_mul(l1, one) == l1);
    CHECK(ef_divides(l1, l1sq));
    CHECK(!ef_divides(l1sq, l1));
    CHECK(!ef_divides(l1, lq));
    CHECK(ef_lcm(l1, l1) == l1);
    CHECK(ef_lcm(l1, l1sq) == l1sq);
    CHECK(ef_gcd(l1, lq) == one);
    CHECK(l1sq.poles().size() == 2);
    CHECK(!l1sq.has_simple_poles());
    CHECK(ef_mul(l1, lq).has_simple_poles());
}

TEST_CASE("lattice laws: distributivity and mul = lcm * gcd") {
    Rng rng(59);
    for (int i = 0; i < 2000; ++i) {
        EulerFactor a = random_factor(rng), b = random_factor(rng), c = random_factor(rng);
        CHECK(ef_lcm(a, b) == ef_lcm(b, a));
        CHECK(ef_gcd(a, b) == ef_gcd(b, a));
        CHECK(ef_mul(a, b) == ef_mul(ef_lcm(a, b), ef_gcd(a, b)));
        CHECK(ef_lcm(a, ef_gcd(b, c)) == ef_gcd(ef_lcm(a, b), ef_lcm(a, c)));
        CHECK(ef_gcd(a, ef_lcm(b, c)) == ef_lcm(ef_gcd(a, b), ef_gcd(a, c)));
        CHECK(ef_divides(ef_gcd(a, b), a));
        CHECK(ef_divides(a, ef_lcm(a, b)));
    }
}

TEST_CASE("tate factors of unramified characters") {
    FieldPtr F = LocalField::make_base(3, 8);
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));

    // trivial character of F: 1/(1-X)
    CHECK(tate_lfactor(SmoothChar::trivial(F)) ==
          EulerFactor::from_root(ExactValue::one()));
    // trivial character of unramified K (f = 2): 1/(1-X^2), roots {1, -1}
    EulerFactor lk = tate_lfactor(SmoothChar::trivial(K));
    CHECK(lk == EulerFactor({ExactValue::one(), ExactValue::minus_one()}));
    // shift by 1: 1/(1-q^{-1}X)
    CHECK(tate_lfactor(SmoothChar::trivial(F), Rat(1)) ==
          EulerFactor::from_root(ev(0, 1, -1, 1)));
    // ramified character: 1
    CHECK(tate_lfactor(SmoothChar::eta(LocalField::make_extension(F, F->from_integer(3)))) ==
          EulerFactor::one());
}

TEST_CASE("tate factor of a twisted character equals the shifted factor") {
    FieldPtr F = LocalField::make_base(5, 8);
    FieldPtr K = LocalField::make_extension(F, F->from_integer(2));
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        Rat a(rng.range(-4, 4), 2);
        ExactValue unif(Rat(rng.range(0, 7), 8), Rat(rng.range(-2, 2), 1));
        SmoothChar chi = SmoothChar::from_generator_values(K, 0, {}, unif);
        SmoothChar twisted = char_mul(chi, SmoothChar::absvalue(K, a));
        CHECK(tate_lfactor(twisted) == tate_lfactor(chi, a));
    }
}

TEST_CASE("serialization helpers render canonically") {
    EulerFactor f({ExactValue::minus_one(), ExactValue::one(), ev(1, 3, -1, 1)});
    CHECK(f.str() == "1/((1 - e(1/3)*q^-1*X)(1 - X)(1 + X))");
    CHECK(EulerFactor::one().str() == "1");
}
