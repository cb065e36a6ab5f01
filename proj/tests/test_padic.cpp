#include "asailab/padic.hpp"

#include "doctest.h"

using namespace asailab;

TEST_CASE("context validates prime and precision") {
    CHECK_THROWS_AS(PrimeContext(4, 8), Error);
    CHECK_THROWS_AS(PrimeContext(2, 8), Error);
    CHECK_THROWS_AS(PrimeContext(3, 1), Error);
    PrimeContext ctx(3, 8);
    CHECK(ctx.rel_digits >= 8);
    CHECK(ctx.pow_p(2) == 9);
}

TEST_CASE("integer and rational construction") {
    PrimeContext ctx(3, 8);
    PadicNum a = PadicNum::from_integer(ctx, 18);  // 2 * 3^2
    CHECK(a.valuation() == 2);
    CHECK(a.unit_mantissa() % 3 == 2);
    PadicNum b = PadicNum::from_rational(ctx, Rat(1, 3));
    CHECK(b.valuation() == -1);
    PadicNum c = PadicNum::from_integer(ctx, -1);
    CHECK((a * b * b).valuation() == 0);
    CHECK((c * c - PadicNum::from_integer(ctx, 1)).is_zero_at(ctx.rel_digits));
}

TEST_CASE("addition with cancellation tracks precision") {
    PrimeContext ctx(3, 8);
    PadicNum one = PadicNum::from_integer(ctx, 1);
    PadicNum x = PadicNum::from_integer(ctx, 1 + 3);
    // (1 + p) + (-1) = p
    PadicNum sum = x + (-one);
    CHECK(sum.valuation() == 1);
    CHECK((sum - PadicNum::from_integer(ctx, 3)).is_zero_at(ctx.rel_digits - 1));
    // full cancellation leaves an inexact zero at the carried precision
    PadicNum z = one + (-one);
    CHECK(z.is_zero_kind());
    CHECK_THROWS_AS(z.valuation(), PrecisionExhausted);
    CHECK(z.is_zero_at(ctx.rel_digits));
    CHECK_THROWS_AS(z.is_zero_at(ctx.rel_digits + 1), PrecisionExhausted);
}

TEST_CASE("inverse and division errors") {
    PrimeContext ctx(5, 8);
    PadicNum x = PadicNum::from_integer(ctx, 10);
    PadicNum prod = x * x.inverse();
    CHECK((prod - PadicNum::from_integer(ctx, 1)).is_zero_at(ctx.rel_digits));
    CHECK_THROWS_AS(PadicNum::zero(ctx).inverse(), DivisionByZero);
    CHECK_THROWS_AS(PadicNum::inexact_zero(ctx, 3).inverse(), PrecisionExhausted);
}

TEST_CASE("truncation is honest about lost digits") {
    PrimeContext ctx(3, 8);
    PadicNum x = PadicNum::from_integer(ctx, 1).truncated(2);
    PadicNum d = x - PadicNum::from_integer(ctx, 1);
    CHECK(d.is_zero_at(2));
    CHECK_THROWS_AS(d.is_zero_at(3), PrecisionExhausted);
    // a truncated operand caps the precision of results
    PadicNum y = x * PadicNum::from_integer(ctx, 3);
    CHECK(y.abs_precision() == 3);
}

TEST_CASE("mod_pow and mod_inverse") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_inverse(3, 243 * 3 + 1) == 0 * 0 + mod_inverse(3, 730));
    std::uint64_t m = 2187;  // 3^7
    for (std::uint64_t a : {1ULL, 2ULL, 5ULL, 2186ULL})
        CHECK(a * mod_inverse(a, m) % m == 1);
    CHECK_THROWS_AS(mod_inverse(3, 9), DivisionByZero);
}
