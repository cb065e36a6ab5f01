#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "asailab/errors.hpp"
#include "asailab/rational.hpp"

namespace asailab {

// Global parameters of a run: the odd residual prime and the decision
// precision N (digits in each field's own valuation).  Arithmetic is carried
// with a few guard digits above N; decisions that would need digits beyond
// what an operand actually carries raise PrecisionExhausted instead of
// guessing.
struct PrimeContext {
    long long p = 3;
    int precision = 8;  // N
    int rel_digits = 0; // internal relative cap R; 0 = derive from precision
    std::vector<std::uint64_t> pow_table;  // p^0 .. p^rel_digits

    PrimeContext() = default;
    PrimeContext(long long prime, int prec);

    std::uint64_t pow_p(int k) const { return pow_table[static_cast<std::size_t>(k)]; }
    std::uint64_t modulus() const { return pow_table[static_cast<std::size_t>(rel_digits)]; }
};

// A truncated p-adic number over Q_p in capped-relative form:
// either p^val * unit with the unit known modulo p^rprec, or a zero known
// modulo p^zero_prec (exact zeros carry infinite precision).
class PadicNum {
  public:
    static constexpr int kInfPrec = std::numeric_limits<int>::max() / 2;

    PadicNum() : ctx_(nullptr), zero_(true), zero_prec_(kInfPrec) {}

    static PadicNum zero(const PrimeContext& ctx) { return inexact_zero(ctx, kInfPrec); }
    static PadicNum inexact_zero(const PrimeContext& ctx, int abs_prec);
    static PadicNum from_integer(const PrimeContext& ctx, long long n);
    static PadicNum from_rational(const PrimeContext& ctx, const Rat& x);
    static PadicNum from_unit(const PrimeContext& ctx, std::uint64_t unit, int val, int rprec);

    const PrimeContext* context() const { return ctx_; }
    bool is_zero_kind() const { return zero_; }
    bool is_exact_zero() const { return zero_ && zero_prec_ >= kInfPrec; }

    // Normalized valuation; PrecisionExhausted when indistinguishable from 0.
    int valuation() const;
    // Lower bound on the valuation that is always available.
    int val_lower_bound() const { return zero_ ? zero_prec_ : val_; }
    // Absolute precision: the number is known modulo p^{abs_precision()}.
    int abs_precision() const { return zero_ ? zero_prec_ : val_ + rprec_; }

    std::uint64_t unit_mantissa() const { return unit_; }
    int rel_precision() const { return rprec_; }

    // Is x == 0 modulo p^abs_prec?  Throws PrecisionExhausted when the answer
    // is not determined by the digits carried.
    bool is_zero_at(int abs_prec) const;

    PadicNum operator-() const;
    PadicNum operator+(const PadicNum& o) const;
    PadicNum operator-(const PadicNum& o) const { return *this + (-o); }
    PadicNum operator*(const PadicNum& o) const;
    PadicNum inverse() const;

    // Multiply by p^k.
    PadicNum shifted(int k) const;
    // Forget digits beyond absolute precision a (test helper).
    PadicNum truncated(int abs_prec) const;

    // Digit in {0..p-1}: residue of x mod p, requires val >= 0.
    long long residue_digit() const;

    std::string str() const;

  private:
    const PrimeContext* ctx_;
    bool zero_ = true;
    int zero_prec_ = kInfPrec;  // zero kind: known 0 mod p^zero_prec
    int val_ = 0;               // nonzero kind
    std::uint64_t unit_ = 0;    // coprime to p, reduced mod p^rprec
    int rprec_ = 0;

    const PrimeContext& ctx_or_throw(const PadicNum& other) const;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod);

}  // namespace asailab
