#include "asailab/padic.hpp"

#include <algorithm>
#include <sstream>

namespace asailab {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Largest R with p^R < 2^62, so mantissa products fit in unsigned __int128
// and sums of two mantissas never wrap.
int max_digits(long long p) {
    int k = 0;
    unsigned __int128 acc = 1;
    const unsigned __int128 lim = (static_cast<unsigned __int128>(1) << 62);
    while (acc * static_cast<std::uint64_t>(p) < lim) {
        acc *= static_cast<std::uint64_t>(p);
        ++k;
    }
    return k;
}

}  // namespace

PrimeContext::PrimeContext(long long prime, int prec) : p(prime), precision(prec) {
    if (!is_prime(p) || p == 2) throw Error("prime context requires an odd prime, got " + std::to_string(p));
    if (precision < 2) throw Error("precision must be at least 2");
    rel_digits = std::min(precision + 8, max_digits(p));
    if (rel_digits < precision) throw Error("precision too large for 64-bit mantissas at p=" + std::to_string(p));
    pow_table.resize(static_cast<std::size_t>(rel_digits) + 1);
    pow_table[0] = 1;
    for (int k = 1; k <= rel_digits; ++k) pow_table[static_cast<std::size_t>(k)] = pow_table[static_cast<std::size_t>(k - 1)] * static_cast<std::uint64_t>(p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod) {
    // extended Euclid on signed 128-bit intermediates
    __int128 t = 0, new_t = 1;
    __int128 r = static_cast<__int128>(mod), new_r = static_cast<__int128>(a % mod);
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw DivisionByZero("mod_inverse of non-unit");
    if (t < 0) t += static_cast<__int128>(mod);
    return static_cast<std::uint64_t>(t);
}

PadicNum PadicNum::inexact_zero(const PrimeContext& ctx, int abs_prec) {
    PadicNum z;
    z.ctx_ = &ctx;
    z.zero_ = true;
    z.zero_prec_ = abs_prec;
    return z;
}

PadicNum PadicNum::from_unit(const PrimeContext& ctx, std::uint64_t unit, int val, int rprec) {
    rprec = std::min(rprec, ctx.rel_digits);
    if (rprec <= 0) return inexact_zero(ctx, val);
    std::uint64_t m = unit % ctx.pow_p(rprec);
    if (m % static_cast<std::uint64_t>(ctx.p) == 0) throw Error("from_unit: mantissa not a unit");
    PadicNum x;
    x.ctx_ = &ctx;
    x.zero_ = false;
    x.val_ = val;
    x.unit_ = m;
    x.rprec_ = rprec;
    return x;
}

PadicNum PadicNum::from_integer(const PrimeContext& ctx, long long n) {
    if (n == 0) return zero(ctx);
    int v = 0;
    bool neg = n < 0;
    unsigned long long a = neg ? static_cast<unsigned long long>(-(n + 1)) + 1ULL : static_cast<unsigned long long>(n);
    while (a % static_cast<unsigned long long>(ctx.p) == 0) { a /= static_cast<unsigned long long>(ctx.p); ++v; }
    std::uint64_t m = a % ctx.modulus();
    if (neg) m = (ctx.modulus() - m) % ctx.modulus();
    return from_unit(ctx, m, v, ctx.rel_digits);
}

PadicNum PadicNum::from_rational(const PrimeContext& ctx, const Rat& x) {
    if (x.numerator() == 0) return zero(ctx);
    PadicNum num = from_integer(ctx, x.numerator());
    PadicNum den = from_integer(ctx, x.denominator());
    return num * den.inverse();
}

const PrimeContext& PadicNum::ctx_or_throw(const PadicNum& other) const {
    const PrimeContext* c = ctx_ ? ctx_ : other.ctx_;
    if (!c) throw Error("arithmetic on two default-constructed padic numbers");
    if (ctx_ && other.ctx_ && ctx_ != other.ctx_) throw FieldMismatch("padic operands from different contexts");
    return *c;
}

int PadicNum::valuation() const {
    if (zero_) throw PrecisionExhausted("valuation of (indistinguishable from) zero");
    return val_;
}

bool PadicNum::is_zero_at(int abs_prec) const {
    if (zero_) {
        if (zero_prec_ >= abs_prec) return true;
        throw PrecisionExhausted("zero test beyond known precision");
    }
    return val_ >= abs_prec;
}

PadicNum PadicNum::operator-() const {
    if (zero_) return *this;
    PadicNum x = *this;
    std::uint64_t mod = ctx_->pow_p(rprec_);
    x.unit_ = (mod - unit_ % mod) % mod;
    return x;
}

PadicNum PadicNum::operator+(const PadicNum& o) const {
    if (zero_ && zero_prec_ >= kInfPrec && !ctx_) return o;  // default zero
    if (o.zero_ && o.zero_prec_ >= kInfPrec && !o.ctx_) return *this;
    const PrimeContext& ctx = ctx_or_throw(o);
    if (zero_ && o.zero_) return inexact_zero(ctx, std::min(zero_prec_, o.zero_prec_));
    if (zero_ || o.zero_) {
        const PadicNum& z = zero_ ? *this : o;
        const PadicNum& n = zero_ ? o : *this;
        if (n.val_ >= z.zero_prec_) return inexact_zero(ctx, z.zero_prec_);
        return from_unit(ctx, n.unit_, n.val_, std::min(n.rprec_, z.zero_prec_ - n.val_));
    }
    int v = std::min(val_, o.val_);
    int abs = std::min(abs_precision(), o.abs_precision());
    int digits = std::min(abs - v, ctx.rel_digits);
    if (digits <= 0) return inexact_zero(ctx, abs);
    std::uint64_t mod = ctx.pow_p(digits);
    auto lifted = [&](const PadicNum& x) -> std::uint64_t {
        int sh = x.val_ - v;
        if (sh >= digits) return 0;
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x.unit_) * ctx.pow_p(sh) % mod);
    };
    std::uint64_t m = (lifted(*this) + lifted(o)) % mod;
    if (m == 0) return inexact_zero(ctx, abs);
    int k = 0;
    while (m % static_cast<std::uint64_t>(ctx.p) == 0) { m /= static_cast<std::uint64_t>(ctx.p); ++k; }
    return from_unit(ctx, m, v + k, digits - k);
}

PadicNum PadicNum::operator*(const PadicNum& o) const {
    if ((zero_ && zero_prec_ >= kInfPrec) || (o.zero_ && o.zero_prec_ >= kInfPrec)) {
        const PrimeContext* c = ctx_ ? ctx_ : o.ctx_;
        return c ? zero(*c) : PadicNum();
    }
    const PrimeContext& ctx = ctx_or_throw(o);
    if (zero_ || o.zero_) {
        // v(xy) >= zero_prec + val_lower_bound(other)
        int bound = (zero_ ? zero_prec_ : val_) + (o.zero_ ? o.zero_prec_ : o.val_);
        return inexact_zero(ctx, std::min(bound, kInfPrec));
    }
    int rp = std::min(rprec_, o.rprec_);
    std::uint64_t mod = ctx.pow_p(rp);
    std::uint64_t m = static_cast<std::uint64_t>(static_cast<unsigned __int128>(unit_ % mod) * (o.unit_ % mod) % mod);
    return from_unit(ctx, m, val_ + o.val_, rp);
}

PadicNum PadicNum::inverse() const {
    if (zero_) {
        if (is_exact_zero()) throw DivisionByZero("inverse of zero");
        throw PrecisionExhausted("inverse of (indistinguishable from) zero");
    }
    std::uint64_t mod = ctx_->pow_p(rprec_);
    return from_unit(*ctx_, mod_inverse(unit_, mod), -val_, rprec_);
}

PadicNum PadicNum::shifted(int k) const {
    if (zero_) {
        if (is_exact_zero()) return *this;
        return inexact_zero(*ctx_, zero_prec_ + k);
    }
    PadicNum x = *this;
    x.val_ += k;
    return x;
}

PadicNum PadicNum::truncated(int abs_prec) const {
    if (!ctx_) return *this;
    if (zero_) return inexact_zero(*ctx_, std::min(zero_prec_, abs_prec));
    if (val_ >= abs_prec) return inexact_zero(*ctx_, abs_prec);
    return from_unit(*ctx_, unit_, val_, std::min(rprec_, abs_prec - val_));
}

long long PadicNum::residue_digit() const {
    if (zero_) {
        if (zero_prec_ >= 1) return 0;
        throw PrecisionExhausted("residue digit beyond known precision");
    }
    if (val_ < 0) throw Error("residue digit of non-integral element");
    if (val_ > 0) return 0;
    return static_cast<long long>(unit_ % static_cast<std::uint64_t>(ctx_->p));
}

std::string PadicNum::str() const {
    std::ostringstream os;
    if (zero_) {
        if (is_exact_zero()) return "0";
        os << "O(p^" << zero_prec_ << ")";
        return os.str();
    }
    os << unit_ << "*p^" << val_ << " + O(p^" << abs_precision() << ")";
    return os.str();
}

}  // namespace asailab
