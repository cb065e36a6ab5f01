#include "asailab/local_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "asailab/units.hpp"

namespace asailab {

namespace {

struct ValInfo {
    // min over coordinates whose valuation is exactly known
    bool has_known = false;
    int min_known = 0;
    // min over lower bounds of zero-like coordinates
    bool has_bound = false;
    int min_bound = 0;

    void add_known(int v) {
        if (!has_known || v < min_known) min_known = v;
        has_known = true;
    }
    void add_bound(int b) {
        if (b >= PadicNum::kInfPrec) return;  // exact zero contributes nothing
        if (!has_bound || b < min_bound) min_bound = b;
        has_bound = true;
    }
};

// Valuation data of a coordinate span, in the normalization of fld.  Exact
// because the two halves of a quadratic step never cancel: in a ramified
// step their valuations have different parities, in an unramified step their
// residues are independent over the residue field of the parent.
ValInfo val_info(const LocalField* fld, const PadicNum* c, std::size_t n) {
    ValInfo out;
    if (fld->is_base()) {
        const PadicNum& x = c[0];
        if (x.is_zero_kind())
            out.add_bound(x.val_lower_bound());
        else
            out.add_known(x.val_lower_bound());
        return out;
    }
    const LocalField* par = fld->parent().get();
    std::size_t h = n / 2;
    ValInfo lo = val_info(par, c, h);
    ValInfo hi = val_info(par, c + h, h);
    int scale = fld->ramified_step() ? 2 : 1;
    int shift = fld->ramified_step() ? 1 : 0;
    if (lo.has_known) out.add_known(scale * lo.min_known);
    if (lo.has_bound) out.add_bound(scale * lo.min_bound);
    if (hi.has_known) out.add_known(scale * hi.min_known + shift);
    if (hi.has_bound) out.add_bound(scale * hi.min_bound + shift);
    return out;
}

}  // namespace

std::vector<PadicNum> mul_coords(const LocalField* fld, const std::vector<PadicNum>& a,
                                 const std::vector<PadicNum>& b) {
    struct Rec {
        static std::vector<PadicNum> go(const LocalField* fld, const PadicNum* a, const PadicNum* b,
                                        std::size_t n) {
            if (fld->is_base()) return {a[0] * b[0]};
            const LocalField* par = fld->parent().get();
            std::size_t h = n / 2;
            std::vector<PadicNum> a0b0 = go(par, a, b, h);
            std::vector<PadicNum> a1b1 = go(par, a + h, b + h, h);
            std::vector<PadicNum> a0b1 = go(par, a, b + h, h);
            std::vector<PadicNum> a1b0 = go(par, a + h, b, h);
            std::vector<PadicNum> d_hi = go(par, a1b1.data(), fld->d_coords_.data(), h);
            std::vector<PadicNum> out(n);
            for (std::size_t i = 0; i < h; ++i) {
                out[i] = a0b0[i] + d_hi[i];
                out[h + i] = a0b1[i] + a1b0[i];
            }
            return out;
        }
    };
    return Rec::go(fld, a.data(), b.data(), a.size());
}

// --- FieldElement -----------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<PadicNum> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<std::size_t>(field_->degree_over_base()))
        throw Error("coordinate vector has wrong length for field " + field_->name());
}

static void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
        throw FieldMismatch("elements of different fields: " + a.field()->name() + " vs " +
                            b.field()->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<PadicNum> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] + o.coords_[i];
    return {field_, std::move(out)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    std::vector<PadicNum> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
    return {field_, std::move(out)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    return {field_, mul_coords(field_.get(), coords_, o.coords_)};
}

FieldElement FieldElement::inverse() const {
    if (field_->is_base()) return {field_, {coords_[0].inverse()}};
    FieldElement a = parent_lo(), b = parent_hi();
    const FieldElement& d = field_->adjoined_square();
    FieldElement n = a * a - b * b * d;  // norm over the parent
    FieldElement ninv = n.inverse();
    FieldElement lo = a * ninv, hi = -(b * ninv);
    std::vector<PadicNum> out;
    out.reserve(coords_.size());
    out.insert(out.end(), lo.coords().begin(), lo.coords().end());
    out.insert(out.end(), hi.coords().begin(), hi.coords().end());
    return {field_, std::move(out)};
}

FieldElement FieldElement::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    FieldElement acc = field_->one();
    FieldElement base = *this;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int FieldElement::valuation() const {
    ValInfo vi = val_info(field_.get(), coords_.data(), coords_.size());
    if (!vi.has_known) throw PrecisionExhausted("valuation of (indistinguishable from) zero in " + field_->name());
    if (vi.has_bound && vi.min_bound < vi.min_known)
        throw PrecisionExhausted("valuation undecidable at working precision in " + field_->name());
    return vi.min_known;
}

int FieldElement::val_lower_bound() const {
    ValInfo vi = val_info(field_.get(), coords_.data(), coords_.size());
    int b = PadicNum::kInfPrec;
    if (vi.has_known) b = std::min(b, vi.min_known);
    if (vi.has_bound) b = std::min(b, vi.min_bound);
    return b;
}

bool FieldElement::is_zero_at_precision(int n) const {
    ValInfo vi = val_info(field_.get(), coords_.data(), coords_.size());
    if (vi.has_known && vi.min_known < n) return false;
    if (!vi.has_bound || vi.min_bound >= n) return true;
    throw PrecisionExhausted("zero test beyond known precision in " + field_->name());
}

bool FieldElement::eq_at_precision(const FieldElement& o, int n) const {
    check_same_field(*this, o);
    if (n < 0) n = field_->context().precision;
    return (*this - o).is_zero_at_precision(n);
}

FieldElement FieldElement::unit_part() const {
    int v = valuation();
    if (v == 0) return *this;
    FieldElement piv = v > 0 ? field_->uniformizer_inverse() : field_->uniformizer();
    FieldElement acc = *this;
    for (int i = 0; i < std::abs(v); ++i) acc = acc * piv;
    return acc;
}

FieldElement FieldElement::parent_lo() const {
    if (field_->is_base()) throw NotInTower("base field has no parent");
    std::size_t h = coords_.size() / 2;
    return {field_->parent(), std::vector<PadicNum>(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(h))};
}

FieldElement FieldElement::parent_hi() const {
    if (field_->is_base()) throw NotInTower("base field has no parent");
    std::size_t h = coords_.size() / 2;
    return {field_->parent(), std::vector<PadicNum>(coords_.begin() + static_cast<std::ptrdiff_t>(h), coords_.end())};
}

FieldElement FieldElement::conj_top() const {
    if (field_->is_base()) return *this;
    std::vector<PadicNum> out = coords_;
    for (std::size_t i = coords_.size() / 2; i < coords_.size(); ++i) out[i] = -out[i];
    return {field_, std::move(out)};
}

FieldElement FieldElement::norm_to_parent() const {
    FieldElement a = parent_lo(), b = parent_hi();
    return a * a - b * b * field_->adjoined_square();
}

FieldElement FieldElement::trace_to_parent() const {
    FieldElement a = parent_lo();
    return a + a;
}

FieldElement FieldElement::project_to_parent() const {
    FieldElement hi = parent_hi();
    ValInfo vi = val_info(hi.field().get(), hi.coords().data(), hi.coords().size());
    if (vi.has_known)
        throw NotInTower("element of " + field_->name() + " does not lie in " +
                         field_->parent()->name() + " at working precision");
    return parent_lo();
}

FieldElement FieldElement::truncated(int n) const {
    // n is an absolute precision in this field's valuation; keeping
    // ceil(n/e) digits on every base coordinate retains at least n digits
    // of the element.
    int base_prec = (n + field_->e() - 1) / field_->e();
    std::vector<PadicNum> out = coords_;
    for (PadicNum& c : out) c = c.truncated(base_prec);
    return {field_, std::move(out)};
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].str();
    }
    os << "]";
    return os.str();
}

// --- LocalField -------------------------------------------------------------

FieldPtr LocalField::make_base(long long p, int precision, const std::string& name) {
    auto fld = std::shared_ptr<LocalField>(new LocalField());
    fld->ctx_storage_ = std::make_shared<PrimeContext>(p, precision);
    fld->ctx_ = fld->ctx_storage_.get();
    fld->height_ = 0;
    fld->e_ = 1;
    fld->f_ = 1;
    fld->q_ = static_cast<std::uint64_t>(p);
    fld->name_ = name.empty() ? "Q_" + std::to_string(p) : name;
    fld->uniformizer_ = FieldElement(fld, {PadicNum::from_integer(*fld->ctx_, p)});
    fld->uniformizer_inv_ = FieldElement(fld, {PadicNum::from_rational(*fld->ctx_, Rat(1, p))});
    fld->residue_basis_ = {fld->one()};
    return fld;
}

FieldPtr LocalField::make_extension(const FieldPtr& base, const FieldElement& d,
                                    const std::string& name) {
    if (d.field() != base) throw FieldMismatch("adjoined square must be an element of the base");
    if (base->height_ >= 3)
        throw Error("tower height limit reached over " + base->name());
    int v = d.valuation();

    // reduce d by even powers of the uniformizer so v(d_red) is 0 or 1
    FieldElement d_red = d;
    int k = (v >= 0) ? v / 2 : -((-v + 1) / 2);
    if (k != 0) {
        FieldElement piv = k > 0 ? base->uniformizer_inverse() : base->uniformizer();
        for (int i = 0; i < std::abs(k); ++i) d_red = d_red * piv * piv;
    }
    int vr = v - 2 * k;  // 0 or 1
    bool ram = vr == 1;
    if (!ram && legendre(d_red) == 1)
        throw IsSquareError("adjoined element is a square in " + base->name());

    auto fld = std::shared_ptr<LocalField>(new LocalField());
    fld->ctx_ = base->ctx_;
    fld->ctx_storage_ = base->ctx_storage_;
    fld->parent_ = base;
    fld->d_elem_ = d_red;
    fld->d_coords_ = d_red.coords();
    fld->height_ = base->height_ + 1;
    fld->ramified_step_ = ram;
    fld->e_ = base->e_ * (ram ? 2 : 1);
    fld->f_ = base->f_ * (ram ? 1 : 2);
    fld->q_ = 1;
    for (int i = 0; i < fld->f_; ++i) fld->q_ *= static_cast<std::uint64_t>(fld->ctx_->p);
    fld->name_ = name.empty() ? base->name_ + "(sqrt)" : name;

    std::size_t deg = static_cast<std::size_t>(fld->degree_over_base());
    auto elem = [&](std::vector<PadicNum> c) { return FieldElement(fld, std::move(c)); };
    std::vector<PadicNum> gen_coords(deg, PadicNum::zero(*fld->ctx_));
    gen_coords[deg / 2] = PadicNum::from_integer(*fld->ctx_, 1);
    FieldElement gen = elem(std::move(gen_coords));

    if (ram) {
        fld->uniformizer_ = gen;
        // g^{-1} = g / d
        FieldElement dinv_up = fld->embed(d_red.inverse());
        fld->uniformizer_inv_ = gen * dinv_up;
        fld->residue_basis_.reserve(static_cast<std::size_t>(base->f_));
        for (const FieldElement& b : base->residue_basis_) fld->residue_basis_.push_back(fld->embed(b));
    } else {
        fld->uniformizer_ = fld->embed(base->uniformizer_);
        fld->uniformizer_inv_ = fld->embed(base->uniformizer_inv_);
        fld->residue_basis_.reserve(static_cast<std::size_t>(2 * base->f_));
        for (const FieldElement& b : base->residue_basis_) fld->residue_basis_.push_back(fld->embed(b));
        for (const FieldElement& b : base->residue_basis_) fld->residue_basis_.push_back(fld->embed(b) * gen);
    }
    return fld;
}

const FieldElement& LocalField::adjoined_square() const {
    if (is_base()) throw NotInTower("base field has no adjoined square");
    return d_elem_;
}

FieldElement LocalField::generator() const {
    if (is_base()) throw NotInTower("base field has no generator");
    std::size_t deg = static_cast<std::size_t>(degree_over_base());
    std::vector<PadicNum> c(deg, PadicNum::zero(*ctx_));
    c[deg / 2] = PadicNum::from_integer(*ctx_, 1);
    return {shared_from_this(), std::move(c)};
}

FieldElement LocalField::zero() const {
    return {shared_from_this(),
            std::vector<PadicNum>(static_cast<std::size_t>(degree_over_base()), PadicNum::zero(*ctx_))};
}

FieldElement LocalField::one() const { return from_integer(1); }

FieldElement LocalField::from_integer(long long n) const {
    return from_scalar(PadicNum::from_integer(*ctx_, n));
}

FieldElement LocalField::from_rational(const Rat& x) const {
    return from_scalar(PadicNum::from_rational(*ctx_, x));
}

FieldElement LocalField::from_scalar(const PadicNum& x) const {
    std::vector<PadicNum> c(static_cast<std::size_t>(degree_over_base()), PadicNum::zero(*ctx_));
    c[0] = x;
    return {shared_from_this(), std::move(c)};
}

bool LocalField::has_subfield(const FieldPtr& sub) const {
    const LocalField* cur = this;
    while (cur) {
        if (cur == sub.get()) return true;
        cur = cur->parent_.get();
    }
    return false;
}

FieldElement LocalField::embed(const FieldElement& x) const {
    if (x.field().get() == this) return x;
    if (!has_subfield(x.field()))
        throw NotInTower(x.field()->name() + " is not in the chain of " + name());
    std::vector<PadicNum> c(static_cast<std::size_t>(degree_over_base()), PadicNum::zero(*ctx_));
    for (std::size_t i = 0; i < x.coords().size(); ++i) c[i] = x.coords()[i];
    return {shared_from_this(), std::move(c)};
}

const FieldElement& LocalField::residue_rep(std::uint64_t idx) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (residue_reps_.empty()) {
        residue_reps_.reserve(q_);
        for (std::uint64_t i = 0; i < q_; ++i) {
            FieldElement acc = zero();
            std::uint64_t rest = i;
            for (int j = 0; j < f_; ++j) {
                long long digit = static_cast<long long>(rest % static_cast<std::uint64_t>(ctx_->p));
                rest /= static_cast<std::uint64_t>(ctx_->p);
                if (digit) acc = acc + residue_basis_[static_cast<std::size_t>(j)] * from_integer(digit);
            }
            residue_reps_.push_back(acc);
        }
    }
    if (idx >= q_) throw Error("residue index out of range");
    return residue_reps_[idx];
}

namespace {

// Residue coefficients of x over the F_p-basis of the residue field,
// ordered compatibly with LocalField::residue_basis().
void residue_coeffs(const LocalField* fld, const FieldElement& x, std::vector<long long>& out) {
    if (fld->is_base()) {
        out.push_back(x.coords()[0].residue_digit());
        return;
    }
    if (fld->ramified_step()) {
        residue_coeffs(fld->parent().get(), x.parent_lo(), out);
    } else {
        residue_coeffs(fld->parent().get(), x.parent_lo(), out);
        residue_coeffs(fld->parent().get(), x.parent_hi(), out);
    }
}

}  // namespace

std::uint64_t LocalField::residue_index(const FieldElement& x) const {
    if (x.field().get() != this) throw FieldMismatch("residue_index: wrong field");
    std::vector<long long> coeffs;
    residue_coeffs(this, x, coeffs);
    std::uint64_t idx = 0;
    for (std::size_t j = coeffs.size(); j-- > 0;)
        idx = idx * static_cast<std::uint64_t>(ctx_->p) + static_cast<std::uint64_t>(coeffs[j]);
    return idx;
}

std::uint64_t LocalField::unit_key(const FieldElement& unit, int level) const {
    if (unit.field().get() != this) throw FieldMismatch("unit_key: wrong field");
    std::uint64_t key = 0, mult = 1;
    FieldElement y = unit;
    for (int i = 0; i < level; ++i) {
        std::uint64_t idx = residue_index(y);
        if (i == 0 && idx == 0) throw Error("unit_key of a non-unit");
        key += idx * mult;
        mult *= q_;
        if (i + 1 < level) y = (y - residue_rep(idx)) * uniformizer_inv_;
    }
    return key;
}

const FieldElement& LocalField::canonical_nonsquare_unit() const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        if (nonsquare_unit_) return *nonsquare_unit_;
    }
    for (std::uint64_t i = 1; i < q_; ++i) {
        const FieldElement& r = residue_rep(i);
        if (legendre(r) == -1) {
            std::lock_guard<std::mutex> lock(cache_mu_);
            if (!nonsquare_unit_) nonsquare_unit_ = r;
            return *nonsquare_unit_;
        }
    }
    throw Error("no nonsquare unit found (impossible for odd p)");
}

std::vector<FieldElement> LocalField::square_class_reps() const {
    const FieldElement& w = canonical_nonsquare_unit();
    return {one(), w, uniformizer_, w * uniformizer_};
}

const FieldElement& LocalField::teichmueller_generator() const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        if (teich_gen_) return *teich_gen_;
    }
    // smallest canonical residue representative of multiplicative order q-1
    std::uint64_t qm1 = q_ - 1;
    std::vector<std::uint64_t> prime_factors;
    {
        std::uint64_t m = qm1;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            while (m % d == 0) {
                if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
                m /= d;
            }
        if (m > 1) prime_factors.push_back(m);
    }
    FieldElement gen = one();
    bool found = false;
    for (std::uint64_t i = 2; i < q_ && !found; ++i) {
        const FieldElement& r = residue_rep(i);
        bool ok = true;
        for (std::uint64_t ell : prime_factors) {
            FieldElement t = r.pow(static_cast<long long>(qm1 / ell));
            if ((t - one()).is_zero_at_precision(1)) { ok = false; break; }
        }
        if (ok) { gen = r; found = true; }
    }
    if (!found) throw Error("residue field generator not found");
    // Teichmueller lift: iterate x -> x^q, gaining a digit per step.
    FieldElement t = gen;
    for (int i = 0; i < ctx_->rel_digits + 2; ++i) t = t.pow(static_cast<long long>(q_));
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (!teich_gen_) teich_gen_ = t;
    return *teich_gen_;
}

std::uint64_t LocalField::unit_group_cardinality(int level) const {
    std::uint64_t card = q_ - 1;
    for (int i = 1; i < level; ++i) card *= q_;
    return card;
}

std::shared_ptr<const UnitGroup> LocalField::unit_group(int level, std::uint64_t budget) const {
    if (level < 1) throw Error("unit group level must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = unit_groups_.find(level);
        if (it != unit_groups_.end()) return it->second;
    }
    std::uint64_t card = unit_group_cardinality(level);
    if (card > budget)
        throw BudgetExceeded("unit enumeration of " + name() + " at level " + std::to_string(level) +
                                 " exceeds budget " + std::to_string(budget),
                             card);
    auto grp = std::make_shared<UnitGroup>();
    grp->field = shared_from_this();
    grp->level = level;
    grp->elements.reserve(card);
    grp->keys.reserve(card);
    std::uint64_t total = 1;
    for (int i = 0; i < level; ++i) total *= q_;
    for (std::uint64_t key = 0; key < total; ++key) {
        if (key % q_ == 0) continue;  // residue digit zero: not a unit
        FieldElement acc = zero();
        FieldElement piv = one();
        std::uint64_t rest = key;
        for (int i = 0; i < level; ++i) {
            std::uint64_t idx = rest % q_;
            rest /= q_;
            if (idx) acc = acc + residue_rep(idx) * piv;
            piv = piv * uniformizer_;
        }
        grp->index_of.emplace(key, static_cast<std::uint32_t>(grp->elements.size()));
        grp->elements.push_back(acc);
        grp->keys.push_back(key);
    }
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto [it, inserted] = unit_groups_.emplace(level, grp);
    return it->second;
}

// --- free operations ---------------------------------------------------------

FieldPtr make_extension(const FieldPtr& base, const FieldElement& d, const std::string& name) {
    return LocalField::make_extension(base, d, name);
}

int legendre(const FieldElement& unit) {
    const LocalField& E = *unit.field();
    if (unit.valuation() != 0) throw Error("legendre symbol of a non-unit");
    FieldElement t = unit.pow(static_cast<long long>((E.q() - 1) / 2));
    if ((t - E.one()).is_zero_at_precision(1)) return 1;
    if ((t + E.one()).is_zero_at_precision(1)) return -1;
    throw Error("legendre power is not +-1 (corrupt unit?)");
}

SquareClass square_class(const FieldElement& x) {
    int v = x.valuation();
    FieldElement u = x.unit_part();
    return {((v % 2) + 2) % 2, legendre(u) == 1};
}

int hilbert_symbol(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    int alpha = a.valuation(), beta = b.valuation();
    FieldElement ua = a.unit_part(), ub = b.unit_part();
    FieldElement c = ua.pow(beta) * ub.pow(-alpha);
    if ((static_cast<long long>(alpha) * beta) % 2 != 0) c = -c;
    return legendre(c);
}

std::optional<FieldElement> try_sqrt(const FieldElement& x) {
    const FieldPtr& E = x.field();
    int v = x.valuation();
    if (v % 2 != 0) return std::nullopt;
    FieldElement w = x.unit_part();
    // residue square root by canonical search
    std::optional<FieldElement> root;
    for (std::uint64_t i = 1; i < E->q(); ++i) {
        const FieldElement& r = E->residue_rep(i);
        if ((r * r - w).is_zero_at_precision(1)) { root = r; break; }
    }
    if (!root) return std::nullopt;
    // Hensel / Newton: t <- (t + w/t) / 2, quadratic convergence
    FieldElement t = *root;
    FieldElement half = E->from_rational(Rat(1, 2));
    for (int i = 0; i < 8; ++i) t = (t + w * t.inverse()) * half;
    if (!(t * t - w).is_zero_at_precision(E->context().precision))
        throw PrecisionExhausted("square root did not converge at working precision");
    FieldElement result = t;
    int k = v / 2;
    const FieldElement& piv = k >= 0 ? E->uniformizer() : E->uniformizer_inverse();
    for (int i = 0; i < std::abs(k); ++i) result = result * piv;
    return result;
}

FieldElement norm_to(const FieldElement& x, const FieldPtr& sub) {
    if (!x.field()->has_subfield(sub))
        throw NotInTower(sub->name() + " is not below " + x.field()->name());
    FieldElement acc = x;
    while (acc.field() != sub) acc = acc.norm_to_parent();
    return acc;
}

// --- units ------------------------------------------------------------------

std::uint32_t UnitGroup::index_of_key(std::uint64_t key) const {
    auto it = index_of.find(key);
    if (it == index_of.end()) throw Error("unit key not in enumeration");
    return it->second;
}

std::uint32_t UnitGroup::index_of_element(const FieldElement& x) const {
    return index_of_key(field->unit_key(x, level));
}

std::shared_ptr<const UnitGroup> unit_group_enumerate(const FieldPtr& field, int level,
                                                      std::uint64_t budget) {
    return field->unit_group(level, budget);
}

std::vector<FieldElement> canonical_unit_generators(const FieldPtr& field, int level) {
    std::vector<FieldElement> gens;
    gens.push_back(field->teichmueller_generator());
    FieldElement piv = field->one();
    for (int i = 1; i < level; ++i) {
        piv = piv * field->uniformizer();
        for (const FieldElement& b : field->residue_basis()) gens.push_back(field->one() + piv * b);
    }
    return gens;
}

}  // namespace asailab
