#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "asailab/padic.hpp"

namespace asailab {

class LocalField;
class FieldElement;
using FieldPtr = std::shared_ptr<const LocalField>;

// Square class of a nonzero element for p odd: valuation parity plus the
// Legendre symbol of the unit part in the residue field.  The four classes
// form a Klein four-group and determine the element modulo squares.
struct SquareClass {
    int val_parity = 0;          // v mod 2
    bool residue_square = true;  // Legendre test of the unit part

    bool is_trivial() const { return val_parity == 0 && residue_square; }
    SquareClass operator*(const SquareClass& o) const {
        return {(val_parity + o.val_parity) % 2, residue_square == o.residue_square};
    }
    friend bool operator==(const SquareClass& a, const SquareClass& b) {
        return a.val_parity == b.val_parity && a.residue_square == b.residue_square;
    }
};

// Element of a tower field, stored as its 2^height coordinate vector over
// Q_p in the tower basis (coordinates over the parent are the two halves).
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<PadicNum> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<PadicNum>& coords() const { return coords_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(long long k) const;

    // Normalized valuation in this element's own field (v(uniformizer) = 1).
    int valuation() const;
    int val_lower_bound() const;
    // Is x == 0 modulo P^n?  PrecisionExhausted when undecidable.
    bool is_zero_at_precision(int n) const;
    // x == y modulo P^n (default n = context precision N).
    bool eq_at_precision(const FieldElement& o, int n = -1) const;

    // x = w^v * unit with the field's fixed uniformizer.
    FieldElement unit_part() const;

    // Coordinates over the parent field.
    FieldElement parent_lo() const;
    FieldElement parent_hi() const;
    // Conjugation over the parent: a + b*g |-> a - b*g.
    FieldElement conj_top() const;
    // x * conj_top(x) and x + conj_top(x), as parent elements.
    FieldElement norm_to_parent() const;
    FieldElement trace_to_parent() const;
    // Inverse of the parent embedding; NotInTower if the top coordinate is
    // provably nonzero.
    FieldElement project_to_parent() const;

    // Forget digits beyond P^n (test helper; n in this field's valuation).
    FieldElement truncated(int n) const;

    std::string str() const;

  private:
    FieldPtr field_;
    std::vector<PadicNum> coords_;
};

struct UnitGroup;

// A node in a tower of quadratic extensions of Q_p.  Immutable after
// construction; build with make_base / make_extension and share freely.
class LocalField : public std::enable_shared_from_this<LocalField> {
  public:
    static FieldPtr make_base(long long p, int precision, const std::string& name = "");
    // Adjoin a square root of d (d in *base).  d is reduced modulo squares of
    // the uniformizer so the stored adjoined square has valuation 0 or 1.
    static FieldPtr make_extension(const FieldPtr& base, const FieldElement& d,
                                   const std::string& name = "");

    const PrimeContext& context() const { return *ctx_; }
    const FieldPtr& parent() const { return parent_; }
    bool is_base() const { return parent_ == nullptr; }
    int height() const { return height_; }          // degree over base = 2^height
    long long degree_over_base() const { return 1LL << height_; }
    int e() const { return e_; }                    // absolute ramification index
    int f() const { return f_; }                    // absolute residue degree
    std::uint64_t q() const { return q_; }          // residue cardinality p^f
    bool ramified_step() const { return ramified_step_; }
    const std::string& name() const { return name_; }

    // The reduced adjoined square d (element of the parent).
    const FieldElement& adjoined_square() const;
    // The adjoined square root g with g^2 = d, as an element of this field.
    FieldElement generator() const;
    const FieldElement& uniformizer() const { return uniformizer_; }
    const FieldElement& uniformizer_inverse() const { return uniformizer_inv_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long long n) const;
    FieldElement from_rational(const Rat& x) const;
    FieldElement from_scalar(const PadicNum& x) const;

    // Tower navigation: true if sub appears in this field's parent chain.
    bool has_subfield(const FieldPtr& sub) const;
    // Canonical embedding of an element of a chain subfield.
    FieldElement embed(const FieldElement& x) const;

    // Residue-field structure: lifts of an F_p-basis of the residue field.
    const std::vector<FieldElement>& residue_basis() const { return residue_basis_; }
    // Canonical residue representative #idx, idx in [0, q).
    const FieldElement& residue_rep(std::uint64_t idx) const;
    // Index of the residue of x (requires v(x) >= 0).
    std::uint64_t residue_index(const FieldElement& x) const;

    // Canonical key of a unit modulo P^n (digit string in base q, packed).
    std::uint64_t unit_key(const FieldElement& unit, int level) const;

    // Smallest canonical residue representative that is a nonsquare unit.
    const FieldElement& canonical_nonsquare_unit() const;
    // Representatives {1, w, pi, w*pi} of the four square classes.
    std::vector<FieldElement> square_class_reps() const;

    // Teichmueller lift of the canonical residue-field generator: the unit of
    // exact order q-1.
    const FieldElement& teichmueller_generator() const;

    // Complete enumeration of (R/P^level)^*; cached per level.
    std::shared_ptr<const UnitGroup> unit_group(int level, std::uint64_t budget) const;

    std::uint64_t unit_group_cardinality(int level) const;

  private:
    LocalField() = default;

    const PrimeContext* ctx_ = nullptr;
    std::shared_ptr<PrimeContext> ctx_storage_;  // owned by the base field
    FieldPtr parent_;
    std::vector<PadicNum> d_coords_;  // adjoined square, coords over grandparent basis
    FieldElement d_elem_;             // same, as an element of the parent
    int height_ = 0;
    int e_ = 1, f_ = 1;
    std::uint64_t q_ = 0;
    bool ramified_step_ = false;
    FieldElement uniformizer_;
    FieldElement uniformizer_inv_;
    std::vector<FieldElement> residue_basis_;
    std::string name_;

    mutable std::mutex cache_mu_;
    mutable std::vector<FieldElement> residue_reps_;
    mutable std::optional<FieldElement> nonsquare_unit_;
    mutable std::optional<FieldElement> teich_gen_;
    mutable std::map<int, std::shared_ptr<const UnitGroup>> unit_groups_;

    friend class FieldElement;
    friend std::vector<PadicNum> mul_coords(const LocalField* fld,
                                            const std::vector<PadicNum>& a,
                                            const std::vector<PadicNum>& b);
};

// --- padic_core operations -------------------------------------------------

FieldPtr make_extension(const FieldPtr& base, const FieldElement& d, const std::string& name = "");

SquareClass square_class(const FieldElement& x);

// Legendre symbol of a unit in the residue field: +1 or -1.
int legendre(const FieldElement& unit);

// Tame Hilbert symbol (a,b) over the common field of a and b, p odd:
// with alpha=v(a), beta=v(b), the Legendre symbol of the unit
// (-1)^{alpha*beta} a^beta b^{-alpha}.  Equals +1 iff a is a norm from
// E(sqrt b).
int hilbert_symbol(const FieldElement& a, const FieldElement& b);

// Square root, when one exists at the working precision.
std::optional<FieldElement> try_sqrt(const FieldElement& x);

// Norm along the tower chain down to sub (product of the conjugate orbit).
FieldElement norm_to(const FieldElement& x, const FieldPtr& sub);

}  // namespace asailab
