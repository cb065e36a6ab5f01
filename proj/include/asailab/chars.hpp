#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "asailab/exact_value.hpp"
#include "asailab/galois.hpp"
#include "asailab/units.hpp"

namespace asailab {

// Smooth multiplicative character of a local field at finite level:
// chi(x) = uniformizer_value^{v(x)} * unit_part(x * w^{-v(x)} mod P^level).
// The unit part is a table over (R/P^level)^* keyed by canonical unit keys,
// with values forced to be roots of unity; the level is always minimized, so
// level 0 means unramified and characters compare canonically.
class SmoothChar {
  public:
    const FieldPtr& field() const { return field_; }
    int level() const { return level_; }
    const ExactValue& uniformizer_value() const { return unif_value_; }
    const std::map<std::uint64_t, ExactValue>& unit_table() const { return unit_values_; }

    bool is_unramified() const { return level_ == 0; }
    std::optional<ExactValue> unramified_value() const {
        if (level_ != 0) return std::nullopt;
        return unif_value_;
    }

    ExactValue eval(const FieldElement& x) const;
    bool is_trivial() const { return level_ == 0 && unif_value_.is_one(); }

    static SmoothChar trivial(const FieldPtr& E);
    // |.|_E^a: unramified with w_E |-> q_E^{-a} = q_F^{-a f_E}.
    static SmoothChar absvalue(const FieldPtr& E, const Rat& a);
    // eta_{E'/E} on E = E'->parent: x |-> hilbert(x, d_{E'}).
    static SmoothChar eta(const FieldPtr& Eprime);
    // Same with an explicit nonsquare d of E.
    static SmoothChar eta_from_class(const FieldPtr& E, const FieldElement& d);
    // Character from images of the canonical unit generators (Teichmueller
    // generator, then the one-units); completes the table by closure and
    // rejects images violating the group relations.
    static SmoothChar from_generator_values(const FieldPtr& E, int level,
                                            const std::vector<ExactValue>& images,
                                            const ExactValue& unif_value,
                                            std::uint64_t budget = kDefaultUnitBudget);
    // Raw table constructor (values on every unit at the given level).
    static SmoothChar from_unit_values(const FieldPtr& E, int level,
                                       std::map<std::uint64_t, ExactValue> values,
                                       const ExactValue& unif_value);

    friend bool operator==(const SmoothChar& a, const SmoothChar& b) {
        return a.field_ == b.field_ && a.level_ == b.level_ && a.unif_value_ == b.unif_value_ &&
               a.unit_values_ == b.unit_values_;
    }
    friend bool operator!=(const SmoothChar& a, const SmoothChar& b) { return !(a == b); }

    SmoothChar() = default;

  private:
    void minimize();

    FieldPtr field_;
    int level_ = 0;
    ExactValue unif_value_;
    std::map<std::uint64_t, ExactValue> unit_values_;

    friend SmoothChar char_mul(const SmoothChar&, const SmoothChar&);
    friend SmoothChar char_inv(const SmoothChar&);
    friend SmoothChar char_pow(const SmoothChar&, long long);
    friend SmoothChar restrict_char(const SmoothChar&, const Embedding&);
    friend SmoothChar compose_norm(const SmoothChar&, const FieldPtr&);
    friend SmoothChar compose_norm_embedded(const SmoothChar&, const Embedding&,
                                            const GaloisElement&);
    friend SmoothChar conj_char(const SmoothChar&, const GaloisElement&);
    friend std::optional<std::pair<SmoothChar, SmoothChar>> descend_through_norm(
        const SmoothChar&, const FieldPtr&, std::uint64_t);
};

SmoothChar char_mul(const SmoothChar& a, const SmoothChar& b);
SmoothChar char_inv(const SmoothChar& a);
SmoothChar char_pow(const SmoothChar& a, long long k);

// chi composed with an embedding j : E' -> E; a character of E'.
SmoothChar restrict_char(const SmoothChar& chi, const Embedding& j);
// Chain shortcut: chi on E restricted to a chain subfield.
SmoothChar restrict_to(const SmoothChar& chi, const FieldPtr& sub);

// chi on a chain subfield E' composed with N_{E/E'}; a character of E.
SmoothChar compose_norm(const SmoothChar& chi, const FieldPtr& E);
// chi on L composed with N_{E/emb(L)} where sigma generates Gal(E/emb(L)).
SmoothChar compose_norm_embedded(const SmoothChar& chi, const Embedding& emb,
                                 const GaloisElement& sigma);

SmoothChar conj_char(const SmoothChar& chi, const GaloisElement& g);

// omega != omega o sigma; by Hilbert 90 this is "omega does not factor
// through the norm of the quadratic extension sigma belongs to".
bool is_regular(const SmoothChar& omega, const GaloisElement& sigma);

// If chi on E is trivial on ker N_{E/B} (B the chain parent), produce the two
// characters mu, mu * eta_{E/B} of B with mu o N_{E/B} = chi; nullopt when
// the kernel obstructs.
std::optional<std::pair<SmoothChar, SmoothChar>> descend_through_norm(
    const SmoothChar& chi, const FieldPtr& B, std::uint64_t budget = kDefaultUnitBudget);

}  // namespace asailab
