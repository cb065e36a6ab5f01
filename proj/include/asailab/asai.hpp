#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>

#include "asailab/chars.hpp"
#include "asailab/euler.hpp"
#include "asailab/towers.hpp"

namespace asailab {

// The three ordinary shapes of an infinite-dimensional representation of
// GL(2,K): dihedral supercuspidal pi(omega), twisted Steinberg sigma(chi),
// principal series pi(lambda, mu).
struct DihedralData {
    FieldPtr L;        // quadratic over K, quadratic over F
    SmoothChar omega;  // regular with respect to sigma_{L/K}
};
struct SteinbergData {
    SmoothChar chi;  // on K
};
struct PrincipalData {
    SmoothChar lambda, mu;  // on K, lambda/mu != |.|^{+-1}
};

class GL2Rep {
  public:
    static GL2Rep dihedral(FieldPtr L, SmoothChar omega);
    static GL2Rep steinberg(SmoothChar chi);
    static GL2Rep principal(SmoothChar lambda, SmoothChar mu);

    const FieldPtr& K() const { return K_; }
    bool is_dihedral() const { return std::holds_alternative<DihedralData>(data_); }
    bool is_steinberg() const { return std::holds_alternative<SteinbergData>(data_); }
    bool is_principal() const { return std::holds_alternative<PrincipalData>(data_); }
    bool is_supercuspidal() const { return is_dihedral(); }
    const DihedralData& dihedral_data() const { return std::get<DihedralData>(data_); }
    const SteinbergData& steinberg_data() const { return std::get<SteinbergData>(data_); }
    const PrincipalData& principal_data() const { return std::get<PrincipalData>(data_); }

    std::string kind_name() const;

  private:
    FieldPtr K_;
    std::variant<DihedralData, SteinbergData, PrincipalData> data_;
};

// Langlands-parameter mirror: induced from a quadratic extension, twist of
// sp(2), or a sum of two characters.  Same payloads, same admissibility.
class WDRep2 {
  public:
    enum class Kind { Induced, SpecialTwist, CharSum };
    static WDRep2 induced(FieldPtr L, SmoothChar omega);
    static WDRep2 special_twist(SmoothChar chi);
    static WDRep2 char_sum(SmoothChar lambda, SmoothChar mu);

    Kind kind() const { return kind_; }
    const FieldPtr& K() const { return K_; }
    const DihedralData& induced_data() const { return std::get<DihedralData>(data_); }
    const SteinbergData& twist_data() const { return std::get<SteinbergData>(data_); }
    const PrincipalData& sum_data() const { return std::get<PrincipalData>(data_); }

  private:
    Kind kind_ = Kind::CharSum;
    FieldPtr K_;
    std::variant<DihedralData, SteinbergData, PrincipalData> data_;
};

WDRep2 langlands_parameter(const GL2Rep& pi);
GL2Rep representation_of(const WDRep2& rho);

// c_pi: eta_{L/K} * omega|_K / chi^2 / lambda*mu.
SmoothChar central_char(const GL2Rep& pi);

// One summand of the multiplicatively induced representation: a character of
// F twisted by sp(1) or sp(3), or an induction from a quadratic extension
// of F.
struct InductionSummand {
    enum class Kind { CharOnF, InducedFromQuadratic };
    Kind kind;
    SmoothChar chi;      // on F, resp. on Eprime
    int sp_dim = 1;      // 1 or 3 (CharOnF only)
    FieldPtr Eprime;     // InducedFromQuadratic only
};

struct Decomposition {
    bool irreducible = false;  // no Frobenius-fixed line: L_W = 1
    std::vector<InductionSummand> summands;
    bool nongalois_reduction_used = false;
    // A failed reduction relies on the dichotomy of the base-change argument;
    // flagged so output metadata can report it instead of silently trusting.
    bool nongalois_reduction_failed = false;
    bool cyclic_choice_ambiguous = false;
};

// The set of alpha = q_F^{s0} such that pi is |.|_F^{-s0}-distinguished.
using TwistSet = std::set<ExactValue>;

struct EgalReport {
    EulerFactor lw, las, l1, lradex;
    TwistSet twists;
    bool equal = false;
    Decomposition decomposition;
};

// Evaluation engine: carries the enumeration and degree-8 budgets and
// memoizes lattices and closures per tower.  All public methods are pure
// functions of the representation given fixed budgets.
class AsaiEngine {
  public:
    struct Options {
        std::uint64_t unit_budget = kDefaultUnitBudget;
        // number of distinct degree-8 closures the run may construct;
        // 0 disables the non-Galois reduction entirely
        std::uint64_t degree8_budget = 256;
    };

    AsaiEngine() = default;
    explicit AsaiEngine(Options opt) : opt_(opt) {}

    Decomposition induction_decompose(const WDRep2& rho);
    EulerFactor lw_factor(const WDRep2& rho);
    EulerFactor l1_factor(const GL2Rep& pi);
    TwistSet distinguishing_twists(const GL2Rep& pi);
    EulerFactor lradex_factor(const GL2Rep& pi);
    EulerFactor las_factor(const GL2Rep& pi);
    bool is_distinguished(const GL2Rep& pi);
    // Dihedral on a biquadratic lattice only: the eta_{K/F}-twisted verdict.
    bool is_eta_distinguished(const GL2Rep& pi);
    EgalReport check_egal(const GL2Rep& pi);

    // Lattice / closure access (memoized); exposed for oracles and tests.
    const BiquadraticLattice& lattice_of(const FieldPtr& L);
    const DihedralClosure& closure_of(const FieldPtr& L);
    // omega transported to the canonical B of its lattice.
    SmoothChar omega_on_lattice(const BiquadraticLattice& lat, const SmoothChar& omega);

  private:
    struct DihedralResolution {
        TowerClass cls;
        const BiquadraticLattice* lattice = nullptr;  // biquadratic or reduced
        std::optional<SmoothChar> omega_B;            // transported / descended
        std::optional<SmoothChar> omega_B_alt;        // second descent extension
        bool reduction_used = false;
        bool reduction_failed = false;
        bool ambiguous = false;
    };
    DihedralResolution resolve_dihedral(const DihedralData& d);
    TwistSet twists_on_lattice(const BiquadraticLattice& lat, const SmoothChar& omega_B);

    Options opt_;
    std::map<const LocalField*, BiquadraticLattice> lattices_;
    std::map<const LocalField*, DihedralClosure> closures_;
    std::map<const LocalField*, std::vector<std::pair<SmoothChar, DihedralResolution>>>
        resolutions_;
    std::uint64_t degree8_used_ = 0;
};

}  // namespace asailab
