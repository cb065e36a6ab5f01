#pragma once

#include <string>
#include <vector>

#include "asailab/exact_value.hpp"

namespace asailab {

// Euler factor 1/P(X) with X = q_F^{-s} and P(0) = 1, represented by the
// finite multiset of inverse roots alpha of P (P = prod (1 - alpha*X)).
// The empty multiset is the constant 1.  Roots are kept sorted in the
// canonical (qexp, zeta) order, so two factors are equal iff their root
// vectors are equal and serialization is bit-exact.
class EulerFactor {
  public:
    EulerFactor() = default;
    explicit EulerFactor(std::vector<ExactValue> roots);

    static EulerFactor one() { return EulerFactor{}; }
    // 1/(1 - alpha*X)
    static EulerFactor from_root(const ExactValue& alpha);

    const std::vector<ExactValue>& inverse_roots() const { return roots_; }
    bool is_one() const { return roots_.empty(); }
    std::size_t degree() const { return roots_.size(); }

    // Poles s0 of 1/P(q_F^{-s}) correspond to inverse roots alpha = q_F^{s0};
    // the period (2*pi*i/ln q_F)Z is quotiented away by this representation.
    const std::vector<ExactValue>& poles() const { return roots_; }
    bool has_simple_poles() const;

    friend EulerFactor ef_mul(const EulerFactor& a, const EulerFactor& b);
    friend bool ef_divides(const EulerFactor& a, const EulerFactor& b);
    // Per-root multiplicity max / min.
    friend EulerFactor ef_lcm(const EulerFactor& a, const EulerFactor& b);
    friend EulerFactor ef_gcd(const EulerFactor& a, const EulerFactor& b);

    friend bool operator==(const EulerFactor& a, const EulerFactor& b) {
        return a.roots_ == b.roots_;
    }
    friend bool operator!=(const EulerFactor& a, const EulerFactor& b) { return !(a == b); }

    // Human rendering, e.g. "1/((1 - X)(1 + X)(1 - e(1/3)*q^-1*X))".
    std::string str() const;

  private:
    std::vector<ExactValue> roots_;
};

EulerFactor ef_mul(const EulerFactor& a, const EulerFactor& b);
bool ef_divides(const EulerFactor& a, const EulerFactor& b);
EulerFactor ef_lcm(const EulerFactor& a, const EulerFactor& b);
EulerFactor ef_gcd(const EulerFactor& a, const EulerFactor& b);

class SmoothChar;

// Tate L-factor of a smooth character of a field E in the tower over F,
// expanded in X = q_F^{-s}: 1 for ramified chi, otherwise the f_E linear
// factors of 1/(1 - chi(w_E) * q_E^{-shift} * X^{f_E}).  The rational shift t
// computes L(chi, s + t).
EulerFactor tate_lfactor(const SmoothChar& chi, const Rat& shift = Rat(0));

}  // namespace asailab
