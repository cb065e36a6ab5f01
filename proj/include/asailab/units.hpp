#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "asailab/local_field.hpp"

namespace asailab {

// Complete, duplicate-free enumeration of (R_E/P_E^level)^* with canonical
// keys; the carrier for characters of U_E and for the brute-force oracles.
struct UnitGroup {
    FieldPtr field;
    int level = 1;
    std::vector<FieldElement> elements;  // canonical digit-string order
    std::vector<std::uint64_t> keys;     // parallel to elements
    std::unordered_map<std::uint64_t, std::uint32_t> index_of;

    std::size_t size() const { return elements.size(); }
    std::uint32_t index_of_key(std::uint64_t key) const;
    std::uint32_t index_of_element(const FieldElement& x) const;
};

inline constexpr std::uint64_t kDefaultUnitBudget = 1'500'000;

// Cached inside the field object.
std::shared_ptr<const UnitGroup> unit_group_enumerate(const FieldPtr& field, int level,
                                                      std::uint64_t budget = kDefaultUnitBudget);

// Canonical generating set of (R/P^level)^*: the Teichmueller lift of the
// residue-field generator, then the one-units 1 + w^i * b_j for
// i = 1..level-1 over the residue basis b_j.
std::vector<FieldElement> canonical_unit_generators(const FieldPtr& field, int level);

}  // namespace asailab
