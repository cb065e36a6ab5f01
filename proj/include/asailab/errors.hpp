#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asailab {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Adjoining sqrt(d) where d is already a square.
struct IsSquareError : Error {
    explicit IsSquareError(const std::string& msg) : Error(msg) {}
};

// A decision (zero test, square test, digit extraction) needs more p-adic
// digits than the operands carry.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// A field, element or Galois element used outside the tower it belongs to.
struct NotInTower : Error {
    explicit NotInTower(const std::string& msg) : Error(msg) {}
};

// An enumeration would exceed the configured budget; carries the exact
// cardinality that was requested.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& msg, std::uint64_t cardinality)
        : Error(msg + " (cardinality " + std::to_string(cardinality) + ")"),
          cardinality(cardinality) {}
    std::uint64_t cardinality;
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

// Tower operation applied to a tower of the wrong classification.
struct WrongClass : Error {
    explicit WrongClass(const std::string& msg) : Error(msg) {}
};

// Representation data violating an admissibility constraint.
struct Inadmissible : Error {
    explicit Inadmissible(const std::string& msg) : Error(msg) {}
};

// Character data that fails the homomorphism relations, or generator images
// that do not span the unit group.
struct BadCharacter : Error {
    explicit BadCharacter(const std::string& msg) : Error(msg) {}
};

// Run-spec file problems; carries a source location when known.
struct SpecError : Error {
    explicit SpecError(const std::string& msg) : Error(msg) {}
};

}  // namespace asailab
