#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace resmat {

enum class ErrorKind {
    InvalidInput,
    NotALattice,
    CyclicCovers,
    DuplicateLabel,
    UnknownLabel,
    NotComparable,
    NotResiduated,
    DomainMismatch,
    NotInvertible,
    AxiomViolation,
    ClosureTooLarge,
    NotInImage,
    DuplicateFactorClass,
    ShapeMismatch,
    FactorizationMismatch,
    CertificateMismatch,
    LatticeNotIrreducible,
    SpaceTooLarge,
    LatticeTooLarge,
    SemiringTooLarge,
    NoMultiplicativeOne,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error thrown by the library. The kind is stable and is what
/// tests and the CLI dispatch on; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// A table that fails one of the semiring axioms. `witness` holds the element
/// indices (one to three of them) on which the axiom fails.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::vector<std::size_t> witness, const std::string &detail)
        : Error(ErrorKind::AxiomViolation, axiom + " (" + detail + ")"),
          axiom_(std::move(axiom)),
          witness_(std::move(witness)) {}

    const std::string &axiom() const noexcept { return axiom_; }
    const std::vector<std::size_t> &witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::vector<std::size_t> witness_;
};

/// A value table that is not join- or bottom-preserving. For a bottom violation
/// both witness elements are the bottom element.
class NotResiduated : public Error {
public:
    NotResiduated(std::size_t x, std::size_t y, bool bottom_violation, const std::string &detail)
        : Error(ErrorKind::NotResiduated, detail), x_(x), y_(y), bottom_violation_(bottom_violation) {}

    std::size_t x() const noexcept { return x_; }
    std::size_t y() const noexcept { return y_; }
    bool bottom_violation() const noexcept { return bottom_violation_; }

private:
    std::size_t x_;
    std::size_t y_;
    bool bottom_violation_;
};

} // namespace resmat
