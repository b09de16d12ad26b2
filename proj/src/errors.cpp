#include "resmat/errors.hpp"

namespace resmat {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotResiduated: return "NotResiduated";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::DuplicateFactorClass: return "DuplicateFactorClass";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::CertificateMismatch: return "CertificateMismatch";
    case ErrorKind::LatticeNotIrreducible: return "LatticeNotIrreducible";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::LatticeTooLarge: return "LatticeTooLarge";
    case ErrorKind::SemiringTooLarge: return "SemiringTooLarge";
    case ErrorKind::NoMultiplicativeOne: return "NoMultiplicativeOne";
    }
    return "Unknown";
}

} // namespace resmat
