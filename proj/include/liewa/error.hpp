#pragma once

#include <stdexcept>
#include <string>

namespace liewa {

enum class ErrorKind {
    InvalidArgument,
    DimensionMismatch,
    ParseError,
    JacobiViolation,
    AntisymmetryViolation,
    NotSubalgebra,
    NotSemisimple,
    NotSimple,
    NotDerivation,
    NotHomomorphism,
    NoInvariantForm,
    NotUnique,
    LiftingInconsistent,
    IrrationalDecomposition,
    UnrecognizedRealForm,
    CatalogError,
    Internal,
};

inline const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::ParseError: return "parse_error";
    case ErrorKind::JacobiViolation: return "jacobi_violation";
    case ErrorKind::AntisymmetryViolation: return "antisymmetry_violation";
    case ErrorKind::NotSubalgebra: return "not_subalgebra";
    case ErrorKind::NotSemisimple: return "not_semisimple";
    case ErrorKind::NotSimple: return "not_simple";
    case ErrorKind::NotDerivation: return "not_derivation";
    case ErrorKind::NotHomomorphism: return "not_homomorphism";
    case ErrorKind::NoInvariantForm: return "no_invariant_form";
    case ErrorKind::NotUnique: return "not_unique";
    case ErrorKind::LiftingInconsistent: return "lifting_inconsistent";
    case ErrorKind::IrrationalDecomposition: return "irrational_decomposition";
    case ErrorKind::UnrecognizedRealForm: return "unrecognized_real_form";
    case ErrorKind::CatalogError: return "catalog_error";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

/// Every failure in the library is reported as an Error carrying a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind)
    {
    }
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace liewa
