#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or subsystem-layout mismatch between operands.
struct DimensionError : Error {
    using Error::Error;
};

// State vector norm is not 1 within tolerance.
struct NormalizationError : Error {
    using Error::Error;
};

// Matrix is not equal to its conjugate transpose within tolerance.
struct HermiticityError : Error {
    using Error::Error;
};

// Columns (or basis states) are not orthonormal within tolerance.
struct OrthonormalityError : Error {
    using Error::Error;
};

// Matrix fails density-operator requirements (unit trace, positive semidefinite).
struct PhysicalityError : Error {
    using Error::Error;
};

// Ensemble does not mix to the stated density operator.
struct RealizationError : Error {
    using Error::Error;
};

// Ensemble member state lies outside the range of the density operator.
struct SupportError : Error {
    using Error::Error;
};

// Ancilla dimension too small to purify the given density operator.
struct AncillaTooSmallError : Error {
    using Error::Error;
};

// Scalar parameter outside its admissible interval.
struct DomainError : Error {
    using Error::Error;
};

// Operator set is not a basis (singular Gram matrix).
struct BasisError : Error {
    using Error::Error;
};

// Correlation record set is missing index tuples.
struct IncompleteDataError : Error {
    using Error::Error;
};

// Supplied expectation value outside its possible range.
struct RangeError : Error {
    using Error::Error;
};

// Observables assigned to overlapping tensor factors.
struct CommutationError : Error {
    using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qcorr
