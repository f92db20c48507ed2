#pragma once

#include <cstddef>
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

// Normalized state vector.
class PureState {
  public:
    // Throws NormalizationError unless the Euclidean norm is 1 within eps.
    explicit PureState(std::vector<Complex> amplitudes, double eps = tol::eps_norm);

    // Scales the vector to unit norm; throws NormalizationError on (near-)zero input.
    static PureState normalized(std::vector<Complex> amplitudes);

    static PureState basis_vector(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  private:
    std::vector<Complex> amplitudes_;
};

// <a|b>
Complex inner(const PureState& a, const PureState& b);

// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

// |a> tensor |b>, index = i_a * dim_b + i_b
PureState tensor(const PureState& a, const PureState& b);

// |s><s|
ComplexMatrix projector(const PureState& s);

// Square matrix equal to its conjugate transpose within tolerance.
class HermitianOperator {
  public:
    explicit HermitianOperator(ComplexMatrix m, double eps = tol::eps_herm);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

  private:
    ComplexMatrix matrix_;
};

// Square matrix with U†U = 1 within tolerance.
class UnitaryOperator {
  public:
    explicit UnitaryOperator(ComplexMatrix m, double eps = tol::eps_unitary);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

    PureState column(std::size_t j) const;

  private:
    ComplexMatrix matrix_;
};

// Kronecker product: entry ((i*b.rows+k),(j*b.cols+l)) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial trace of a square matrix over the tensor factors NOT listed in
// `keep`. `dims` are the factor dimensions in index-major order; the result
// acts on the kept factors in their original order. Trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

struct EigenSystem {
    std::vector<double> values;  // real, descending
    UnitaryOperator vectors;     // column i pairs with values[i]
};

// Cyclic Jacobi diagonalization. Eigenvalues descending; each eigenvector's
// first component above 1e-10 in magnitude is made real positive.
EigenSystem hermitian_eig(const HermitianOperator& h);

// Completes d orthonormal columns (D x d input, d <= D) to a D x D unitary by
// modified Gram-Schmidt over canonical basis vectors. The first d output
// columns equal the input exactly. Throws OrthonormalityError if the input
// columns are not orthonormal within eps.
UnitaryOperator extend_to_unitary(const ComplexMatrix& columns, double eps = tol::eps_unitary);

}  // namespace qcorr
