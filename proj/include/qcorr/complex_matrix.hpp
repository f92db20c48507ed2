#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

// Dense row-major complex matrix with fixed dimensions.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    // Zero matrix of the given shape.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    // Takes ownership of row-major entries. Throws DimensionError on a size
    // mismatch and DomainError on non-finite entries.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);

// Largest |a_ij - b_ij|. Throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |a_ij - a_ji*| over a square matrix.
double hermiticity_defect(const ComplexMatrix& m);

}  // namespace qcorr
