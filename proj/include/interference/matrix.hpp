#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace interference {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Hosts scattering matrices, their
/// submatrices and every amplitude-valued intermediate in the library.
class ComplexMatrix {
  public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return a_; }
    std::vector<Complex>& entries() { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;

    /// Largest entry modulus; 0 for the (impossible) empty matrix.
    double max_abs() const;

    /// max |(U U† - I)_{jk}|.
    double unitarity_defect() const;
    bool is_unitary(double tol = 1e-12) const { return square() && unitarity_defect() <= tol; }

    /// Entry-wise |a|^2 (real values stored as complex).
    ComplexMatrix abs_squared() const;

    bool operator==(const ComplexMatrix& other) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Complex> a_;
};

}  // namespace interference
