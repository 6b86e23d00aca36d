#include "interference/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "interference/errors.hpp"

namespace interference {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) throw dimension_error("matrix dimensions must be at least 1x1");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw dimension_error("matrix dimensions must be at least 1x1");
    if (a_.size() != rows * cols)
        throw dimension_error("entry count does not match rows x cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) throw dimension_error("matrix product shape mismatch");
    ComplexMatrix m(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex v = (*this)(r, k);
            if (v == Complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) m(r, c) += v * other(k, c);
        }
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::unitarity_defect() const {
    if (!square()) return 1.0;
    double defect = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            Complex dot{0.0, 0.0};
            for (std::size_t k = 0; k < cols_; ++k)
                dot += (*this)(r, k) * std::conj((*this)(c, k));
            if (r == c) dot -= 1.0;
            defect = std::max(defect, std::abs(dot));
        }
    return defect;
}

ComplexMatrix ComplexMatrix::abs_squared() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = std::norm(a_[i]);
    return m;
}

}  // namespace interference
