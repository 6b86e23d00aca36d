#include "interference/linalg.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "interference/errors.hpp"
#include "interference/parallel.hpp"
#include "interference/rng.hpp"

namespace interference {

namespace {

// Sum over one contiguous Gray-code range [first, last) of subset indices.
// Subsets are encoded as g(k) = k ^ (k >> 1); the row sums for the first
// subset are built from scratch, subsequent subsets update a single column.
Complex ryser_range(const ComplexMatrix& m, std::uint64_t first, std::uint64_t last) {
    const int n = static_cast<int>(m.rows());
    std::vector<Complex> sums(n, Complex{0.0, 0.0});
    std::uint64_t subset = first ^ (first >> 1);
    for (int col = 0; col < n; ++col) {
        if (subset >> col & 1)
            for (int row = 0; row < n; ++row) sums[row] += m(row, col);
    }
    Complex total{0.0, 0.0};
    for (std::uint64_t k = first;;) {
        Complex prod{1.0, 0.0};
        for (int row = 0; row < n; ++row) prod *= sums[row];
        total += (std::popcount(subset) & 1) ? -prod : prod;
        if (++k >= last) break;
        const int col = std::countr_zero(k);
        subset ^= std::uint64_t{1} << col;
        if (subset >> col & 1)
            for (int row = 0; row < n; ++row) sums[row] += m(row, col);
        else
            for (int row = 0; row < n; ++row) sums[row] -= m(row, col);
    }
    return total;
}

}  // namespace

Complex permanent(const ComplexMatrix& m) {
    if (!m.square()) throw dimension_error("permanent needs a square matrix");
    const int n = static_cast<int>(m.rows());
    if (n > kPermanentMaxN)
        throw size_limit_error("permanent capped at N <= " + std::to_string(kPermanentMaxN) +
                               ", got N = " + std::to_string(n));
    if (n == 1) return m(0, 0);

    const std::uint64_t end = std::uint64_t{1} << n;
    // Partition depends only on N, never on the thread count, so the chunked
    // reduction below is bit-reproducible.
    std::size_t chunks = 1;
    if (n > 20) chunks = std::min<std::size_t>(256, std::size_t{1} << (n - 20));
    std::vector<Complex> partial(chunks, Complex{0.0, 0.0});
    const std::uint64_t span = (end - 1) / chunks + 1;
    run_chunks(chunks, [&](std::size_t c) {
        const std::uint64_t first = std::max<std::uint64_t>(1, c * span);
        const std::uint64_t last = std::min(end, (c + 1) * span);
        if (first < last) partial[c] = ryser_range(m, first, last);
    });
    Complex total{0.0, 0.0};
    for (const Complex& p : partial) total += p;
    return (n & 1) ? -total : total;
}

Complex determinant(const ComplexMatrix& m) {
    if (!m.square()) throw dimension_error("determinant needs a square matrix");
    const int n = static_cast<int>(m.rows());
    std::vector<Complex> a = m.entries();
    const double tiny = 1e-12 * m.max_abs();
    Complex det{1.0, 0.0};
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) pivot = row;
        if (std::abs(a[pivot * n + col]) <= tiny) return Complex{0.0, 0.0};
        if (pivot != col) {
            for (int k = col; k < n; ++k) std::swap(a[pivot * n + k], a[col * n + k]);
            det = -det;
        }
        const Complex lead = a[col * n + col];
        det *= lead;
        for (int row = col + 1; row < n; ++row) {
            const Complex factor = a[row * n + col] / lead;
            if (factor == Complex{0.0, 0.0}) continue;
            for (int k = col + 1; k < n; ++k) a[row * n + k] -= factor * a[col * n + k];
        }
    }
    return det;
}

ComplexMatrix fourier_unitary(int n) {
    if (n < 1) throw domain_error("fourier_unitary needs n >= 1");
    ComplexMatrix u(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            // phases reduced mod n before the trig call keeps |entry| exact
            const long long q = static_cast<long long>(j) * k % n;
            u(j - 1, k - 1) = std::polar(scale, 2.0 * M_PI * static_cast<double>(q) / n);
        }
    return u;
}

ComplexMatrix beam_splitter(double reflectivity) {
    if (!(reflectivity >= 0.0 && reflectivity <= 1.0))
        throw domain_error("beam splitter reflectivity must lie in [0, 1]");
    const double r = std::sqrt(reflectivity);
    const double t = std::sqrt(1.0 - reflectivity);
    ComplexMatrix u(2, 2);
    u(0, 0) = Complex{0.0, r};
    u(0, 1) = t;
    u(1, 0) = t;
    u(1, 1) = Complex{0.0, r};
    return u;
}

ComplexMatrix haar_random_unitary(int n, std::uint64_t seed) {
    if (n < 1) throw domain_error("haar_random_unitary needs n >= 1");
    Rng rng(seed);
    Eigen::MatrixXcd g(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            g(r, c) = Complex{re, im} * M_SQRT1_2;
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& qrmat = qr.matrixQR();
    // multiplying column j by the phase of R_jj makes the distribution Haar
    for (int j = 0; j < n; ++j) {
        const Complex rjj = qrmat(j, j);
        const double mod = std::abs(rjj);
        const Complex phase = mod > 0.0 ? rjj / mod : Complex{1.0, 0.0};
        q.col(j) *= phase;
    }
    ComplexMatrix u(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) u(r, c) = q(r, c);
    return u;
}

ComplexMatrix scattering_submatrix(const ComplexMatrix& u, const Arrangement& r,
                                   const Arrangement& s) {
    if (!u.square()) throw dimension_error("device matrix must be square");
    const int n = static_cast<int>(u.rows());
    if (r.modes() != n || s.modes() != n)
        throw arrangement_error("arrangement mode count does not match the device");
    if (r.particles() != s.particles())
        throw arrangement_error("input and output particle numbers differ");
    if (r.particles() < 1) throw arrangement_error("need at least one particle");
    const std::vector<int> dr = mode_assignment(r);
    const std::vector<int> ds = mode_assignment(s);
    const int big_n = static_cast<int>(dr.size());
    ComplexMatrix m(big_n, big_n);
    for (int j = 0; j < big_n; ++j)
        for (int k = 0; k < big_n; ++k) m(j, k) = u(dr[j] - 1, ds[k] - 1);
    return m;
}

}  // namespace interference
