#pragma once

#include <cstdint>

#include "interference/fock.hpp"
#include "interference/matrix.hpp"

namespace interference {

/// Hard cap on permanent evaluation. Beyond this the exponential kernel would
/// run for days; the library refuses instead of hanging.
inline constexpr int kPermanentMaxN = 30;

/// Permanent of a square matrix by Ryser's inclusion-exclusion with Gray-code
/// single-row updates, O(2^N * N). The subset loop is partitioned into
/// contiguous Gray-code ranges evaluated in parallel and reduced in fixed
/// order, so the result does not depend on the thread count.
Complex permanent(const ComplexMatrix& m);

/// Determinant by partial-pivot elimination. A vanishing pivot column
/// (below 1e-12 * max|M|) short-circuits to exactly 0.
Complex determinant(const ComplexMatrix& m);

/// Discrete Fourier device: entry (j, k) = exp(i 2 pi j k / n) / sqrt(n) with
/// j, k = 1..n. All single-particle probabilities equal 1/n.
ComplexMatrix fourier_unitary(int n);

/// Two-mode beam splitter with reflectivity R:
/// [[i sqrt(R), sqrt(1-R)], [sqrt(1-R), i sqrt(R)]].
ComplexMatrix beam_splitter(double reflectivity);

/// Haar-distributed n x n unitary: complex Ginibre matrix, QR decomposition,
/// R-diagonal phase fix. Deterministic for a fixed seed.
ComplexMatrix haar_random_unitary(int n, std::uint64_t seed);

/// N x N matrix M with M_{j,k} = U_{d_j(r), d_k(s)}: the rows and columns of
/// U belonging to occupied input and output modes, repeated by multiplicity.
ComplexMatrix scattering_submatrix(const ComplexMatrix& u, const Arrangement& r,
                                   const Arrangement& s);

}  // namespace interference
