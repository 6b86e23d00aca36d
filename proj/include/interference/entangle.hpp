#pragma once

#include <cstdint>
#include <vector>

#include "interference/fock.hpp"
#include "interference/matrix.hpp"

namespace interference {

/// Amplitudes c_{j1..jN} of an N-party state with local dimension d, stored
/// row-major with j1 slowest. Typically sub-normalised: the squared norm is
/// the post-selection success probability.
struct QuditStateTensor {
    int parties = 0;
    int local_dim = 0;
    std::vector<Complex> amplitudes;  // d^parties entries

    double norm() const;
    std::size_t flat_index(const std::vector<int>& js) const;
    Complex at(const std::vector<int>& js) const { return amplitudes[flat_index(js)]; }
};

/// Scattering device for N qudits of dimension d: an (N d) x (N d) matrix,
/// not necessarily unitary. Mode (k, l) maps to flat index d (k - 1) + l with
/// k = 1..N and l = 0..d-1.
struct DeviceW {
    ComplexMatrix w;
    int parties;
    int local_dim;

    DeviceW(ComplexMatrix matrix, int n_parties, int dim);
};

/// Post-selected two-qubit state after a balanced-beam-splitter-style
/// encounter of two partially distinguishable particles:
///   rho = |c21|^2 |Psi^(-delta)><Psi^(-delta)| + (1 - |c21|^2) rho_class,
/// delta = +1 bosons / -1 fermions; the concurrence equals |c21|.
struct BipartiteTransitionState {
    ComplexMatrix rho;   // 4x4 in the basis {|00>, |01>, |10>, |11>}
    double concurrence;
};
BipartiteTransitionState bipartite_transition_state(Species species, double c21_mod2);

/// Output amplitudes for one particle prepared in internal state 0 of each
/// external mode, post-selected on one particle per external output mode:
/// g_{j1..jN} = perm/det of the N x N matrix whose rows are the occupied
/// input rows of W and whose columns are d (k - 1) + j_k.
QuditStateTensor multipartite_coefficients(const DeviceW& device, Species species);

/// Verifies the factorization of fermionic amplitudes into the reference
/// amplitude times principal minors of C = E^{-1} F (qubit case only):
/// g_{j1..jN} = g_{0..0} det(Cbar), Cbar deleting row and column k for every
/// even j_k. Returns the largest absolute defect over all 2^N indices.
double fermion_minor_factorization_check(const DeviceW& device);

/// Number of singular values above tol * sigma_max of the tensor reshaped
/// across the cut. Any bipartite rank lower-bounds the generalized Schmidt
/// rank; the rank itself is not computed.
int bipartition_rank(const QuditStateTensor& state, const std::vector<int>& cut,
                     double tol = 1e-8);

/// Modal numerical rank of the Jacobian of the map from the occupied rows of
/// W to the amplitude tensor, at `samples` random points. The map is
/// holomorphic, so the real Jacobian rank is even and twice the number of
/// independent complex parameters; the complex count is returned. Central
/// finite differences with relative step 1e-6, singular values kept above
/// 1e-8 * sigma_max. Throws ambiguous_rank_error when no strict majority of
/// samples agrees.
int manifold_dimension_estimate(Species species, int parties, int local_dim,
                                std::uint64_t seed, int samples);

}  // namespace interference
