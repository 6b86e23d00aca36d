#pragma once

#include <vector>

#include "interference/fock.hpp"
#include "interference/linalg.hpp"
#include "interference/matrix.hpp"

namespace interference {

/// Probabilities below this are treated as exactly suppressed events.
/// Permanent round-off for N <= 10 stays well below it.
inline constexpr double kNumericallyZero = 1e-12;

/// One transition r -> s of a given species through an n-mode device.
/// Non-unitary devices are accepted (needed for post-selected entanglement
/// generation); normalization guarantees then do not apply.
struct TransitionQuery {
    Species species;
    Arrangement input;
    Arrangement output;
    ComplexMatrix device;

    /// Throws arrangement_error / species_error on inconsistent queries.
    void validate() const;
};

/// Exact transition probability:
///   P_D = perm(|M|^2) / prod s_j!
///   P_B = |perm(M)|^2 / (prod r_j! s_j!)
///   P_F = |det(M)|^2
/// with M the scattering submatrix of the device.
double probability(const TransitionQuery& q);
double probability(Species species, const Arrangement& r, const Arrangement& s,
                   const ComplexMatrix& u);

/// Literal sum over all distinct permutations of the output assignment list,
/// with sgn(sigma) for fermions and the prod s_j!/prod r_j! prefactor for
/// bosons. This is the oracle path: never optimized, capped at N <= 8.
double probability_bruteforce(const TransitionQuery& q);
double probability_bruteforce(Species species, const Arrangement& r, const Arrangement& s,
                              const ComplexMatrix& u);

/// Probability for every final arrangement, in enumeration order. Fermionic
/// vectors carry zeros at non-Pauli entries.
std::vector<double> full_distribution(Species species, const Arrangement& r,
                                      const ComplexMatrix& u);

struct BunchingCheck {
    double boson;
    double distinguishable;
    double ratio;  // boson / distinguishable
};

/// Evaluates P_B and P_D for the fully bunched output (all N particles in
/// target_mode) and their ratio, which equals N!/prod r_j! exactly.
BunchingCheck bunching_ratio_check(const Arrangement& r, int target_mode,
                                   const ComplexMatrix& u);

/// Exact double factorial table lookup (throws above 170).
double factorial(int n);

}  // namespace interference
