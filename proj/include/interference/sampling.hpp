#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interference/fock.hpp"
#include "interference/matrix.hpp"

namespace interference {

/// Seeded, tagged sequence of sampled output arrangements. A stream is fully
/// reproducible from (source, seed, input, device): identical parameters give
/// bit-identical events.
struct EventStream {
    std::vector<Arrangement> events;
    std::string source;         // exact-boson | exact-fermion | exact-distinguishable |
                                // classical-mc | uniform | meanfield
    std::uint64_t seed = 0;
    Arrangement input;          // r
    std::string device_digest;  // fnv1a hex of the device matrix, "none" for uniform
};

/// k independent inverse-CDF draws over the fully enumerated distribution.
/// Exactly correct at desk scale; inherits the enumeration caps.
EventStream sample_exact(Species species, const Arrangement& r, const ComplexMatrix& u,
                         std::size_t k, std::uint64_t seed);

/// Monte-Carlo routing of distinguishable particles, one particle at a time
/// with the single-particle probabilities |U_{j,k}|^2. Never enumerates the
/// output space, so it runs at sizes where sample_exact cannot.
EventStream sample_classical_mc(const Arrangement& r, const ComplexMatrix& u,
                                std::size_t k, std::uint64_t seed);

/// k draws uniform over all arrangements of N particles in n modes.
EventStream sample_uniform(int particles, int modes, std::size_t k, std::uint64_t seed);

/// Mean-field (semi-classical) sampler: per event, condensate phases theta_l
/// are drawn uniformly and every particle is routed independently with
/// p_j proportional to |sum_l sqrt(r_l) e^{i theta_l} U_{l,j}|^2. Phases are
/// redrawn for every event. Mimics bunching, violates the suppression law.
EventStream sample_meanfield(const Arrangement& r, const ComplexMatrix& u,
                             std::size_t k, std::uint64_t seed);

}  // namespace interference
