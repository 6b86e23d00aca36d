#pragma once

#include <cstdint>
#include <vector>

#include "interference/fock.hpp"

namespace interference {

/// One periodicity that triggered a suppression law. `forward` means a period
/// of the output state was tested against the input assignment sum; the
/// input-output symmetry of the Fourier device justifies testing the mirrored
/// pairing as well (`reversed`).
struct SuppressionWitness {
    enum class Direction { forward, reversed };
    Direction direction;
    int m;           // period length
    int p;           // repetitions, p = n/m
    long long q;     // Q = m * sum of the partner assignment list
};

/// Outcome of a suppression-law check. The condition is sufficient only:
/// suppressed == false does NOT imply a nonzero probability.
struct SuppressionVerdict {
    bool suppressed = false;
    std::vector<SuppressionWitness> witnesses;
};

/// Bosonic Fourier suppression law: for every period m of s (and, by the
/// input-output symmetry, of r), the transition is suppressed when
/// mod(m * sum_j d_j(partner), n) != 0.
SuppressionVerdict boson_suppressed(const Arrangement& r, const Arrangement& s, int n);

/// Fermionic law. Per triggering periodicity with p repetitions: for odd N or
/// even N/p the condition reads mod(Q, n) != 0; for even N and odd N/p it
/// reads mod(Q, n) != n/2 (n is necessarily even in that branch).
SuppressionVerdict fermion_suppressed(const Arrangement& r, const Arrangement& s, int n);

struct SuppressedFraction {
    double exact_fraction;       // suppressed outputs / all outputs
    double estimate;             // 1 - 1/p for the maximal p of r
    std::uint64_t suppressed;
    std::uint64_t total;
    int max_p;
};

/// Exhaustively counts bosonically suppressed outputs for the given input.
SuppressedFraction suppressed_fraction(const Arrangement& r, int n);

}  // namespace interference
