#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "interference/matrix.hpp"
#include "interference/sampling.hpp"

namespace interference {

/// Outcome of one certification test. verdict is a pure function of the
/// stream and the parameters. `confidence` is only filled where the test has
/// a published formula (the suppression test); the others report raw
/// statistics without an invented confidence.
struct CertificationReport {
    std::string test;
    bool accept = false;
    double statistic = 0.0;
    double threshold = 0.0;
    std::size_t events_used = 0;
    std::optional<double> confidence;

    std::string verdict() const { return accept ? "accept" : "reject"; }
};

/// Discriminator value for one event:
///   P = prod_{k=1..N} ( sum_{j=1..N} p_{d_k(r), d_j(s)} ).
/// On uniform devices every event yields (N/n)^N, so the test is blind there.
double aa_metric(const Arrangement& r, const Arrangement& s, const ComplexMatrix& u);

/// Majority voting on aa_metric > (N/n)^N. Accepts when boson-like votes
/// strictly exceed half; ties reject. Also validates classical and fermionic
/// samplers (known blindness of single-particle observables).
CertificationReport uniform_discrimination(const EventStream& stream, const Arrangement& r,
                                           const ComplexMatrix& u);

/// Compares empirical mode occupations against sum_k p_{d_k(r), j}. Rejects
/// when any mode deviates by more than z_threshold binomial standard errors.
CertificationReport mean_occupation_test(const EventStream& stream, const Arrangement& r,
                                         const ComplexMatrix& u, double z_threshold = 5.0);

/// Counts events forbidden by the bosonic Fourier suppression law for input
/// r; rejects beyond allowed_violations. On accept, reports the confidence
/// 1 - (1/p)^k that an alien sampler would not have survived k events.
CertificationReport suppression_certification(const EventStream& stream, const Arrangement& r,
                                              int n, std::size_t allowed_violations = 0);

/// The symmetric test uses no information about the device or the event
/// structure and therefore rejects nothing. It exists to make the
/// accept/reject table reproducible, demonstrating its own failure.
CertificationReport symmetric_test(const EventStream& stream);

}  // namespace interference
