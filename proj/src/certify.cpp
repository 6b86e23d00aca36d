#include "interference/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "interference/errors.hpp"
#include "interference/suppression.hpp"

namespace interference {

double aa_metric(const Arrangement& r, const Arrangement& s, const ComplexMatrix& u) {
    if (!u.square()) throw dimension_error("device matrix must be square");
    const int n = static_cast<int>(u.rows());
    if (r.modes() != n || s.modes() != n)
        throw arrangement_error("arrangement mode count does not match the device");
    if (r.particles() != s.particles())
        throw arrangement_error("input and output particle numbers differ");
    const std::vector<int> dr = mode_assignment(r);
    const std::vector<int> ds = mode_assignment(s);
    double metric = 1.0;
    for (std::size_t k = 0; k < dr.size(); ++k) {
        double row = 0.0;
        for (std::size_t j = 0; j < ds.size(); ++j)
            row += std::norm(u(dr[k] - 1, ds[j] - 1));
        metric *= row;
    }
    return metric;
}

CertificationReport uniform_discrimination(const EventStream& stream, const Arrangement& r,
                                           const ComplexMatrix& u) {
    if (stream.events.empty()) throw input_error("uniform_discrimination: empty stream");
    const int n = r.modes();
    const int big_n = r.particles();
    const double threshold =
        std::pow(static_cast<double>(big_n) / static_cast<double>(n), big_n);
    std::size_t boson_votes = 0;
    for (const Arrangement& s : stream.events)
        if (aa_metric(r, s, u) > threshold) ++boson_votes;
    CertificationReport report;
    report.test = "uniform-discrimination";
    report.events_used = stream.events.size();
    report.statistic = static_cast<double>(boson_votes) / stream.events.size();
    report.threshold = 0.5;
    report.accept = 2 * boson_votes > stream.events.size();  // ties reject
    return report;
}

CertificationReport mean_occupation_test(const EventStream& stream, const Arrangement& r,
                                         const ComplexMatrix& u, double z_threshold) {
    if (stream.events.empty()) throw input_error("mean_occupation_test: empty stream");
    const int n = r.modes();
    if (!u.square() || static_cast<int>(u.rows()) != n)
        throw arrangement_error("arrangement mode count does not match the device");
    const std::vector<int> dr = mode_assignment(r);
    const double k = static_cast<double>(stream.events.size());

    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double expected = 0.0, variance = 0.0;
        for (int mode : dr) {
            const double p = std::norm(u(mode - 1, j));
            expected += p;
            variance += p * (1.0 - p);
        }
        double mean = 0.0;
        for (const Arrangement& s : stream.events) mean += s.occupations()[j];
        mean /= k;
        const double se = std::sqrt(variance / k);
        double z;
        if (se > 0.0)
            z = std::abs(mean - expected) / se;
        else
            z = mean == expected ? 0.0 : std::numeric_limits<double>::infinity();
        worst = std::max(worst, z);
    }
    CertificationReport report;
    report.test = "mean-occupation";
    report.events_used = stream.events.size();
    report.statistic = worst;
    report.threshold = z_threshold;
    report.accept = worst <= z_threshold;
    return report;
}

CertificationReport suppression_certification(const EventStream& stream, const Arrangement& r,
                                              int n, std::size_t allowed_violations) {
    if (stream.events.empty()) throw input_error("suppression_certification: empty stream");
    int max_p = 1;
    for (const auto& [m, p] : periods(r)) max_p = std::max(max_p, p);
    if (max_p <= 1)
        throw inapplicable_test_error(
            "suppression certification needs an input with a nontrivial period");
    std::size_t violations = 0;
    for (const Arrangement& s : stream.events)
        if (boson_suppressed(r, s, n).suppressed) ++violations;
    CertificationReport report;
    report.test = "suppression";
    report.events_used = stream.events.size();
    report.statistic = static_cast<double>(violations);
    report.threshold = static_cast<double>(allowed_violations);
    report.accept = violations <= allowed_violations;
    if (report.accept) {
        // chance an alien sampler survives k events is (1/p)^k
        report.confidence =
            1.0 - std::pow(1.0 / max_p, static_cast<double>(stream.events.size()));
    }
    return report;
}

CertificationReport symmetric_test(const EventStream& stream) {
    CertificationReport report;
    report.test = "symmetric";
    report.events_used = stream.events.size();
    report.statistic = 0.0;
    report.threshold = 0.0;
    report.accept = true;
    return report;
}

}  // namespace interference
