#include "interference/suppression.hpp"

#include <numeric>

#include "interference/errors.hpp"

namespace interference {

namespace {

long long assignment_sum(const Arrangement& q) {
    long long total = 0;
    const auto& occ = q.occupations();
    for (int j = 0; j < q.modes(); ++j) total += static_cast<long long>(j + 1) * occ[j];
    return total;
}

void check_setup(const Arrangement& r, const Arrangement& s, int n) {
    if (r.modes() != n || s.modes() != n)
        throw arrangement_error("arrangement mode count does not match n");
    if (r.particles() != s.particles())
        throw arrangement_error("input and output particle numbers differ");
}

using Direction = SuppressionWitness::Direction;

void collect_boson(const Arrangement& periodic, long long partner_sum, int n,
                   Direction dir, std::vector<SuppressionWitness>& out) {
    for (const auto& [m, p] : periods(periodic)) {
        if (p <= 1) continue;  // the trivial period can never trigger
        const long long q = static_cast<long long>(m) * partner_sum;
        if (q % n != 0) out.push_back({dir, m, p, q});
    }
}

void collect_fermion(const Arrangement& periodic, long long partner_sum, int n,
                     int big_n, Direction dir, std::vector<SuppressionWitness>& out) {
    for (const auto& [m, p] : periods(periodic)) {
        if (p <= 1) continue;
        const long long q = static_cast<long long>(m) * partner_sum;
        const long long rem = q % n;
        if (big_n % 2 == 1 || (big_n / p) % 2 == 0) {
            if (rem != 0) out.push_back({dir, m, p, q});
        } else {
            // N even, N/p odd; n = m*p is even here since p must be even
            if (rem != n / 2) out.push_back({dir, m, p, q});
        }
    }
}

}  // namespace

SuppressionVerdict boson_suppressed(const Arrangement& r, const Arrangement& s, int n) {
    check_setup(r, s, n);
    SuppressionVerdict verdict;
    collect_boson(s, assignment_sum(r), n, Direction::forward, verdict.witnesses);
    collect_boson(r, assignment_sum(s), n, Direction::reversed, verdict.witnesses);
    verdict.suppressed = !verdict.witnesses.empty();
    return verdict;
}

SuppressionVerdict fermion_suppressed(const Arrangement& r, const Arrangement& s, int n) {
    check_setup(r, s, n);
    if (!is_pauli(r) || !is_pauli(s))
        throw species_error("fermionic suppression law needs Pauli arrangements");
    const int big_n = r.particles();
    SuppressionVerdict verdict;
    collect_fermion(s, assignment_sum(r), n, big_n, Direction::forward, verdict.witnesses);
    collect_fermion(r, assignment_sum(s), n, big_n, Direction::reversed, verdict.witnesses);
    verdict.suppressed = !verdict.witnesses.empty();
    return verdict;
}

SuppressedFraction suppressed_fraction(const Arrangement& r, int n) {
    if (r.modes() != n) throw arrangement_error("arrangement mode count does not match n");
    SuppressedFraction result{};
    result.max_p = 1;
    for (const auto& [m, p] : periods(r)) result.max_p = std::max(result.max_p, p);
    result.estimate = 1.0 - 1.0 / result.max_p;

    const auto outputs = enumerate_arrangements(r.particles(), n);
    result.total = outputs.size();
    for (const auto& s : outputs)
        if (boson_suppressed(r, s, n).suppressed) ++result.suppressed;
    result.exact_fraction =
        static_cast<double>(result.suppressed) / static_cast<double>(result.total);
    return result;
}

}  // namespace interference
