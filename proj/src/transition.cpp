#include "interference/transition.hpp"

#include <algorithm>
#include <cmath>

#include "interference/errors.hpp"
#include "interference/parallel.hpp"

namespace interference {

double factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(171);
        t[0] = 1.0;
        for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n < 0 || n > 170) throw domain_error("factorial argument out of range");
    return table[n];
}

void TransitionQuery::validate() const {
    if (!device.square()) throw dimension_error("device matrix must be square");
    const int n = static_cast<int>(device.rows());
    if (input.modes() != n || output.modes() != n)
        throw arrangement_error("arrangement mode count does not match the device");
    if (input.particles() != output.particles())
        throw arrangement_error("input and output particle numbers differ");
    if (input.particles() < 1) throw arrangement_error("need at least one particle");
    if (species == Species::Fermion && (!is_pauli(input) || !is_pauli(output)))
        throw species_error("fermion queries require Pauli arrangements");
}

namespace {

double occupation_factorials(const Arrangement& q) {
    double f = 1.0;
    for (int v : q.occupations()) f *= factorial(v);
    return f;
}

// core without re-validation; used by full_distribution
double probability_core(Species species, const Arrangement& r, const Arrangement& s,
                        const ComplexMatrix& u) {
    const ComplexMatrix m = scattering_submatrix(u, r, s);
    switch (species) {
        case Species::Distinguishable:
            return permanent(m.abs_squared()).real() / occupation_factorials(s);
        case Species::Boson:
            return std::norm(permanent(m)) /
                   (occupation_factorials(r) * occupation_factorials(s));
        case Species::Fermion:
            return std::norm(determinant(m));
    }
    return 0.0;
}

}  // namespace

double probability(const TransitionQuery& q) {
    q.validate();
    return probability_core(q.species, q.input, q.output, q.device);
}

double probability(Species species, const Arrangement& r, const Arrangement& s,
                   const ComplexMatrix& u) {
    return probability({species, r, s, u});
}

double probability_bruteforce(const TransitionQuery& q) {
    q.validate();
    const int n = q.input.particles();
    if (n > 8) throw size_limit_error("brute-force path capped at N <= 8");
    const std::vector<int> dr = mode_assignment(q.input);
    std::vector<int> ds = mode_assignment(q.output);  // sorted, so
    // next_permutation walks every distinct rearrangement exactly once
    const ComplexMatrix& u = q.device;

    if (q.species == Species::Distinguishable) {
        double total = 0.0;
        do {
            double prod = 1.0;
            for (int j = 0; j < n; ++j) prod *= std::norm(u(dr[j] - 1, ds[j] - 1));
            total += prod;
        } while (std::next_permutation(ds.begin(), ds.end()));
        return total;
    }

    Complex amp{0.0, 0.0};
    const bool fermion = q.species == Species::Fermion;
    do {
        Complex prod{1.0, 0.0};
        for (int j = 0; j < n; ++j) prod *= u(dr[j] - 1, ds[j] - 1);
        if (fermion) {
            int inversions = 0;  // Pauli arrangements make all entries distinct
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) inversions += ds[a] > ds[b];
            if (inversions & 1) prod = -prod;
        }
        amp += prod;
    } while (std::next_permutation(ds.begin(), ds.end()));

    if (fermion) return std::norm(amp);
    return std::norm(amp) * occupation_factorials(q.output) / occupation_factorials(q.input);
}

double probability_bruteforce(Species species, const Arrangement& r, const Arrangement& s,
                              const ComplexMatrix& u) {
    return probability_bruteforce({species, r, s, u});
}

std::vector<double> full_distribution(Species species, const Arrangement& r,
                                      const ComplexMatrix& u) {
    if (!u.square()) throw dimension_error("device matrix must be square");
    const int n = static_cast<int>(u.rows());
    if (r.modes() != n) throw arrangement_error("arrangement mode count does not match the device");
    if (r.particles() < 1) throw arrangement_error("need at least one particle");
    if (species == Species::Fermion && !is_pauli(r))
        throw species_error("fermion input must be a Pauli arrangement");
    if (arrangement_count(r.particles(), n) > 10'000'000ull)
        throw size_limit_error("output state space exceeds 10^7 arrangements");

    const std::vector<Arrangement> outputs = enumerate_arrangements(r.particles(), n);
    std::vector<double> dist(outputs.size(), 0.0);
    const std::size_t per_chunk = 64;
    const std::size_t chunks = (outputs.size() + per_chunk - 1) / per_chunk;
    run_chunks(chunks, [&](std::size_t c) {
        const std::size_t lo = c * per_chunk;
        const std::size_t hi = std::min(outputs.size(), lo + per_chunk);
        for (std::size_t i = lo; i < hi; ++i) {
            if (species == Species::Fermion && !is_pauli(outputs[i])) continue;
            dist[i] = probability_core(species, r, outputs[i], u);
        }
    });
    return dist;
}

BunchingCheck bunching_ratio_check(const Arrangement& r, int target_mode,
                                   const ComplexMatrix& u) {
    if (target_mode < 1 || target_mode > r.modes())
        throw arrangement_error("target mode out of range");
    std::vector<int> occ(r.modes(), 0);
    occ[target_mode - 1] = r.particles();
    const Arrangement bunched(occ);
    BunchingCheck check{};
    check.boson = probability(Species::Boson, r, bunched, u);
    check.distinguishable = probability(Species::Distinguishable, r, bunched, u);
    check.ratio = check.boson / check.distinguishable;
    return check;
}

}  // namespace interference
