#include "interference/sampling.hpp"

#include <cmath>
#include <numeric>

#include "interference/errors.hpp"
#include "interference/io.hpp"
#include "interference/rng.hpp"
#include "interference/transition.hpp"

namespace interference {

namespace {

// inverse CDF over cumulative weights; the last bucket absorbs round-off
std::size_t draw_index(const std::vector<double>& cdf, double u) {
    const double target = u * cdf.back();
    std::size_t lo = 0, hi = cdf.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cdf[mid] <= target)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

std::vector<double> cumulative(const std::vector<double>& w) {
    std::vector<double> cdf(w.size());
    double run = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        run += w[i];
        cdf[i] = run;
    }
    if (run <= 0.0) throw domain_error("cannot sample from an all-zero distribution");
    return cdf;
}

}  // namespace

EventStream sample_exact(Species species, const Arrangement& r, const ComplexMatrix& u,
                         std::size_t k, std::uint64_t seed) {
    const std::vector<Arrangement> outputs = enumerate_arrangements(r.particles(), r.modes());
    const std::vector<double> dist = full_distribution(species, r, u);
    const std::vector<double> cdf = cumulative(dist);
    Rng rng(seed);
    EventStream stream{{}, "exact-" + to_string(species), seed, r, matrix_digest(u)};
    stream.events.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        stream.events.push_back(outputs[draw_index(cdf, rng.uniform())]);
    return stream;
}

EventStream sample_classical_mc(const Arrangement& r, const ComplexMatrix& u,
                                std::size_t k, std::uint64_t seed) {
    if (!u.square() || r.modes() != static_cast<int>(u.rows()))
        throw arrangement_error("arrangement mode count does not match the device");
    const int n = r.modes();
    const std::vector<int> dr = mode_assignment(r);
    // per-source-mode single-particle CDFs
    std::vector<std::vector<double>> cdfs;
    cdfs.reserve(dr.size());
    for (int mode : dr) {
        std::vector<double> p(n);
        for (int j = 0; j < n; ++j) p[j] = std::norm(u(mode - 1, j));
        cdfs.push_back(cumulative(p));
    }
    Rng rng(seed);
    EventStream stream{{}, "classical-mc", seed, r, matrix_digest(u)};
    stream.events.reserve(k);
    std::vector<int> occ(n);
    for (std::size_t i = 0; i < k; ++i) {
        std::fill(occ.begin(), occ.end(), 0);
        for (std::size_t particle = 0; particle < dr.size(); ++particle)
            ++occ[draw_index(cdfs[particle], rng.uniform())];
        stream.events.push_back(Arrangement(occ));
    }
    return stream;
}

EventStream sample_uniform(int particles, int modes, std::size_t k, std::uint64_t seed) {
    const std::vector<Arrangement> outputs = enumerate_arrangements(particles, modes);
    Rng rng(seed);
    EventStream stream{{}, "uniform", seed,
                       Arrangement(std::vector<int>(modes, 0)), "none"};
    // the input field records only N and n for a uniform stream
    std::vector<int> occ(modes, 0);
    occ[0] = particles;
    stream.input = Arrangement(occ);
    stream.events.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        stream.events.push_back(outputs[rng.integer(outputs.size())]);
    return stream;
}

EventStream sample_meanfield(const Arrangement& r, const ComplexMatrix& u,
                             std::size_t k, std::uint64_t seed) {
    if (!u.square() || r.modes() != static_cast<int>(u.rows()))
        throw arrangement_error("arrangement mode count does not match the device");
    const int n = r.modes();
    const int big_n = r.particles();
    const auto& occ_in = r.occupations();
    std::vector<double> amplitude(n);
    for (int j = 0; j < n; ++j) amplitude[j] = std::sqrt(static_cast<double>(occ_in[j]));

    Rng rng(seed);
    EventStream stream{{}, "meanfield", seed, r, matrix_digest(u)};
    stream.events.reserve(k);
    std::vector<Complex> phase(n);
    std::vector<double> p(n);
    std::vector<int> occ(n);
    for (std::size_t i = 0; i < k; ++i) {
        for (int l = 0; l < n; ++l) phase[l] = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
        for (int j = 0; j < n; ++j) {
            Complex a{0.0, 0.0};
            for (int l = 0; l < n; ++l)
                if (occ_in[l]) a += amplitude[l] * phase[l] * u(l, j);
            p[j] = std::norm(a);
        }
        const std::vector<double> cdf = cumulative(p);
        std::fill(occ.begin(), occ.end(), 0);
        for (int particle = 0; particle < big_n; ++particle)
            ++occ[draw_index(cdf, rng.uniform())];
        stream.events.push_back(Arrangement(occ));
    }
    return stream;
}

}  // namespace interference
