#include "interference/partialdist.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "interference/errors.hpp"
#include "interference/linalg.hpp"
#include "interference/transition.hpp"

namespace interference {

namespace {

constexpr double kTwoModeMaxN = 128;  // factorials stay finite in double

double binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

double indistinguishability(double displacement, const WavepacketSet& packets) {
    const double dt = displacement / WavepacketSet::kSpeedOfLight;
    const Complex overlap = gaussian_overlap(0.0, dt, packets.omega0, packets.delta_omega);
    return std::norm(overlap);
}

void check_two_mode_device(const ComplexMatrix& device) {
    if (device.rows() != 2 || device.cols() != 2)
        throw dimension_error("two-mode signals need a 2x2 device");
}

// P_d: r1 + (r2 - d) mutually indistinguishable photons compose with d
// photons in the orthogonal temporal state, which route as an independent
// binomial. Returns the distribution over s1 = 0..N.
std::vector<double> type_distribution(int r1, int r2, int d, const ComplexMatrix& device) {
    const int total = r1 + r2;
    const std::vector<double> interfering = boson_pair_mode_distribution(r1, r2 - d, device);
    const double p21 = std::norm(device(1, 0));
    std::vector<double> routed(d + 1);
    for (int b = 0; b <= d; ++b)
        routed[b] = binom(d, b) * std::pow(p21, b) * std::pow(1.0 - p21, d - b);
    std::vector<double> dist(total + 1, 0.0);
    for (int a = 0; a < static_cast<int>(interfering.size()); ++a)
        for (int b = 0; b <= d; ++b) dist[a + b] += interfering[a] * routed[b];
    return dist;
}

}  // namespace

WavepacketSet WavepacketSet::from_wavelengths(double lambda, double delta_lambda_fwhm,
                                              std::vector<double> arrival_times) {
    if (lambda <= 0.0 || delta_lambda_fwhm <= 0.0)
        throw domain_error("wavelength parameters must be positive");
    WavepacketSet p;
    p.omega0 = 2.0 * M_PI * kSpeedOfLight / lambda;
    // FWHM of the wavelength intensity spectrum -> sigma of the amplitude
    // envelope in omega; this choice makes the coincidence-dip FWHM equal l_c
    p.delta_omega = M_PI * kSpeedOfLight * delta_lambda_fwhm /
                    (lambda * lambda * std::sqrt(2.0 * std::log(2.0)));
    p.arrival_times = std::move(arrival_times);
    return p;
}

double WavepacketSet::coherence_length() const {
    return 2.0 * std::sqrt(2.0 * std::log(2.0)) * kSpeedOfLight / delta_omega;
}

Complex gaussian_overlap(double t_j, double t_k, double omega0, double delta_omega) {
    if (delta_omega <= 0.0) throw domain_error("delta_omega must be positive");
    const double dt = t_j - t_k;
    return std::polar(std::exp(-dt * dt * delta_omega * delta_omega / 4.0),
                      (t_k - t_j) * omega0);
}

GramSchmidtTriangle gram_schmidt(const WavepacketSet& packets) {
    if (packets.arrival_times.empty()) throw domain_error("no arrival times given");
    GramSchmidtTriangle tri;
    std::vector<double> basis_times;
    tri.label_of_mode.resize(packets.arrival_times.size());

    for (std::size_t mode = 0; mode < packets.arrival_times.size(); ++mode) {
        const double t = packets.arrival_times[mode];
        const auto found = std::find(basis_times.begin(), basis_times.end(), t);
        if (found != basis_times.end()) {
            tri.label_of_mode[mode] = static_cast<int>(found - basis_times.begin());
            continue;
        }
        // one Cholesky row of the Gram matrix against the existing basis
        const int k_existing = static_cast<int>(basis_times.size());
        std::vector<Complex> row(k_existing + 1);
        double residual = 1.0;
        for (int k = 0; k < k_existing; ++k) {
            Complex acc = gaussian_overlap(basis_times[k], t, packets.omega0,
                                           packets.delta_omega);
            for (int l = 0; l < k; ++l) acc -= row[l] * std::conj(tri.c[k][l]);
            row[k] = acc / tri.c[k][k];
            residual -= std::norm(row[k]);
        }
        if (residual < 1e-14) {
            // numerically inside the span: merge with the nearest earlier time
            int nearest = 0;
            for (int k = 1; k < k_existing; ++k)
                if (std::abs(basis_times[k] - t) < std::abs(basis_times[nearest] - t))
                    nearest = k;
            tri.label_of_mode[mode] = nearest;
            continue;
        }
        row[k_existing] = std::sqrt(residual);
        tri.c.push_back(std::move(row));
        basis_times.push_back(t);
        tri.label_of_mode[mode] = k_existing;
    }
    return tri;
}

std::vector<double> boson_pair_mode_distribution(int r1, int r2, const ComplexMatrix& device) {
    check_two_mode_device(device);
    if (r1 < 0 || r2 < 0) throw domain_error("occupations must be non-negative");
    const int total = r1 + r2;
    if (total > kTwoModeMaxN)
        throw size_limit_error("two-mode kernel capped at N <= 128");
    const Complex a = device(0, 0), b = device(0, 1);
    const Complex g = device(1, 0), d = device(1, 1);
    std::vector<double> dist(total + 1, 0.0);
    if (total == 0) {
        dist[0] = 1.0;
        return dist;
    }
    for (int s1 = 0; s1 <= total; ++s1) {
        Complex amp{0.0, 0.0};
        for (int from1 = std::max(0, s1 - r2); from1 <= std::min(r1, s1); ++from1) {
            const int from2 = s1 - from1;
            amp += binom(r1, from1) * binom(r2, from2) * std::pow(a, from1) *
                   std::pow(b, r1 - from1) * std::pow(g, from2) * std::pow(d, r2 - from2);
        }
        dist[s1] = std::norm(amp) * factorial(s1) * factorial(total - s1) /
                   (factorial(r1) * factorial(r2));
    }
    return dist;
}

std::vector<double> distinguishability_weights(int r2, double displacement,
                                               const WavepacketSet& packets) {
    const double csq = indistinguishability(displacement, packets);
    std::vector<double> w(r2 + 1);
    for (int d = 0; d <= r2; ++d)
        w[d] = binom(r2, d) * std::pow(1.0 - csq, d) * std::pow(csq, r2 - d);
    return w;
}

std::vector<double> two_mode_signal(int r1, int r2, double displacement,
                                    const ComplexMatrix& device,
                                    const WavepacketSet& packets) {
    check_two_mode_device(device);
    const std::vector<double> weights = distinguishability_weights(r2, displacement, packets);
    std::vector<double> signal(r1 + r2 + 1, 0.0);
    for (int d = 0; d <= r2; ++d) {
        if (weights[d] == 0.0) continue;
        const std::vector<double> dist = type_distribution(r1, r2, d, device);
        for (std::size_t s1 = 0; s1 < signal.size(); ++s1)
            signal[s1] += weights[d] * dist[s1];
    }
    return signal;
}

double signal_width_fwhm(const std::vector<std::pair<double, double>>& scan) {
    if (scan.size() < 4) throw width_undefined_error("scan too short");
    std::size_t center = 0;
    for (std::size_t i = 1; i < scan.size(); ++i)
        if (std::abs(scan[i].first) < std::abs(scan[center].first)) center = i;
    const bool two_sided = scan.front().first < -std::abs(scan[center].first);
    const double baseline =
        two_sided ? 0.5 * (scan.front().second + scan.back().second) : scan.back().second;
    const double peak = scan[center].second;
    if (peak == baseline) throw width_undefined_error("signal has no extremum at x = 0");
    const double half = 0.5 * (peak + baseline);

    // walk one flank outward; require exactly one crossing of the half level
    const auto crossing = [&](long step) -> double {
        double where = 0.0;
        int count = 0;
        long i = static_cast<long>(center);
        for (; i + step >= 0 && i + step < static_cast<long>(scan.size()); i += step) {
            const double f0 = scan[i].second - half;
            const double f1 = scan[i + step].second - half;
            if (f0 == 0.0 || f0 * f1 < 0.0) {
                const double t = f0 / (f0 - f1);
                where = scan[i].first + t * (scan[i + step].first - scan[i].first);
                ++count;
            }
        }
        if (count != 1)
            throw width_undefined_error("flank crosses the half level " +
                                        std::to_string(count) + " times");
        return where;
    };

    const double right = crossing(+1);
    const double left = two_sided ? crossing(-1) : -right;
    return right - left;
}

std::vector<double> multimode_signal(const Arrangement& r, const WavepacketSet& packets,
                                     const ComplexMatrix& u) {
    const int n = r.modes();
    const int big_n = r.particles();
    if (big_n > 8) throw size_limit_error("multimode signal capped at N <= 8");
    if (!u.square() || static_cast<int>(u.rows()) != n)
        throw arrangement_error("arrangement mode count does not match the device");
    if (static_cast<int>(packets.arrival_times.size()) != n)
        throw domain_error("need one arrival time per input mode");

    const GramSchmidtTriangle tri = gram_schmidt(packets);
    const int labels = tri.size();
    const auto& occ = r.occupations();

    // per-mode compositions of r_j over the labels reachable from that mode
    std::vector<std::vector<std::vector<int>>> mode_splits(n);
    for (int j = 0; j < n; ++j) {
        const int reach = tri.label_of_mode[j] + 1;
        std::vector<int> split(reach, 0);
        split[0] = occ[j];
        for (;;) {
            mode_splits[j].push_back(split);
            int i = reach - 2;
            while (i >= 0 && split[i] == 0) --i;
            if (i < 0) break;
            --split[i];
            int tail = 1;
            for (int l = i + 1; l < reach; ++l) {
                tail += split[l];
                split[l] = 0;
            }
            split[i + 1] = tail;
        }
    }

    // amplitude for one bosonic sub-scattering; empty groups contribute 1
    const auto group_amplitude = [&](const Arrangement& rin,
                                     const Arrangement& sout) -> Complex {
        if (rin.particles() == 0) return Complex{1.0, 0.0};
        const ComplexMatrix m = scattering_submatrix(u, rin, sout);
        double norm = 1.0;
        for (int v : rin.occupations()) norm *= factorial(v);
        for (int v : sout.occupations()) norm *= factorial(v);
        return permanent(m) / std::sqrt(norm);
    };

    std::map<std::vector<int>, Complex> amplitude_by_final;
    std::vector<std::size_t> cursor(n, 0);
    std::vector<std::vector<Arrangement>> finals_cache(big_n + 1);
    for (;;) {
        // label occupation matrix for this choice of per-mode splits
        std::vector<std::vector<int>> e(labels, std::vector<int>(n, 0));
        Complex amp0{1.0, 0.0};
        for (int j = 0; j < n; ++j) {
            const std::vector<int>& split = mode_splits[j][cursor[j]];
            amp0 *= std::sqrt(factorial(occ[j]));
            const auto& row = tri.c[tri.label_of_mode[j]];
            for (std::size_t k = 0; k < split.size(); ++k) {
                if (!split[k]) continue;
                e[k][j] = split[k];
                amp0 *= std::pow(row[k], split[k]) / std::sqrt(factorial(split[k]));
            }
        }

        if (std::abs(amp0) > 1e-300) {
            std::vector<Arrangement> group_inputs;
            std::vector<int> group_sizes;
            group_inputs.reserve(labels);
            for (int k = 0; k < labels; ++k) {
                group_inputs.emplace_back(e[k]);
                group_sizes.push_back(group_inputs.back().particles());
                if (finals_cache[group_sizes.back()].empty())
                    finals_cache[group_sizes.back()] =
                        enumerate_arrangements(group_sizes.back(), n);
            }
            // spread every label group over all its finals, coherently keyed
            // by the label-resolved final configuration
            std::vector<std::size_t> fc(labels, 0);
            for (;;) {
                Complex amp = amp0;
                std::vector<int> key;
                key.reserve(static_cast<std::size_t>(labels) * n);
                for (int k = 0; k < labels && amp != Complex{0.0, 0.0}; ++k) {
                    const Arrangement& sk = finals_cache[group_sizes[k]][fc[k]];
                    amp *= group_amplitude(group_inputs[k], sk);
                    key.insert(key.end(), sk.occupations().begin(), sk.occupations().end());
                }
                if (amp != Complex{0.0, 0.0}) amplitude_by_final[key] += amp;
                int k = labels - 1;
                while (k >= 0 && ++fc[k] == finals_cache[group_sizes[k]].size()) {
                    fc[k] = 0;
                    --k;
                }
                if (k < 0) break;
            }
        }

        int j = n - 1;
        while (j >= 0 && ++cursor[j] == mode_splits[j].size()) {
            cursor[j] = 0;
            --j;
        }
        if (j < 0) break;
    }

    const std::vector<Arrangement> outputs = enumerate_arrangements(big_n, n);
    std::map<std::vector<int>, std::size_t> index_of;
    for (std::size_t i = 0; i < outputs.size(); ++i) index_of[outputs[i].occupations()] = i;
    std::vector<double> signal(outputs.size(), 0.0);
    for (const auto& [key, amp] : amplitude_by_final) {
        std::vector<int> total(n, 0);
        for (int k = 0; k < labels; ++k)
            for (int j = 0; j < n; ++j) total[j] += key[k * n + j];
        signal[index_of.at(total)] += std::norm(amp);
    }
    return signal;
}

std::vector<double> dominant_type_approximation(int r1, int r2, double displacement,
                                                const ComplexMatrix& device,
                                                const WavepacketSet& packets) {
    check_two_mode_device(device);
    const double csq = indistinguishability(displacement, packets);
    // d-bar counts the particles in mode 2 that interfere; ties round toward
    // more interference
    const int dbar = static_cast<int>(std::floor(r2 * csq + 0.5));
    return type_distribution(r1, r2, r2 - dbar, device);
}

double semiclassical_density(double fraction) {
    if (!(fraction > 0.0 && fraction < 1.0))
        throw domain_error("semiclassical density diverges at the endpoints");
    return 1.0 / (M_PI * std::sqrt(fraction * (1.0 - fraction)));
}

}  // namespace interference
