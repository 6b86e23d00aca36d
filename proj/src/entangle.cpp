#include "interference/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "interference/errors.hpp"
#include "interference/linalg.hpp"
#include "interference/rng.hpp"

namespace interference {

double QuditStateTensor::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

std::size_t QuditStateTensor::flat_index(const std::vector<int>& js) const {
    if (static_cast<int>(js.size()) != parties)
        throw dimension_error("index tuple length does not match party count");
    std::size_t idx = 0;
    for (int j : js) {
        if (j < 0 || j >= local_dim) throw domain_error("qudit index out of range");
        idx = idx * local_dim + static_cast<std::size_t>(j);
    }
    return idx;
}

DeviceW::DeviceW(ComplexMatrix matrix, int n_parties, int dim)
    : w(std::move(matrix)), parties(n_parties), local_dim(dim) {
    if (parties < 1 || local_dim < 2) throw domain_error("need N >= 1 parties and d >= 2");
    const std::size_t n = static_cast<std::size_t>(parties) * local_dim;
    if (w.rows() != n || w.cols() != n)
        throw dimension_error("device matrix must be (N d) x (N d)");
}

BipartiteTransitionState bipartite_transition_state(Species species, double c21_mod2) {
    if (species == Species::Distinguishable)
        throw species_error("transition state is defined for bosons and fermions");
    if (!(c21_mod2 >= 0.0 && c21_mod2 <= 1.0))
        throw domain_error("indistinguishability must lie in [0, 1]");
    const double delta = species == Species::Boson ? 1.0 : -1.0;
    BipartiteTransitionState state{ComplexMatrix(4, 4), std::sqrt(c21_mod2)};
    state.rho(1, 1) = 0.5;
    state.rho(2, 2) = 0.5;
    state.rho(1, 2) = -0.5 * delta * c21_mod2;
    state.rho(2, 1) = -0.5 * delta * c21_mod2;
    return state;
}

namespace {

// N x N matrix with rows the occupied input rows of W and columns selected by
// the outcome tuple: column k is d (k - 1) + j_k.
ComplexMatrix outcome_submatrix(const DeviceW& device, const std::vector<int>& js) {
    const int n = device.parties;
    const int d = device.local_dim;
    ComplexMatrix v(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) v(a, b) = device.w(a * d, b * d + js[b]);
    return v;
}

bool next_tuple(std::vector<int>& js, int base) {
    for (int k = static_cast<int>(js.size()) - 1; k >= 0; --k) {
        if (++js[k] < base) return true;
        js[k] = 0;
    }
    return false;
}

}  // namespace

QuditStateTensor multipartite_coefficients(const DeviceW& device, Species species) {
    if (species == Species::Distinguishable)
        throw species_error("amplitudes are defined for bosons and fermions");
    const int n = device.parties;
    const int d = device.local_dim;
    double count = std::pow(static_cast<double>(d), n);
    if (count > 1e7) throw size_limit_error("tensor exceeds 10^7 entries");

    QuditStateTensor tensor{n, d, std::vector<Complex>(static_cast<std::size_t>(count))};
    std::vector<int> js(n, 0);
    std::size_t flat = 0;
    do {
        const ComplexMatrix v = outcome_submatrix(device, js);
        tensor.amplitudes[flat++] =
            species == Species::Boson ? permanent(v) : determinant(v);
    } while (next_tuple(js, d));
    return tensor;
}

double fermion_minor_factorization_check(const DeviceW& device) {
    if (device.local_dim != 2)
        throw precondition_error("minor factorization implemented for qubits (d = 2) only");
    const int n = device.parties;

    Eigen::MatrixXcd e_mat(n, n), f_mat(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            e_mat(a, b) = device.w(a * 2, b * 2);
            f_mat(a, b) = device.w(a * 2, b * 2 + 1);
        }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(e_mat);
    if (!lu.isInvertible())
        throw precondition_error("reference submatrix is singular; resample the device");
    // F_j = sum_k C_{j,k} E_k column-wise; principal minors of C and of
    // E^{-1} F coincide, so the solve is used directly
    const Eigen::MatrixXcd c_mat = lu.solve(f_mat);

    const QuditStateTensor tensor = multipartite_coefficients(device, Species::Fermion);
    const Complex g0 = tensor.amplitudes.front();

    double worst = 0.0;
    std::vector<int> js(n, 0);
    std::size_t flat = 0;
    do {
        std::vector<int> keep;
        for (int k = 0; k < n; ++k)
            if (js[k] == 1) keep.push_back(k);
        Complex minor{1.0, 0.0};
        if (!keep.empty()) {
            const int m = static_cast<int>(keep.size());
            ComplexMatrix sub(m, m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) sub(a, b) = c_mat(keep[a], keep[b]);
            minor = determinant(sub);
        }
        worst = std::max(worst, std::abs(tensor.amplitudes[flat++] - g0 * minor));
    } while (next_tuple(js, 2));
    return worst;
}

int bipartition_rank(const QuditStateTensor& state, const std::vector<int>& cut, double tol) {
    const int n = state.parties;
    std::vector<bool> in_cut(n, false);
    for (int party : cut) {
        if (party < 0 || party >= n) throw domain_error("cut names an unknown party");
        in_cut[party] = true;
    }
    const int cut_size = static_cast<int>(std::count(in_cut.begin(), in_cut.end(), true));
    if (cut_size == 0 || cut_size == n) throw domain_error("cut must be a proper bipartition");
    if (state.norm() < 1e-300) throw rank_undefined_error("zero tensor has no rank");

    const auto dim = [&](int parties_in) {
        std::size_t d = 1;
        for (int i = 0; i < parties_in; ++i) d *= state.local_dim;
        return d;
    };
    Eigen::MatrixXcd reshaped(dim(cut_size), dim(n - cut_size));
    std::vector<int> js(n, 0);
    std::size_t flat = 0;
    do {
        std::size_t row = 0, col = 0;
        for (int k = 0; k < n; ++k) {
            if (in_cut[k])
                row = row * state.local_dim + js[k];
            else
                col = col * state.local_dim + js[k];
        }
        reshaped(row, col) = state.amplitudes[flat++];
    } while (next_tuple(js, state.local_dim));

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reshaped);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

int manifold_dimension_estimate(Species species, int parties, int local_dim,
                                std::uint64_t seed, int samples) {
    if (parties < 2 || parties > 6) throw domain_error("parties must lie in 2..6");
    if (samples < 1) throw domain_error("need at least one sample");
    const int n = parties, d = local_dim;
    const int n_modes = n * d;

    Rng rng(seed);
    std::map<int, int> votes;
    std::vector<int> per_sample;
    for (int sample = 0; sample < samples; ++sample) {
        ComplexMatrix w(n_modes, n_modes);
        for (std::size_t i = 0; i < w.entries().size(); ++i)
            w.entries()[i] = Complex{rng.gaussian(), rng.gaussian()} * M_SQRT1_2;
        DeviceW device(w, n, d);

        const auto tensor_of = [&](const ComplexMatrix& mat) {
            DeviceW dev(mat, n, d);
            return multipartite_coefficients(dev, species);
        };

        const std::size_t out_dim = tensor_of(w).amplitudes.size();
        const int real_params = 2 * n * n_modes;  // only the occupied rows matter
        Eigen::MatrixXd jac(2 * out_dim, real_params);
        int column = 0;
        for (int row = 0; row < n; ++row)
            for (int col = 0; col < n_modes; ++col)
                for (int part = 0; part < 2; ++part) {
                    const Complex base = w(row * d, col);
                    const double step = 1e-6 * std::max(1.0, std::abs(base));
                    const Complex delta =
                        part == 0 ? Complex{step, 0.0} : Complex{0.0, step};
                    ComplexMatrix plus = w, minus = w;
                    plus(row * d, col) = base + delta;
                    minus(row * d, col) = base - delta;
                    const QuditStateTensor tp = tensor_of(plus);
                    const QuditStateTensor tm = tensor_of(minus);
                    for (std::size_t i = 0; i < out_dim; ++i) {
                        const Complex der =
                            (tp.amplitudes[i] - tm.amplitudes[i]) / (2.0 * step);
                        jac(2 * i, column) = der.real();
                        jac(2 * i + 1, column) = der.imag();
                    }
                    ++column;
                }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
        const auto& sv = svd.singularValues();
        const double cutoff = 1e-8 * sv(0);
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > cutoff) ++rank;
        per_sample.push_back(rank);
        ++votes[rank];
    }
    auto best = votes.begin();
    for (auto it = votes.begin(); it != votes.end(); ++it)
        if (it->second > best->second) best = it;
    if (2 * best->second <= samples) {
        std::string report = "no stable rank across samples:";
        for (int r : per_sample) report += " " + std::to_string(r);
        throw ambiguous_rank_error(report);
    }
    const int real_rank = best->first;
    if (real_rank % 2 != 0)
        throw ambiguous_rank_error("odd real rank " + std::to_string(real_rank) +
                                   " for a holomorphic map");
    return real_rank / 2;
}

}  // namespace interference
