#pragma once

#include <utility>
#include <vector>

#include "interference/fock.hpp"
#include "interference/matrix.hpp"

namespace interference {

/// Gaussian temporal wavepackets: a common spectral envelope plus one arrival
/// time per spatial input mode (particles sharing a mode share one arrival
/// time). Displacements x relate to times via x = c (t_j - t_1).
struct WavepacketSet {
    double omega0;                     // central angular frequency [rad/s]
    double delta_omega;                // spectral width of the amplitude envelope [rad/s]
    std::vector<double> arrival_times; // one entry per input mode [s]

    static constexpr double kSpeedOfLight = 299792458.0;

    /// Paper-style parameters: central wavelength and the full width at half
    /// maximum of the wavelength intensity spectrum. The defaults 800 nm /
    /// 2.5 nm give a coherence length of about 226 um.
    static WavepacketSet from_wavelengths(double lambda, double delta_lambda_fwhm,
                                          std::vector<double> arrival_times);

    /// Coherence length l_c = 2 sqrt(2 ln 2) c / delta_omega; equals the FWHM
    /// of the two-photon coincidence dip in the displacement x.
    double coherence_length() const;
};

/// <t_j|t_k> = exp(i (t_k - t_j) omega0) exp(-(t_j - t_k)^2 delta_omega^2 / 4).
Complex gaussian_overlap(double t_j, double t_k, double omega0, double delta_omega);

/// Lower-triangular expansion of each wavepacket over the orthonormal basis
/// obtained by Gram-Schmidt on the distinct arrival times:
/// |t_j> = sum_k c[j][k] |t~_k>, diagonal real and non-negative.
struct GramSchmidtTriangle {
    std::vector<std::vector<Complex>> c;  // c[j] has j+1 entries
    std::vector<int> label_of_mode;       // input mode -> basis row

    int size() const { return static_cast<int>(c.size()); }
};

/// Builds the coefficient triangle. Identical arrival times collapse into a
/// single basis ket; a numerically degenerate residual (below 1e-14) merges
/// with the nearest earlier time instead of dividing by ~0.
GramSchmidtTriangle gram_schmidt(const WavepacketSet& packets);

/// Exact output distribution of (r1, r2) partially distinguishable photons on
/// a two-mode device at displacement x, as a vector over s1 = 0..N:
/// P_T(s, x) = sum_d W_d(x) P_d(s), where d counts distinguishable particles
/// in mode 2, W_d = binom(r2, d) |c22|^(2d) |c21|^(2(r2-d)), and P_d composes
/// the interfering group with an independent binomial for the rest.
std::vector<double> two_mode_signal(int r1, int r2, double displacement,
                                    const ComplexMatrix& device, const WavepacketSet& packets);

/// Weights W_d(x) for d = 0..r2; non-negative, summing to one.
std::vector<double> distinguishability_weights(int r2, double displacement,
                                               const WavepacketSet& packets);

/// FWHM of a dip or peak centred at x = 0, by linear interpolation around the
/// half level relative to the large-|x| baseline. The scan must be sorted in
/// x; one-sided scans starting at 0 are mirrored. Throws width_undefined_error
/// when a flank crosses the half level more than once.
double signal_width_fwhm(const std::vector<std::pair<double, double>>& scan);

/// General multimode transition signal via distinguishability types: the
/// initial state is expanded over orthonormal temporal labels, particles
/// sharing a label interfere bosonically, amplitudes of expansions feeding
/// the same label-resolved final configuration add coherently, and the
/// label-resolved probabilities add incoherently. Returns a vector over
/// enumerate_arrangements(N, n). Capped at N <= 8.
std::vector<double> multimode_signal(const Arrangement& r, const WavepacketSet& packets,
                                     const ComplexMatrix& u);

/// Single-type approximation: round(r2 |c21|^2) particles in mode 2 interfere
/// with mode 1 (ties round toward more interference), the rest are routed as
/// distinguishable. Exact in both limits x -> 0 and x -> infinity.
std::vector<double> dominant_type_approximation(int r1, int r2, double displacement,
                                                const ComplexMatrix& device,
                                                const WavepacketSet& packets);

/// Semi-classical density 1/(pi sqrt(x(1-x))) for the particle fraction in
/// one output mode; diverges at the endpoints (callers integrate over bins).
double semiclassical_density(double fraction);

/// Closed-form bosonic output distribution of (r1, r2) indistinguishable
/// photons on an arbitrary two-mode device, O(N^2); valid far beyond the
/// permanent cap. Indexed by s1 = 0..N.
std::vector<double> boson_pair_mode_distribution(int r1, int r2, const ComplexMatrix& device);

}  // namespace interference
