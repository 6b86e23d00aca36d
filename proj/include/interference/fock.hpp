#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace interference {

/// Particle statistics selector. Fermions are restricted to Pauli
/// arrangements (at most one particle per mode) wherever they appear.
enum class Species { Distinguishable, Boson, Fermion };

std::string to_string(Species s);
Species species_from_string(const std::string& name);

/// Occupation list q_1..q_n of N particles over n modes. Mode labels are
/// 1-based throughout the data model; vector storage is an internal detail.
class Arrangement {
  public:
    explicit Arrangement(std::vector<int> occupations);

    int modes() const { return static_cast<int>(q_.size()); }
    int particles() const { return total_; }

    const std::vector<int>& occupations() const { return q_; }
    int occupation(int mode_1based) const { return q_[mode_1based - 1]; }

    /// Comma-separated occupations, e.g. "2,1,0".
    std::string str() const;
    static Arrangement parse(const std::string& csv);

    bool operator==(const Arrangement& other) const = default;

  private:
    std::vector<int> q_;
    int total_;
};

/// Non-decreasing list of 1-based mode labels, one per particle: the mode
/// number j repeated q_j times.
std::vector<int> mode_assignment(const Arrangement& q);

/// Inverse of mode_assignment for a given mode count.
Arrangement occupation_from_assignment(const std::vector<int>& d, int n);

/// binom(N+n-1, N) with overflow detection.
std::uint64_t arrangement_count(int particles, int modes);

/// All weak compositions of N into n parts, lexicographically decreasing.
/// The order is fixed so distribution vectors are comparable across runs.
std::vector<Arrangement> enumerate_arrangements(int particles, int modes);

/// True iff every occupation is at most 1.
bool is_pauli(const Arrangement& q);

/// All (m, p) with m dividing n such that q is the concatenation of p = n/m
/// copies of its first m entries. Every valid period is returned, not just
/// the minimal one; the list always contains (n, 1).
std::vector<std::pair<int, int>> periods(const Arrangement& q);

}  // namespace interference
