#include "interference/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "interference/errors.hpp"

namespace interference {

std::string to_string(Species s) {
    switch (s) {
        case Species::Distinguishable: return "distinguishable";
        case Species::Boson: return "boson";
        case Species::Fermion: return "fermion";
    }
    return "?";
}

Species species_from_string(const std::string& name) {
    if (name == "distinguishable") return Species::Distinguishable;
    if (name == "boson") return Species::Boson;
    if (name == "fermion") return Species::Fermion;
    throw parse_error("unknown species '" + name +
                      "' (expected distinguishable|boson|fermion)");
}

Arrangement::Arrangement(std::vector<int> occupations) : q_(std::move(occupations)) {
    if (q_.empty()) throw arrangement_error("arrangement needs at least one mode");
    total_ = 0;
    for (int v : q_) {
        if (v < 0) throw arrangement_error("occupations must be non-negative");
        total_ += v;
    }
}

std::string Arrangement::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < q_.size(); ++i) {
        if (i) os << ',';
        os << q_[i];
    }
    return os.str();
}

Arrangement Arrangement::parse(const std::string& csv) {
    std::vector<int> q;
    std::string field;
    std::istringstream is(csv);
    while (std::getline(is, field, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(field, &used);
            if (used != field.size()) throw std::invalid_argument(field);
            q.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad occupation field '" + field + "' in '" + csv + "'");
        }
    }
    if (q.empty()) throw parse_error("empty arrangement string");
    return Arrangement(q);
}

std::vector<int> mode_assignment(const Arrangement& q) {
    std::vector<int> d;
    d.reserve(q.particles());
    const auto& occ = q.occupations();
    for (int j = 0; j < q.modes(); ++j)
        for (int c = 0; c < occ[j]; ++c) d.push_back(j + 1);
    return d;
}

Arrangement occupation_from_assignment(const std::vector<int>& d, int n) {
    std::vector<int> q(n, 0);
    for (int mode : d) {
        if (mode < 1 || mode > n) throw arrangement_error("mode label out of range");
        ++q[mode - 1];
    }
    return Arrangement(q);
}

std::uint64_t arrangement_count(int particles, int modes) {
    if (particles < 0 || modes < 1) throw arrangement_error("need N >= 0 and n >= 1");
    // binom(N+n-1, N), multiplicative form with overflow guard
    std::uint64_t result = 1;
    const int k = std::min(particles, modes - 1);
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(particles + modes - 1 - k + i);
        if (result > UINT64_MAX / num)
            throw size_limit_error("arrangement count overflows 64 bits");
        result = result * num / static_cast<std::uint64_t>(i);
    }
    return result;
}

std::vector<Arrangement> enumerate_arrangements(int particles, int modes) {
    const std::uint64_t count = arrangement_count(particles, modes);
    if (count > 20'000'000ull)
        throw size_limit_error("arrangement space too large to enumerate: " +
                               std::to_string(count));
    std::vector<Arrangement> out;
    out.reserve(count);
    std::vector<int> q(modes, 0);
    q[0] = particles;
    for (;;) {
        out.push_back(Arrangement(q));
        // successor in decreasing lexicographic order: move one particle from
        // the rightmost movable mode and flush the tail just after it
        int i = modes - 2;
        while (i >= 0 && q[i] == 0) --i;
        if (i < 0) break;
        --q[i];
        int tail = 1;
        for (int j = i + 1; j < modes; ++j) {
            tail += q[j];
            q[j] = 0;
        }
        q[i + 1] = tail;
    }
    return out;
}

bool is_pauli(const Arrangement& q) {
    return std::all_of(q.occupations().begin(), q.occupations().end(),
                       [](int v) { return v <= 1; });
}

std::vector<std::pair<int, int>> periods(const Arrangement& q) {
    const int n = q.modes();
    const auto& occ = q.occupations();
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= n; ++m) {
        if (n % m) continue;
        bool periodic = true;
        for (int i = m; i < n && periodic; ++i) periodic = occ[i] == occ[i % m];
        if (periodic) out.emplace_back(m, n / m);
    }
    return out;
}

}  // namespace interference
