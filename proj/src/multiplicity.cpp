#include "quintic/multiplicity.hpp"

#include <limits>
#include <stdexcept>

namespace quintic {

namespace {

std::int64_t x_of(int k) {
    // X_k = (4^k - (-1)^k) / 5: 1, 3, 13, 51, ...
    std::int64_t pow4 = checked_pow(4, k);
    std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    return (pow4 - sign) / 5;
}

bool second_species_value(std::int64_t mod25) {
    return mod25 == 1 || mod25 == 7 || mod25 == 18 || mod25 == 24;
}

}  // namespace

std::optional<std::int64_t> multiplicity_formula(const Species& species, int t, int u, int v) {
    if (t < 0 || u < 0 || v < 0) throw std::invalid_argument("counters must be non-negative");
    if (u + v != t) throw std::invalid_argument("counters must satisfy u + v = t");
    switch (species.tag) {
        case SpeciesTag::S1a:
            return checked_pow(4, t);
        case SpeciesTag::S1b:
            if (v < 1) return std::nullopt;
            return checked_pow(4, u) * x_of(v);
        case SpeciesTag::S2:
            if (v < 2) return std::nullopt;
            return checked_pow(4, u) * x_of(v - 1);
    }
    return std::nullopt;
}

std::int64_t multiplicity_bruteforce(const Factorization& f4) {
    int e5 = f4.exponent_of(5);
    if (e5 != 0 && e5 != 2 && e5 != 6)
        throw std::invalid_argument("conductor 5-exponent must be 0, 2 or 6");
    std::vector<std::int64_t> primes;
    for (const auto& [q, e] : f4.factors()) {
        if (q == 5) continue;
        if (e != 4) throw std::invalid_argument("conductor exponents away from 5 must be 4");
        primes.push_back(q);
    }
    // Candidate radicands: one exponent in [1,4] per kernel prime, plus one
    // for 5 itself in the 1a case. Species is constant along each orbit, so
    // counting normalized candidates counts orbits of the right species.
    bool with_five = (e5 == 6);
    std::size_t slots = primes.size() + (with_five ? 1 : 0);
    if (slots == 0) throw std::invalid_argument("conductor must involve at least one radicand prime");
    std::vector<int> exps(slots, 1);
    std::int64_t count = 0;
    auto candidate_value = [&](const std::vector<int>& e) {
        unsigned __int128 v = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (int j = 0; j < e[i]; ++j) v *= static_cast<unsigned __int128>(primes[i]);
        if (with_five)
            for (int j = 0; j < e[primes.size()]; ++j) v *= 5;
        if (v > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            throw std::overflow_error("candidate radicand exceeds 64 bits");
        return static_cast<std::int64_t>(v);
    };
    for (;;) {
        std::int64_t value = candidate_value(exps);
        // Orbit minimality: compare against the three co-radicands.
        bool minimal = true;
        for (int k = 2; k <= 4 && minimal; ++k) {
            std::vector<int> scaled(exps);
            for (auto& e : scaled) e = (e * k) % 5;
            if (candidate_value(scaled) < value) minimal = false;
        }
        if (minimal) {
            bool second = second_species_value(value % 25);
            bool wanted = with_five ? true : (e5 == 0 ? second : !second);
            if (wanted) ++count;
        }
        // next exponent pattern
        std::size_t i = 0;
        while (i < slots && exps[i] == 4) exps[i++] = 1;
        if (i == slots) break;
        ++exps[i];
    }
    return count;
}

std::int64_t multiplicity(const Radicand& d) {
    FieldInvariants inv = field_invariants(d);
    if (auto m = multiplicity_formula(inv.species, inv.t, inv.u, inv.v)) return *m;
    return multiplicity_bruteforce(inv.f4);
}

}  // namespace quintic
