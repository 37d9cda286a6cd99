#include "quintic/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "quintic/multiplicity.hpp"

namespace quintic {

namespace {

void require_quintic(const Radicand& d) {
    if (d.p != 5) throw std::invalid_argument("field invariants are defined for p = 5 radicands");
}

bool second_species_residue(std::int64_t value) {
    int r = static_cast<int>(value % 25);
    return r == 1 || r == 7 || r == 18 || r == 24;
}

}  // namespace

std::string_view to_string(SpeciesTag tag) {
    switch (tag) {
        case SpeciesTag::S1a: return "1a";
        case SpeciesTag::S1b: return "1b";
        case SpeciesTag::S2: return "2";
    }
    return "?";
}

std::optional<SpeciesTag> parse_species(std::string_view text) {
    if (text == "1a") return SpeciesTag::S1a;
    if (text == "1b") return SpeciesTag::S1b;
    if (text == "2") return SpeciesTag::S2;
    return std::nullopt;
}

Species species_of(const Radicand& d) {
    require_quintic(d);
    if (second_species_residue(d.value)) return {SpeciesTag::S2, 0};
    if (d.factorization.contains(5)) return {SpeciesTag::S1a, 6};
    return {SpeciesTag::S1b, 2};
}

Factorization conductor4(const Radicand& d) {
    Species sp = species_of(d);
    std::vector<PrimePower> parts;
    if (sp.tag != SpeciesTag::S2 && !d.factorization.contains(5)) parts.push_back({5, 2});
    for (const auto& [q, e] : d.factorization.factors()) {
        if (q == 5) {
            parts.push_back({5, sp.e0});  // 5^2 * 5^4 from the kernel
        } else {
            parts.push_back({q, 4});
        }
    }
    std::sort(parts.begin(), parts.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return Factorization(std::move(parts));
}

Discriminants discriminants(const Radicand& d) {
    Factorization f4 = conductor4(d);
    auto scaled = [&f4](int f4_multiple, int extra5) {
        std::vector<PrimePower> parts;
        bool has5 = false;
        for (const auto& [q, e] : f4.factors()) {
            if (q == 5) {
                has5 = true;
                parts.push_back({5, e * f4_multiple + extra5});
            } else {
                parts.push_back({q, e * f4_multiple});
            }
        }
        if (!has5) parts.insert(parts.begin(), {5, extra5});
        std::sort(parts.begin(), parts.end(),
                  [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
        return Factorization(std::move(parts));
    };
    // d_K = 5^3: d_L = d_K f^4, d_M = 5 d_K^2 f^8, d_N = d_K^5 f^16.
    return Discriminants{scaled(1, 3), scaled(2, 7), scaled(4, 15)};
}

FieldInvariants field_invariants(const Radicand& d) {
    require_quintic(d);
    FieldInvariants inv;
    inv.D = d;
    inv.species = species_of(d);
    inv.f4 = conductor4(d);
    inv.disc = discriminants(d);
    inv.R = 1;
    for (const auto& [q, e] : d.factorization.factors()) {
        inv.R *= q;
        if (q == 5) continue;
        ++inv.t;
        ResidueClass rc = residue_class(q);
        if (rc.free_mod25()) ++inv.u;
        if (rc.minus_one_mod5()) ++inv.s2;
        if (rc.plus_one_mod5()) ++inv.s4;
    }
    inv.v = inv.t - inv.u;
    inv.n = inv.t - inv.s2 - inv.s4;
    inv.T = static_cast<int>(inv.f4.size());
    return inv;
}

RefinedSpecies refined_species(const Radicand& d) {
    FieldInvariants inv = field_invariants(d);
    return RefinedSpecies{inv.species.e0, inv.t,     inv.u,  inv.v,
                          multiplicity(d), inv.n, inv.s2, inv.s4};
}

int different_valuation(std::int64_t q, const Radicand& d, DifferentLevel level,
                        std::optional<int> split_exponent) {
    if (!is_prime(q)) throw std::invalid_argument("different_valuation requires a prime q");
    Factorization f4 = conductor4(d);
    int e5 = f4.exponent_of(5);
    bool divides_f = f4.contains(q);
    if (level == DifferentLevel::NOverK) {
        if (q == 5) {
            if (e5 == 6) return 24;
            if (e5 == 2) return 8;
            return 0;  // second species: 5 is unramified in N/K
        }
        return divides_f ? 4 : 0;
    }
    // L over Q
    if (q == 5) {
        if (e5 == 6) return 9;
        if (e5 == 2) return 5;
        // Second species: 5 O_L = P1 * P2^4 and the two primes contribute
        // differently; the caller must say which one is meant.
        if (!split_exponent)
            throw std::invalid_argument(
                "different_valuation at q = 5, second species needs v_Q(5 O_L)");
        if (*split_exponent == 4) return 3;
        if (*split_exponent == 1) return 0;
        throw std::invalid_argument("v_Q(5 O_L) must be 1 or 4");
    }
    return divides_f ? 4 : 0;
}

}  // namespace quintic
