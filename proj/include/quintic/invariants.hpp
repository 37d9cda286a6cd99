#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "quintic/arith.hpp"
#include "quintic/radicand.hpp"

namespace quintic {

/// Dedekind species of N = Q(zeta_5, D^(1/5)), read off D mod 25 and 5 | D.
/// The species fixes the 5-exponent e0 of the fourth conductor power f^4:
///   1a: D !≡ +-1, +-7 (mod 25) and 5 | D   -> e0 = 6
///   1b: D !≡ +-1, +-7 (mod 25) and 5 ∤ D   -> e0 = 2
///   2:  D  ≡ +-1, +-7 (mod 25)             -> e0 = 0
enum class SpeciesTag { S1a, S1b, S2 };

struct Species {
    SpeciesTag tag = SpeciesTag::S1b;
    int e0 = 2;

    friend bool operator==(const Species&, const Species&) = default;
};

std::string_view to_string(SpeciesTag tag);
std::optional<SpeciesTag> parse_species(std::string_view text);

Species species_of(const Radicand& d);

/// Fourth power of the conductor of the Kummer extension N/K:
/// f^4 = 5^2 R^4 for the first species and R^4 for the second, with R the
/// squarefree kernel of D (R contains 5 whenever 5 | D).
Factorization conductor4(const Radicand& d);

/// Discriminants of the degree-5, degree-10 and degree-20 fields, all exact:
/// d_L = 5^3 f^4, d_M = 5^7 f^8, d_N = 5^15 f^16.
struct Discriminants {
    Factorization dL, dM, dN;
};

Discriminants discriminants(const Radicand& d);

/// The prime counters of the refined classification. With
/// D = 5^e* q_1^e1 ... q_t^et (q_j != 5):
///   t  - primes != 5 dividing D
///   u  - free primes among them (q ≡ +-1, +-7 mod 25)
///   v  - restrictive primes, t - u
///   s2 - primes q ≡ -1 (mod 5), 2-split in N
///   s4 - primes q ≡ +1 (mod 5), 4-split in N
///   n  - non-split primes, t - s2 - s4
///   T  - primes dividing the conductor f; counted from f^4 itself, so the
///        ramified prime 5 is included for both first-species cases
struct FieldInvariants {
    Radicand D;
    Species species;
    std::int64_t R = 1;  // squarefree kernel of D
    Factorization f4;
    Discriminants disc;
    int T = 0, t = 0, u = 0, v = 0, n = 0, s2 = 0, s4 = 0;
};

FieldInvariants field_invariants(const Radicand& d);

/// The multiplet (e0; t, u, v, m; n, s2, s4). m comes from the multiplicity
/// module: the number of non-isomorphic fields sharing the conductor.
struct RefinedSpecies {
    int e0 = 0;
    int t = 0, u = 0, v = 0;
    std::int64_t m = 1;
    int n = 0, s2 = 0, s4 = 0;

    friend bool operator==(const RefinedSpecies&, const RefinedSpecies&) = default;
};

RefinedSpecies refined_species(const Radicand& d);

/// Which relative different the valuation refers to.
enum class DifferentLevel { NOverK, LOverQ };

/// Valuation of any prime above q in the relative different, by case table.
/// For N/K: 24 when q = 5 and 5^6 || f^4, 8 when q = 5 and 5^2 || f^4,
/// 4 for q != 5 dividing f, else 0. For L/Q: 9 / 5 for the two 5-ramified
/// species; for the second species the two primes of L above 5 behave
/// differently, so the caller must pass v_Q(5 O_L) in {1, 4} (valuations 0
/// and 3); 4 for q != 5 dividing f, else 0.
int different_valuation(std::int64_t q, const Radicand& d, DifferentLevel level,
                        std::optional<int> split_exponent = std::nullopt);

}  // namespace quintic
