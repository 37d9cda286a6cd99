#pragma once

#include <cstdint>
#include <vector>

#include "quintic/arith.hpp"

namespace quintic {

/// A pth-power-free radicand D >= 2 generating the pure field of degree p.
/// Every exponent in the factorization lies in [1, p-1].
struct Radicand {
    std::int64_t value = 0;
    Factorization factorization;
    int p = 5;

    friend bool operator==(const Radicand&, const Radicand&) = default;
};

/// Builds a radicand from an arbitrary integer >= 2 by reducing all prime
/// exponents mod p (the pure field only sees the residues). Throws when the
/// reduction collapses to 1, i.e. the input was a perfect pth power.
Radicand make_radicand(std::int64_t value, int p = 5);

/// Same reduction starting from a known factorization; spares the trial
/// division (co-radicands of moderate D already exceed its input cap).
Radicand make_radicand(const Factorization& factorization, int p = 5);

/// Degree-k homogeneous components D_1, ..., D_{p-1}: D_k is the squarefree
/// product of the primes occurring in D with exponent exactly k, so that
/// D = prod D_k^k.
std::vector<std::int64_t> homogeneous_components(const Radicand& d);

/// The orbit D^(1), ..., D^(p-1), where D^(k) arises from D^k by reducing all
/// prime exponents mod p. D^(1) = D, and D^(k) is congruent to D^k modulo
/// pth powers of rationals, so all orbit members generate isomorphic fields.
std::vector<std::int64_t> coradicands(const Radicand& d);

struct NormalizedRadicand {
    Radicand radicand;  // the minimal orbit member
    int index = 1;      // the k with D^(k) minimal
};

/// Picks the unique minimal member of the co-radicand orbit. Idempotent:
/// a normalized input comes back unchanged with index 1. Distinct orbit
/// members are never equal, so the minimum needs no tie-break.
NormalizedRadicand normalize(const Radicand& d);

bool is_normalized(const Radicand& d);

/// All normalized pth-power-free radicands in [2, limit), ascending.
/// One per isomorphism class of pure degree-p fields with radicand < limit.
std::vector<Radicand> enumerate_normalized(std::int64_t limit, int p = 5);

}  // namespace quintic
