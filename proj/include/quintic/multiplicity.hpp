#pragma once

#include <cstdint>
#include <optional>

#include "quintic/invariants.hpp"

namespace quintic {

/// Closed-form multiplicity m(f): the number of non-isomorphic pure
/// metacyclic fields sharing the conductor f. With X_k = (4^k - (-1)^k)/5:
///   species 1a          -> 4^t
///   species 1b          -> 4^u * X_v          (v >= 1 always holds here)
///   species 2, v >= 2   -> 4^u * X_{v-1}
/// The remaining species-2 corner (v <= 1, only reachable with v = 0 and
/// every prime free) is not covered by a proved formula; the function
/// returns nullopt there and the brute-force count is authoritative.
/// Throws on negative or inconsistent counters.
std::optional<std::int64_t> multiplicity_formula(const Species& species, int t, int u, int v);

/// Counts normalized 5th-power-free radicands with conductor4 equal to f4 by
/// enumerating every exponent pattern over the fixed prime set (4^t or
/// 4^(t+1) candidates). Exact for any conductor; throws when a candidate
/// value would not fit in 64 bits.
std::int64_t multiplicity_bruteforce(const Factorization& f4);

/// m(f) for the conductor of D: the formula where it applies, the
/// brute-force count elsewhere.
std::int64_t multiplicity(const Radicand& d);

}  // namespace quintic
