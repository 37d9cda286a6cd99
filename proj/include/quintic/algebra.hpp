#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "quintic/invariants.hpp"

namespace quintic {

/// Element of the group ring F_p[<tau>] with tau of order 2 (p = 3) or
/// order 4 (p = 5). coeffs[k] is the coefficient of tau^k, reduced mod p.
struct GroupRingElement {
    int p = 5;
    std::vector<int> coeffs;

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
};

GroupRingElement ring_identity(int p, int order);

/// The central orthogonal idempotents of F_p[<tau>], built from the
/// characters of the cyclic group via the isomorphism of the root-of-unity
/// group with U(Z/pZ) (sqrt(-1) -> 3 for p = 5, -1 -> 2 for p = 3).
/// For p = 5 the coefficient vectors are (4,4,4,4), (4,3,1,2), (4,1,4,1),
/// (4,2,1,3); for p = 3 they are (2,2) and (2,1).
std::vector<GroupRingElement> idempotents(int p);

/// Convolution product: tau-exponents add mod the group order, coefficients
/// reduce mod p.
GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y);

/// Semi-local exponent vector of an ambiguous ideal at a 4-split prime:
/// entries (a, b, c, d) are the exponents of (L, L^tau, L^tau^2, L^tau^3)
/// mod 5, so the printed shorthand (1243) reads literally.
struct ExponentVector {
    std::array<int, 4> e{};

    bool is_zero() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

ExponentVector make_exponent_vector(int a, int b, int c, int d);

/// tau sends the coefficient of tau^k to tau^(k+1): the right cyclic shift
/// (a, b, c, d) -> (d, a, b, c).
ExponentVector tau_act(const ExponentVector& v);

/// tau on the 2-split level swaps the two prime exponents.
std::array<int, 2> tau_act(const std::array<int, 2>& v);

/// The scalar lambda with w = lambda * v (mod 5) when the two vectors span
/// the same line; absent otherwise. Two zero vectors give lambda = 1.
std::optional<int> is_scalar_multiple(const ExponentVector& v, const ExponentVector& w);

/// Ideal norm on exponent vectors. A 4-split prime has residue degree 1 at
/// every level, so the norm sums the exponents of the primes that merge:
/// N -> M identifies tau^2 with 1, N -> L identifies everything.
std::array<int, 2> norm_project_nm(const ExponentVector& v);
int norm_project_ml(const std::array<int, 2>& v);
int norm_project_nl(const ExponentVector& v);

bool in_norm_kernel_nm(const ExponentVector& v);

/// F_5-dimensions of the three blocks of primitive ambiguous ideals:
/// absolute T, intermediate norm kernel s2 + s4, relative norm kernel 2 s4.
struct AmbiguousDimensions {
    int absolute = 0;
    int intermediate_kernel = 0;
    int relative_kernel = 0;

    friend bool operator==(const AmbiguousDimensions&, const AmbiguousDimensions&) = default;
};

AmbiguousDimensions ambiguous_dimensions(const FieldInvariants& inv);

/// True when the F_5-line through v is tau-stable. Among nonzero vectors of
/// ker(N_{N/M}) exactly the lines of (1,2,4,3) and (1,3,4,2) qualify.
/// Rejects the zero vector.
bool invariant_line_check(const ExponentVector& v);

}  // namespace quintic
