#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quintic {

/// Exact rational, always reduced with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);
std::string to_string(const Rational& r);

/// Walter's class number relation in 5-valuations:
/// V_N = (p-1) V_L + E - (p^2 - 5)/4, exposed for p in {3, 5}.
int walter_predict_vn(int p, int v_l, int e);

/// Parry's specialization (p = 5): V_N = 4 V_L + E - 5 with 0 <= E <= 6.
/// Throws when the inputs are inconsistent (negative prediction).
int parry_predict_vn(int v_l, int e);

/// Kobayashi's relation V_M = 2 V_L + Q+ - 2 solved for the determinant
/// exponent Q+. Throws when Q+ falls outside {0, 1, 2} or when the
/// divisibility equivalence 5 | h_L <=> 5 | h_M is violated.
int kobayashi_q_plus(int v_l, int v_m);

/// Cubic analogue (Scholz): V_N = 2 V_L + Q - 1 with Q in {0, 1}, together
/// with the equivalence 3 | h_L <=> 3 | h_N.
bool scholz_check(int v_l, int v_n, int q);

/// The residues mod 25 whose primes leave the 5-part of the conductor free:
/// {1, 7, 18, 24}, recovered by enumerating U(Z/25Z).
std::vector<int> free_residues_mod25();

/// Probability that all t conductor primes fall in the free residue classes:
/// (4/20)^t = 5^-t as an exact rational. This is the density at which
/// zeta_5 can possibly be a unit norm, so the types zeta_1, zeta_2, eta,
/// theta have asymptotic density zero.
Rational zeta_norm_density(int t);

}  // namespace quintic
