#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quintic/invariants.hpp"

namespace quintic {

/// The 13 differential principal factorization (DPF) types, in display order.
enum class DpfTypeName {
    Alpha1, Alpha2, Alpha3, Beta1, Beta2, Gamma,
    Delta1, Delta2, Epsilon,
    Zeta1, Zeta2, Eta,
    Theta,
};

inline constexpr int kDpfTypeCount = 13;

/// One row of the type table. U is the 5-valuation of the unit norm index
/// (U_K : N_{N/K}(U_N)); (A, I, R) are the F_5-dimensions of the absolute,
/// intermediate and relative blocks of principal factors, with the Herbrand
/// relation U + 1 = A + I + R. eta_norm / zeta_norm record whether the
/// fundamental unit of Q(sqrt 5), resp. zeta_5, is a norm from U_N.
struct DpfType {
    DpfTypeName name;
    int U, A, I, R;
    bool eta_norm, zeta_norm;
};

const std::array<DpfType, kDpfTypeCount>& type_table();
const DpfType& type_info(DpfTypeName name);

std::string_view ascii_name(DpfTypeName name);    // a1 a2 a3 b1 b2 g d1 d2 e z1 z2 eta th
std::string_view unicode_name(DpfTypeName name);  // the Greek glyphs
std::optional<DpfTypeName> parse_type_name(std::string_view text);

/// Congruence rules of the admissible-type engine. All of them act as
/// intersections, so their order never changes the result; it is fixed only
/// to make the recorded exclusion reasons deterministic.
enum class ConstraintRule {
    RBound,         // drop R > min(2, 2 s4)
    IBound,         // drop I > min(2, s2 + s4)
    ABound,         // drop A > min(3, T)
    ZetaNorm,       // zeta_5 can be a unit norm only for free conductors
    PrimeRadicand,  // prime D forces epsilon or theta in two residue cases
    GammaEpsilon,   // no split primes + a non-free prime leaves {gamma, epsilon}
};

std::string_view rule_name(ConstraintRule rule);

struct TypeConstraintResult {
    std::vector<DpfTypeName> admissible;  // in display order
    struct Exclusion {
        DpfTypeName type;
        ConstraintRule rule;
    };
    std::vector<Exclusion> reasons;  // first rule that excluded each dropped type

    bool contains(DpfTypeName name) const;
};

inline constexpr std::array<ConstraintRule, 6> kDefaultRuleOrder = {
    ConstraintRule::RBound,       ConstraintRule::IBound,        ConstraintRule::ABound,
    ConstraintRule::ZetaNorm,     ConstraintRule::PrimeRadicand, ConstraintRule::GammaEpsilon,
};

TypeConstraintResult admissible_types(const FieldInvariants& inv);
TypeConstraintResult admissible_types(const FieldInvariants& inv,
                                      std::span<const ConstraintRule> rule_order);

/// Hypotheses of the two shortcut criteria, exposed for the harness.
/// Prime radicand dichotomy: q = +-2 (mod 5) and not +-7 (mod 25) forces
/// epsilon; q = 5 or q = +-7 (mod 25) forces theta.
bool prime_radicand_epsilon_case(const Radicand& d);
bool prime_radicand_theta_case(const Radicand& d);
/// gamma/epsilon dichotomy: no prime of D splits (q != +-1 mod 5) and some
/// prime other than 5 is not +-7 (mod 25).
bool gamma_epsilon_hypotheses(const Radicand& d);

/// Polya property of N, decided by A = T: every ramified prime admits a
/// principal factor exactly when the absolute block fills all of
/// I_{L/Q}/I_Q. T >= 1.
bool polya_decision(const DpfType& type, int T);

/// The four-symbol eligibility pattern printed as the quartet (1, 2, 4, 5).
enum class Mark { None, Cross, PartialCross, CircledCross };  // -, x, (x), ox

using Pattern = std::array<Mark, 4>;

/// Base marks depend on congruences alone:
///   1: no conductor prime splits and some prime != 5 of f is not +-7 (25)
///   2: some prime = -1 (mod 5) divides D
///   4: some prime = +1 (mod 5) divides D
///   5: every prime of D is free or equals 5
/// With a recorded type the marks are refined: component 5 becomes ox when
/// the type has the zeta norm; component 2 becomes ox when I >= 1; component
/// 4 becomes ox when R >= 1 and (x) when R = 0 but I >= 1. The refinement
/// rules are calibrated against the embedded dataset.
Pattern eligibility_pattern(const FieldInvariants& inv,
                            std::optional<DpfTypeName> recorded = std::nullopt);

std::string to_string(const Pattern& pattern, bool unicode = false);
std::optional<Pattern> parse_pattern(std::string_view text);

}  // namespace quintic
