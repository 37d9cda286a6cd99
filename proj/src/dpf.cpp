#include "quintic/dpf.hpp"

#include <algorithm>
#include <stdexcept>

namespace quintic {

namespace {

using enum DpfTypeName;

constexpr std::array<DpfType, kDpfTypeCount> kTypeTable = {{
    {Alpha1, 2, 1, 0, 2, false, false},
    {Alpha2, 2, 1, 1, 1, false, false},
    {Alpha3, 2, 1, 2, 0, false, false},
    {Beta1, 2, 2, 0, 1, false, false},
    {Beta2, 2, 2, 1, 0, false, false},
    {Gamma, 2, 3, 0, 0, false, false},
    {Delta1, 1, 1, 0, 1, true, false},
    {Delta2, 1, 1, 1, 0, true, false},
    {Epsilon, 1, 2, 0, 0, true, false},
    {Zeta1, 1, 1, 0, 1, false, true},
    {Zeta2, 1, 1, 1, 0, false, true},
    {Eta, 1, 2, 0, 0, false, true},
    {Theta, 0, 1, 0, 0, true, true},
}};

constexpr std::array<std::string_view, kDpfTypeCount> kAscii = {
    "a1", "a2", "a3", "b1", "b2", "g", "d1", "d2", "e", "z1", "z2", "eta", "th"};

constexpr std::array<std::string_view, kDpfTypeCount> kUnicode = {
    "α₁", "α₂", "α₃", "β₁", "β₂", "γ", "δ₁", "δ₂", "ε", "ζ₁", "ζ₂", "η", "ϑ"};

}  // namespace

const std::array<DpfType, kDpfTypeCount>& type_table() { return kTypeTable; }

const DpfType& type_info(DpfTypeName name) {
    return kTypeTable[static_cast<std::size_t>(name)];
}

std::string_view ascii_name(DpfTypeName name) { return kAscii[static_cast<std::size_t>(name)]; }
std::string_view unicode_name(DpfTypeName name) { return kUnicode[static_cast<std::size_t>(name)]; }

std::optional<DpfTypeName> parse_type_name(std::string_view text) {
    for (std::size_t i = 0; i < kAscii.size(); ++i)
        if (kAscii[i] == text || kUnicode[i] == text) return static_cast<DpfTypeName>(i);
    return std::nullopt;
}

std::string_view rule_name(ConstraintRule rule) {
    switch (rule) {
        case ConstraintRule::RBound: return "R-bound";
        case ConstraintRule::IBound: return "I-bound";
        case ConstraintRule::ABound: return "A-bound";
        case ConstraintRule::ZetaNorm: return "zeta-norm";
        case ConstraintRule::PrimeRadicand: return "prime-radicand";
        case ConstraintRule::GammaEpsilon: return "gamma-epsilon";
    }
    return "?";
}

bool TypeConstraintResult::contains(DpfTypeName name) const {
    return std::find(admissible.begin(), admissible.end(), name) != admissible.end();
}

bool prime_radicand_epsilon_case(const Radicand& d) {
    if (d.factorization.size() != 1 || d.factorization.factors()[0].exponent != 1) return false;
    ResidueClass rc = residue_class(d.value);
    return rc.pm_two_mod5() && rc.mod25 != 7 && rc.mod25 != 18;
}

bool prime_radicand_theta_case(const Radicand& d) {
    if (d.factorization.size() != 1 || d.factorization.factors()[0].exponent != 1) return false;
    ResidueClass rc = residue_class(d.value);
    return rc.is_five() || rc.mod25 == 7 || rc.mod25 == 18;
}

bool gamma_epsilon_hypotheses(const Radicand& d) {
    bool has_nonfree = false;
    for (const auto& [q, e] : d.factorization.factors()) {
        ResidueClass rc = residue_class(q);
        if (rc.split_mod5()) return false;
        if (!rc.is_five() && rc.mod25 != 7 && rc.mod25 != 18) has_nonfree = true;
    }
    return has_nonfree;
}

namespace {

bool conductor_is_free(const Factorization& f4) {
    for (const auto& [q, e] : f4.factors()) {
        if (q == 5) continue;
        if (!residue_class(q).free_mod25()) return false;
    }
    return true;
}

// Whether `rule` allows `type` under the given invariants.
bool rule_admits(ConstraintRule rule, const DpfType& type, const FieldInvariants& inv) {
    switch (rule) {
        case ConstraintRule::RBound:
            return type.R <= std::min(2, 2 * inv.s4);
        case ConstraintRule::IBound:
            return type.I <= std::min(2, inv.s2 + inv.s4);
        case ConstraintRule::ABound:
            return type.A <= std::min(3, inv.T);
        case ConstraintRule::ZetaNorm:
            return !type.zeta_norm || conductor_is_free(inv.f4);
        case ConstraintRule::PrimeRadicand:
            if (prime_radicand_epsilon_case(inv.D)) return type.name == Epsilon;
            if (prime_radicand_theta_case(inv.D)) return type.name == Theta;
            return true;
        case ConstraintRule::GammaEpsilon:
            if (gamma_epsilon_hypotheses(inv.D))
                return type.name == Gamma || type.name == Epsilon;
            return true;
    }
    return true;
}

}  // namespace

TypeConstraintResult admissible_types(const FieldInvariants& inv) {
    return admissible_types(inv, kDefaultRuleOrder);
}

TypeConstraintResult admissible_types(const FieldInvariants& inv,
                                      std::span<const ConstraintRule> rule_order) {
    TypeConstraintResult result;
    for (const DpfType& type : kTypeTable) {
        bool admitted = true;
        for (ConstraintRule rule : rule_order) {
            if (!rule_admits(rule, type, inv)) {
                result.reasons.push_back({type.name, rule});
                admitted = false;
                break;
            }
        }
        if (admitted) result.admissible.push_back(type.name);
    }
    return result;
}

bool polya_decision(const DpfType& type, int T) {
    if (T < 1) throw std::invalid_argument("polya_decision requires T >= 1");
    return type.A == T;
}

Pattern eligibility_pattern(const FieldInvariants& inv, std::optional<DpfTypeName> recorded) {
    Pattern pattern{Mark::None, Mark::None, Mark::None, Mark::None};

    bool conductor_has_split = false;
    bool conductor_has_plain = false;  // a prime != 5 of f outside +-7 (mod 25)
    for (const auto& [q, e] : inv.f4.factors()) {
        if (q == 5) continue;
        ResidueClass rc = residue_class(q);
        if (rc.split_mod5()) conductor_has_split = true;
        if (rc.mod25 != 7 && rc.mod25 != 18) conductor_has_plain = true;
    }
    bool has_minus = false, has_plus = false, all_free = true;
    for (const auto& [q, e] : inv.D.factorization.factors()) {
        ResidueClass rc = residue_class(q);
        if (rc.minus_one_mod5()) has_minus = true;
        if (rc.plus_one_mod5()) has_plus = true;
        if (!rc.is_five() && !rc.free_mod25()) all_free = false;
    }

    if (!conductor_has_split && conductor_has_plain) pattern[0] = Mark::Cross;
    if (has_minus) pattern[1] = Mark::Cross;
    if (has_plus) pattern[2] = Mark::Cross;
    if (all_free) pattern[3] = Mark::Cross;

    if (recorded) {
        const DpfType& type = type_info(*recorded);
        if (pattern[1] == Mark::Cross && type.I >= 1) pattern[1] = Mark::CircledCross;
        if (pattern[2] == Mark::Cross) {
            if (type.R >= 1)
                pattern[2] = Mark::CircledCross;
            else if (type.I >= 1)
                pattern[2] = Mark::PartialCross;
        }
        if (pattern[3] == Mark::Cross && type.zeta_norm) pattern[3] = Mark::CircledCross;
    }
    return pattern;
}

std::string to_string(const Pattern& pattern, bool unicode) {
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i > 0) out += ',';
        switch (pattern[i]) {
            case Mark::None: out += unicode ? "−" : "-"; break;
            case Mark::Cross: out += unicode ? "×" : "x"; break;
            case Mark::PartialCross: out += unicode ? "(×)" : "(x)"; break;
            case Mark::CircledCross: out += unicode ? "⊗" : "ox"; break;
        }
    }
    return out;
}

std::optional<Pattern> parse_pattern(std::string_view text) {
    Pattern pattern{};
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        std::size_t next = text.find(',', pos);
        bool last = (i == 3);
        if (last != (next == std::string_view::npos)) return std::nullopt;
        std::string_view token = text.substr(pos, last ? next : next - pos);
        if (token == "-")
            pattern[i] = Mark::None;
        else if (token == "x")
            pattern[i] = Mark::Cross;
        else if (token == "(x)")
            pattern[i] = Mark::PartialCross;
        else if (token == "ox")
            pattern[i] = Mark::CircledCross;
        else
            return std::nullopt;
        pos = next + 1;
    }
    return pattern;
}

}  // namespace quintic
