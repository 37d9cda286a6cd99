#include "quintic/verify.hpp"

#include <sstream>

#include "quintic/multiplicity.hpp"
#include "quintic/relations.hpp"

namespace quintic {

namespace {

// Polya verdicts stated alongside the prime-conductor case studies, D < 1000.
// Splitting prime radicands with l = -1 (mod 25): always Polya, type delta_2.
constexpr std::int64_t kSplitMinus25[] = {149, 199, 349, 449, 499, 599};
// l = +1 (mod 25): always Polya, three realized types.
constexpr std::int64_t kSplitPlus25Alpha1[] = {401, 701};
constexpr std::int64_t kSplitPlus25Alpha2[] = {151, 251, 601};
constexpr std::int64_t kSplitPlus25Zeta1[] = {101};
// l = -1 (mod 5) but not (mod 25): composite conductor 5^2 l^4.
constexpr std::int64_t kCmpMinusDelta2[] = {19,  29,  59,  79,  89,  109, 179, 229, 239,
                                            269, 389, 409, 439, 479, 509, 569, 619, 659,
                                            709, 719, 739, 769, 809, 839, 859, 919, 929};
constexpr std::int64_t kCmpMinusBeta2[] = {139, 359, 419, 829};
constexpr std::int64_t kCmpMinusEpsilon[] = {379};
// l = +1 (mod 5) but not (mod 25).
constexpr std::int64_t kCmpPlusAlpha1[] = {31, 281, 761};
constexpr std::int64_t kCmpPlusAlpha2[] = {11,  41,  61,  71,  131, 181, 241, 311, 331, 431, 491,
                                           541, 571, 631, 661, 691, 811, 821, 911, 941, 971};
constexpr std::int64_t kCmpPlusBeta1[] = {191, 271, 641};
constexpr std::int64_t kCmpPlusDelta1[] = {211, 421, 461, 521, 881, 991};
// Two-split-prime radicands of type alpha_3 (I = 2): never Polya.
constexpr std::int64_t kAlpha3[] = {319, 551, 589, 627, 649, 869, 899, 957};

}  // namespace

const std::vector<PolyaAnnotation>& polya_annotations() {
    static const std::vector<PolyaAnnotation> annotations = [] {
        std::vector<PolyaAnnotation> out;
        auto add = [&out](auto& list, DpfTypeName type, bool polya) {
            for (std::int64_t d : list) out.push_back({d, type, polya});
        };
        add(kSplitMinus25, DpfTypeName::Delta2, true);
        add(kSplitPlus25Alpha1, DpfTypeName::Alpha1, true);
        add(kSplitPlus25Alpha2, DpfTypeName::Alpha2, true);
        add(kSplitPlus25Zeta1, DpfTypeName::Zeta1, true);
        add(kCmpMinusDelta2, DpfTypeName::Delta2, false);
        add(kCmpMinusBeta2, DpfTypeName::Beta2, true);
        add(kCmpMinusEpsilon, DpfTypeName::Epsilon, true);
        add(kCmpPlusAlpha1, DpfTypeName::Alpha1, false);
        add(kCmpPlusAlpha2, DpfTypeName::Alpha2, false);
        add(kCmpPlusBeta1, DpfTypeName::Beta1, true);
        add(kCmpPlusDelta1, DpfTypeName::Delta1, false);
        add(kAlpha3, DpfTypeName::Alpha3, false);
        // Prime radicands in the epsilon/theta residue cases are Polya fields.
        for (std::int64_t q = 2; q < 1000; ++q) {
            if (!is_prime(q)) continue;
            Radicand d = make_radicand(q);
            if (prime_radicand_epsilon_case(d)) out.push_back({q, DpfTypeName::Epsilon, true});
            if (prime_radicand_theta_case(d)) out.push_back({q, DpfTypeName::Theta, true});
        }
        return out;
    }();
    return annotations;
}

std::optional<PolyaAnnotation> polya_annotation_for(std::int64_t D) {
    for (const PolyaAnnotation& a : polya_annotations())
        if (a.D == D) return a;
    return std::nullopt;
}

const std::vector<std::string>& verification_check_names() {
    static const std::vector<std::string> names = {
        "species",  "conductor", "multiplicity", "parry",       "kobayashi",
        "type-membership", "pattern", "polya",   "vn-zero-unit-index", "e-nonzero",
    };
    return names;
}

std::vector<CheckResult> VerificationReport::failed() const {
    std::vector<CheckResult> out;
    for (const CheckResult& r : results)
        if (!r.pass) out.push_back(r);
    return out;
}

VerificationReport verify_dataset(const std::vector<FieldRecord>& records) {
    VerificationReport report;
    report.rows = static_cast<int>(records.size());
    report.checks_per_row = static_cast<int>(verification_check_names().size());
    for (const FieldRecord& rec : records) {
        auto check = [&](const std::string& name, bool pass, std::string expected,
                         std::string computed) {
            report.results.push_back(
                {rec.row_no, rec.D, name, pass, std::move(expected), std::move(computed)});
            if (!pass) ++report.failures;
        };
        Radicand d = make_radicand(rec.D);
        FieldInvariants inv = field_invariants(d);

        check("species", inv.species.tag == rec.species, std::string(to_string(rec.species)),
              std::string(to_string(inv.species.tag)));
        check("conductor", inv.f4 == rec.f4, to_conductor_string(rec.f4),
              to_conductor_string(inv.f4));

        std::int64_t m = multiplicity(d);
        std::int64_t m_oracle = multiplicity_bruteforce(inv.f4);
        bool m_ok = (m == rec.m) && (m_oracle == rec.m);
        check("multiplicity", m_ok, std::to_string(rec.m),
              std::to_string(m) + " (oracle " + std::to_string(m_oracle) + ")");

        std::string parry_computed;
        bool parry_ok = false;
        try {
            int vn = parry_predict_vn(rec.V_L, rec.E);
            parry_ok = (vn == rec.V_N);
            parry_computed = std::to_string(vn);
        } catch (const std::exception& e) {
            parry_computed = e.what();
        }
        check("parry", parry_ok, std::to_string(rec.V_N), parry_computed);

        std::string kob_computed;
        bool kob_ok = false;
        try {
            int q_plus = kobayashi_q_plus(rec.V_L, rec.V_M);
            kob_ok = true;
            kob_computed = "Q+ = " + std::to_string(q_plus);
        } catch (const std::exception& e) {
            kob_computed = e.what();
        }
        check("kobayashi", kob_ok, "Q+ in {0,1,2}", kob_computed);

        TypeConstraintResult types = admissible_types(inv);
        std::string admissible_str;
        for (DpfTypeName t : types.admissible) {
            if (!admissible_str.empty()) admissible_str += ' ';
            admissible_str += ascii_name(t);
        }
        check("type-membership", types.contains(rec.dpf_type),
              std::string(ascii_name(rec.dpf_type)) + " in admissible set",
              "admissible: " + admissible_str);

        Pattern pattern = eligibility_pattern(inv, rec.dpf_type);
        check("pattern", pattern == rec.pattern, to_string(rec.pattern), to_string(pattern));

        if (auto annotation = polya_annotation_for(rec.D)) {
            bool predicted = polya_decision(type_info(rec.dpf_type), inv.T);
            bool type_match = annotation->type == rec.dpf_type;
            check("polya", type_match && predicted == annotation->polya,
                  std::string(annotation->polya ? "polya" : "non-polya") + " of type " +
                      std::string(ascii_name(annotation->type)),
                  std::string(predicted ? "polya" : "non-polya") + " of type " +
                      std::string(ascii_name(rec.dpf_type)));
        } else {
            check("polya", true, "no annotation", "-");
        }

        bool unit_ok = rec.V_N != 0 ||
                       (rec.E == 5 && (rec.dpf_type == DpfTypeName::Epsilon ||
                                       rec.dpf_type == DpfTypeName::Theta));
        check("vn-zero-unit-index", unit_ok, "V_N = 0 => E = 5 and type in {e, th}",
              "E = " + std::to_string(rec.E) + ", type " + std::string(ascii_name(rec.dpf_type)));

        check("e-nonzero", rec.E != 0, "E >= 1", "E = " + std::to_string(rec.E));
    }
    return report;
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream out;
    for (const CheckResult& r : report.results) {
        if (r.pass) continue;
        out << "FAIL row " << r.row_no << " (D = " << r.D << ") " << r.check
            << ": expected " << r.expected << ", computed " << r.computed << '\n';
    }
    out << report.rows << " rows, " << report.rows * report.checks_per_row << " checks, "
        << report.failures << " failure" << (report.failures == 1 ? "" : "s") << '\n';
    return out.str();
}

}  // namespace quintic
