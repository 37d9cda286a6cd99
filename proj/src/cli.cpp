#include "quintic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>

#include "quintic/algebra.hpp"
#include "quintic/dataset.hpp"
#include "quintic/multiplicity.hpp"
#include "quintic/relations.hpp"
#include "quintic/verify.hpp"

namespace quintic {

namespace {

std::string type_name_str(DpfTypeName t, bool unicode) {
    return std::string(unicode ? unicode_name(t) : ascii_name(t));
}

int run_classify(std::int64_t input, bool as_json, bool unicode, std::ostream& out) {
    Radicand raw = make_radicand(input);
    NormalizedRadicand norm = normalize(raw);
    const Radicand& d = norm.radicand;
    FieldInvariants inv = field_invariants(d);
    std::int64_t m = multiplicity(d);
    TypeConstraintResult types = admissible_types(inv);

    if (as_json) {
        nlohmann::json counters = {
            {"T", inv.T}, {"t", inv.t}, {"u", inv.u},   {"v", inv.v},
            {"n", inv.n}, {"s2", inv.s2}, {"s4", inv.s4}, {"m", m},
        };
        nlohmann::json polya = nlohmann::json::object();
        nlohmann::json admissible = nlohmann::json::array();
        for (DpfTypeName t : types.admissible) {
            admissible.push_back(std::string(ascii_name(t)));
            polya[std::string(ascii_name(t))] = polya_decision(type_info(t), inv.T);
        }
        nlohmann::json doc = {
            {"normalized", d.value},
            {"species", std::string(to_string(inv.species.tag))},
            {"f4", to_conductor_string(inv.f4)},
            {"counters", counters},
            {"admissible_types", admissible},
            {"polya", polya},
        };
        out << doc.dump(2) << '\n';
        return 0;
    }

    out << "D: " << input;
    if (d.value == input)
        out << " (normalized)";
    else
        out << " -> normalized " << d.value << " (orbit index " << norm.index << ")";
    out << '\n';
    out << "species: " << to_string(inv.species.tag) << '\n';
    out << "f4: " << to_conductor_string(inv.f4) << '\n';
    out << "dL: " << to_conductor_string(inv.disc.dL) << '\n';
    out << "dM: " << to_conductor_string(inv.disc.dM) << '\n';
    out << "dN: " << to_conductor_string(inv.disc.dN) << '\n';
    out << "counters: T=" << inv.T << " t=" << inv.t << " u=" << inv.u << " v=" << inv.v
        << " n=" << inv.n << " s2=" << inv.s2 << " s4=" << inv.s4 << '\n';
    RefinedSpecies rs{inv.species.e0, inv.t, inv.u, inv.v, m, inv.n, inv.s2, inv.s4};
    out << "refined species: (" << rs.e0 << "; " << rs.t << "," << rs.u << "," << rs.v << ","
        << rs.m << "; " << rs.n << "," << rs.s2 << "," << rs.s4 << ")\n";
    out << "multiplicity: " << m << '\n';
    out << "admissible:";
    for (DpfTypeName t : types.admissible) out << ' ' << type_name_str(t, unicode);
    out << '\n';
    out << "polya:";
    for (DpfTypeName t : types.admissible)
        out << ' ' << type_name_str(t, unicode) << '='
            << (polya_decision(type_info(t), inv.T) ? "yes" : "no");
    out << '\n';
    out << "pattern: " << to_string(eligibility_pattern(inv), unicode) << '\n';
    for (const FieldRecord& rec : embedded_dataset()) {
        if (rec.D != d.value) continue;
        out << "recorded type: " << type_name_str(rec.dpf_type, unicode) << " (dataset row "
            << rec.row_no << ")";
        if (types.contains(rec.dpf_type)) out << " recorded-type-compatible";
        out << '\n';
        out << "recorded pattern: " << to_string(eligibility_pattern(inv, rec.dpf_type), unicode)
            << '\n';
        break;
    }
    return 0;
}

int run_table(std::int64_t max, bool tsv, bool unicode, std::ostream& out) {
    std::vector<Radicand> radicands = enumerate_normalized(max);
    if (tsv) {
        out << "no\tD\tspecies\tf4\tm\tVL\tVM\tVN\tE\tpattern\ttype\tpf\tproto\n";
    } else {
        out << "   no      D  S            f4    m   T t u v n s2 s4  pattern    admissible\n";
    }
    int row = 0;
    for (const Radicand& d : radicands) {
        ++row;
        FieldInvariants inv = field_invariants(d);
        std::int64_t m = multiplicity(d);
        Pattern pattern = eligibility_pattern(inv);
        if (tsv) {
            out << row << '\t' << d.value << '\t' << to_string(inv.species.tag) << '\t'
                << to_conductor_string(inv.f4) << '\t' << m << "\t\t\t\t\t"
                << to_string(pattern) << "\t\t\t\n";
            continue;
        }
        TypeConstraintResult types = admissible_types(inv);
        std::string type_list;
        for (DpfTypeName t : types.admissible) {
            if (!type_list.empty()) type_list += ' ';
            type_list += type_name_str(t, unicode);
        }
        char line[128];
        std::snprintf(line, sizeof line, "%5d %6lld  %-2s %13s %4lld   %d %d %d %d %d %2d %2d  %-9s  ",
                      row, static_cast<long long>(d.value),
                      std::string(to_string(inv.species.tag)).c_str(),
                      to_conductor_string(inv.f4).c_str(), static_cast<long long>(m), inv.T,
                      inv.t, inv.u, inv.v, inv.n, inv.s2, inv.s4,
                      to_string(pattern, unicode).c_str());
        out << line << type_list << '\n';
    }
    return 0;
}

int run_verify(const std::string& path, std::ostream& out) {
    std::vector<FieldRecord> records = path.empty() ? embedded_dataset() : load_dataset_file(path);
    auto start = std::chrono::steady_clock::now();
    VerificationReport report = verify_dataset(records);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    out << format_report(report);
    out << "elapsed: " << elapsed.count() << " s\n";
    return report.failures == 0 ? 0 : 1;
}

int run_stats(std::int64_t max, bool unicode, std::ostream& out) {
    auto counts = type_frequencies(embedded_dataset(), max);
    int total = 0;
    out << "type  count (D < " << max << ")\n";
    for (const DpfType& t : type_table()) {
        out << "  " << type_name_str(t.name, unicode) << '\t' << counts[t.name] << '\n';
        total += counts[t.name];
    }
    out << "total\t" << total << '\n';
    return 0;
}

int run_density(int t, std::ostream& out) {
    out << to_string(zeta_norm_density(t)) << '\n';
    return 0;
}

int run_algebra_selftest(std::ostream& out) {
    int failures = 0;
    auto expect = [&](bool ok, const std::string& what) {
        out << (ok ? "ok" : "FAIL") << "  " << what << '\n';
        if (!ok) ++failures;
    };
    for (int p : {3, 5}) {
        auto psis = idempotents(p);
        int order = (p == 5) ? 4 : 2;
        bool orthogonal = true, sum_ok = true;
        GroupRingElement sum{p, std::vector<int>(static_cast<std::size_t>(order), 0)};
        for (std::size_t i = 0; i < psis.size(); ++i) {
            for (std::size_t j = 0; j < psis.size(); ++j) {
                GroupRingElement prod = ring_multiply(psis[i], psis[j]);
                GroupRingElement want =
                    (i == j) ? psis[i]
                             : GroupRingElement{p, std::vector<int>(static_cast<std::size_t>(order), 0)};
                if (prod != want) orthogonal = false;
            }
            for (int k = 0; k < order; ++k)
                sum.coeffs[static_cast<std::size_t>(k)] =
                    (sum.coeffs[static_cast<std::size_t>(k)] +
                     psis[i].coeffs[static_cast<std::size_t>(k)]) % p;
        }
        sum_ok = (sum == ring_identity(p, order));
        expect(orthogonal, "idempotent orthogonality over F_" + std::to_string(p));
        expect(sum_ok, "idempotent sum relation over F_" + std::to_string(p));
    }
    {
        ExponentVector v = make_exponent_vector(1, 2, 4, 3);
        expect(tau_act(v) == make_exponent_vector(3, 1, 2, 4), "tau maps (1243) to (3124)");
        expect(is_scalar_multiple(v, tau_act(v)) == std::optional<int>(3),
               "(1243) line is tau-stable with scalar 3");
        ExponentVector w = make_exponent_vector(1, 4, 1, 4);
        expect(is_scalar_multiple(w, tau_act(w)) == std::optional<int>(4),
               "(1414) maps to its inverse");
        ExponentVector u = make_exponent_vector(1, 0, 4, 0);
        expect(!is_scalar_multiple(u, tau_act(u)).has_value(),
               "(1040) maps to an independent vector");
        expect(tau_act(tau_act(tau_act(tau_act(v)))) == v, "tau^4 is the identity");
    }
    {
        // Census: tau-stable lines inside ker(N_{N/M}) among all 5^4 vectors.
        int stable_lines = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                for (int c = 0; c < 5; ++c)
                    for (int d = 0; d < 5; ++d) {
                        ExponentVector v = make_exponent_vector(a, b, c, d);
                        if (v.is_zero() || !in_norm_kernel_nm(v)) continue;
                        if (v.e[0] != 1 && !(v.e[0] == 0 && v.e[1] == 1)) continue;  // one per line
                        if (invariant_line_check(v)) ++stable_lines;
                    }
        expect(stable_lines == 2, "exactly 2 tau-stable lines in ker(N_NM)");
    }
    out << (failures == 0 ? "algebra selftest passed\n" : "algebra selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact classification of pure quintic fields Q(D^(1/5)) and their"
                 " degree-20 normal closures"};
    app.require_subcommand(1);

    bool unicode = false;
    app.add_flag("--unicode", unicode, "render Greek type names and pattern glyphs");

    auto* classify = app.add_subcommand("classify", "invariants and admissible types for one D");
    std::int64_t classify_d = 0;
    bool classify_json = false;
    classify->add_option("D", classify_d, "radicand (any integer >= 2, reduced and normalized)")
        ->required();
    classify->add_flag("--json", classify_json, "machine-readable output");

    auto* table = app.add_subcommand("table", "catalog of normalized radicands below a bound");
    std::int64_t table_max = 1000;
    bool table_tsv = false;
    table->add_option("--max", table_max, "upper bound (exclusive)")->required();
    table->add_flag("--tsv", table_tsv, "dataset-compatible TSV with derivable columns filled");

    auto* verify = app.add_subcommand("verify", "cross-check every computable dataset column");
    std::string verify_path;
    verify->add_option("--dataset", verify_path, "TSV file (default: embedded table)");

    auto* stats = app.add_subcommand("stats", "type frequencies in the embedded dataset");
    std::int64_t stats_max = 151;
    stats->add_option("--max", stats_max, "count rows with D < max");

    auto* density = app.add_subcommand("density", "exact density of free conductors with t primes");
    int density_t = 1;
    density->add_option("--t", density_t, "number of conductor primes")->required();

    auto* algebra = app.add_subcommand("algebra", "group-ring property suite");
    bool algebra_selftest = false;
    algebra->add_flag("--selftest", algebra_selftest, "run the idempotent/tau-orbit checks");

    std::vector<const char*> argv;
    argv.push_back("quintic");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (classify->parsed()) return run_classify(classify_d, classify_json, unicode, out);
        if (table->parsed()) return run_table(table_max, table_tsv, unicode, out);
        if (verify->parsed()) return run_verify(verify_path, out);
        if (stats->parsed()) return run_stats(stats_max, unicode, out);
        if (density->parsed()) return run_density(density_t, out);
        if (algebra->parsed()) {
            if (!algebra_selftest) {
                err << "algebra: nothing to do (pass --selftest)\n";
                return 2;
            }
            return run_algebra_selftest(out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace quintic
