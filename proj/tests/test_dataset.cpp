#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "quintic/verify.hpp"

using namespace quintic;

TEST_CASE("embedded dataset shape") {
    const auto& records = embedded_dataset();
    REQUIRE(records.size() == 125);
    for (std::size_t i = 0; i < records.size(); ++i)
        REQUIRE(records[i].row_no == static_cast<int>(i) + 1);
    // ascending, normalized radicands
    for (std::size_t i = 1; i < records.size(); ++i) REQUIRE(records[i - 1].D < records[i].D);
    CHECK(records.front().D == 2);
    CHECK(records.back().D == 150);
    // the three catalogued ranges
    auto count_range = [&records](std::int64_t lo, std::int64_t hi) {
        int n = 0;
        for (const auto& r : records)
            if (r.D > lo && r.D <= hi) ++n;
        return n;
    };
    CHECK(count_range(0, 49) == 38);
    CHECK(count_range(50, 99) == 43);
    CHECK(count_range(100, 150) == 44);
}

TEST_CASE("reference rows") {
    const auto& records = embedded_dataset();
    const FieldRecord& row1 = records[0];
    CHECK(row1.D == 2);
    CHECK(row1.species == SpeciesTag::S1b);
    CHECK(row1.f4 == Factorization::parse("5^2*2^4"));
    CHECK(row1.m == 1);
    CHECK(row1.V_L == 0);
    CHECK(row1.V_M == 0);
    CHECK(row1.V_N == 0);
    CHECK(row1.E == 5);
    CHECK(to_string(row1.pattern) == "x,-,-,-");
    CHECK(row1.dpf_type == DpfTypeName::Epsilon);
    CHECK(row1.prototype_flag);

    const FieldRecord& row82 = records[81];
    CHECK(row82.D == 101);
    CHECK(row82.species == SpeciesTag::S2);
    CHECK(row82.f4 == Factorization::parse("101^4"));
    CHECK(row82.m == 1);
    CHECK(row82.V_L == 1);
    CHECK(row82.V_M == 2);
    CHECK(row82.V_N == 4);
    CHECK(row82.E == 5);
    CHECK(to_string(row82.pattern) == "-,-,ox,ox");
    CHECK(row82.dpf_type == DpfTypeName::Zeta1);

    const FieldRecord& row124 = records[123];
    CHECK(row124.D == 149);
    CHECK(row124.species == SpeciesTag::S2);
    CHECK(row124.f4 == Factorization::parse("149^4"));
    CHECK(row124.V_L == 1);
    CHECK(row124.V_M == 1);
    CHECK(row124.V_N == 2);
    CHECK(row124.E == 3);
    CHECK(to_string(row124.pattern) == "-,ox,-,x");
    CHECK(row124.dpf_type == DpfTypeName::Delta2);
}

TEST_CASE("tsv round trip is byte identical") {
    std::string exported = to_tsv(embedded_dataset());
    std::istringstream in(exported);
    std::vector<FieldRecord> reloaded = load_dataset(in);
    REQUIRE(reloaded == embedded_dataset());
    CHECK(to_tsv(reloaded) == exported);
}

TEST_CASE("loader reports line-precise errors") {
    auto load_str = [](const std::string& text) {
        std::istringstream in(text);
        return load_dataset(in);
    };
    const std::string header = "no\tD\tspecies\tf4\tm\tVL\tVM\tVN\tE\tpattern\ttype\tpf\tproto\n";
    CHECK_THROWS_WITH_AS(load_str(""), "dataset: missing header row", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        load_str(header + "1\t2\t1b\t5^2*4^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t1\n"),
        "dataset line 2: factorization base 4 is not prime", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        load_str(header + "1\t2\t1b\t5^2*2^4\t1\t0\t0\t0\t5\tx,-,-,-\tq9\t\t1\n"),
        "dataset line 2: unknown type name 'q9'", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        load_str(header + "1\t4\t1b\t5^2*2^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t1\n"),
        "dataset line 2: radicand is not normalized", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        load_str(header + "1\t2\t1c\t5^2*2^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t1\n"),
        "dataset line 2: unknown species '1c'", std::runtime_error);
    // comments and blank lines are fine
    CHECK(load_str("# comment\n" + header + "\n# more\n1\t2\t1b\t5^2*2^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t1\n")
              .size() == 1);
}

TEST_CASE("verification harness is clean on the embedded data") {
    VerificationReport report = verify_dataset(embedded_dataset());
    CHECK(report.rows == 125);
    CHECK(report.checks_per_row == 10);
    CHECK(report.results.size() == 1250);
    for (const CheckResult& r : report.failed()) {
        CAPTURE(r.row_no);
        CAPTURE(r.check);
        CAPTURE(r.expected);
        CAPTURE(r.computed);
        FAIL_CHECK("unexpected verification failure");
    }
    CHECK(report.failures == 0);
}

TEST_CASE("mutating E in one row breaks exactly the Parry identity") {
    std::vector<FieldRecord> records = embedded_dataset();
    REQUIRE(records[6].D == 11);
    records[6].E = 4;  // was 3
    VerificationReport report = verify_dataset(records);
    REQUIRE(report.failures == 1);
    CHECK(report.failed()[0].check == "parry");
    CHECK(report.failed()[0].row_no == 7);
}

TEST_CASE("mutating a recorded type is caught by the constraint engine") {
    std::vector<FieldRecord> records = embedded_dataset();
    REQUIRE(records[3].D == 6);
    records[3].dpf_type = DpfTypeName::Theta;  // was gamma
    VerificationReport report = verify_dataset(records);
    REQUIRE(report.failures >= 1);
    bool membership_failed = false;
    for (const CheckResult& r : report.failed())
        if (r.row_no == 4 && r.check == "type-membership") membership_failed = true;
    CHECK(membership_failed);
}

TEST_CASE("type frequencies against the statistics table") {
    auto counts = type_frequencies(embedded_dataset(), 100);
    CHECK(counts[DpfTypeName::Alpha1] == 1);
    CHECK(counts[DpfTypeName::Alpha2] == 10);
    CHECK(counts[DpfTypeName::Alpha3] == 0);
    CHECK(counts[DpfTypeName::Beta1] == 0);
    CHECK(counts[DpfTypeName::Beta2] == 7);
    CHECK(counts[DpfTypeName::Gamma] == 25);
    CHECK(counts[DpfTypeName::Delta1] == 0);
    CHECK(counts[DpfTypeName::Delta2] == 8);
    CHECK(counts[DpfTypeName::Epsilon] == 26);
    CHECK(counts[DpfTypeName::Zeta1] == 0);
    CHECK(counts[DpfTypeName::Zeta2] == 0);
    CHECK(counts[DpfTypeName::Eta] == 1);
    CHECK(counts[DpfTypeName::Theta] == 3);
    int total = 0;
    for (const auto& [t, n] : counts) total += n;
    CHECK(total == 81);

    auto below50 = type_frequencies(embedded_dataset(), 50);
    int total50 = 0;
    for (const auto& [t, n] : below50) total50 += n;
    CHECK(total50 == 38);

    auto none = type_frequencies(embedded_dataset(), 2);
    for (const auto& [t, n] : none) CHECK(n == 0);
}

TEST_CASE("polya annotations are consistent with the dataset") {
    for (const FieldRecord& rec : embedded_dataset()) {
        auto a = polya_annotation_for(rec.D);
        if (!a) continue;
        CHECK(a->type == rec.dpf_type);
    }
}
