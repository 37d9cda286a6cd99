#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "quintic/cli.hpp"
#include "quintic/dataset.hpp"

using namespace quintic;

namespace {

struct CliOutcome {
    int exit_code;
    std::string out;
    std::string err;
};

CliOutcome run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("classify prints admissible types and dataset compatibility") {
    CliOutcome r = run({"classify", "11"});
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "admissible: a1 a2 b1 b2 d1 d2 e"));
    CHECK(contains(r.out, "recorded-type-compatible"));
    CHECK(contains(r.out, "species: 1b"));
    CHECK(contains(r.out, "f4: 5^2*11^4"));
    CHECK(contains(r.out, "multiplicity: 1"));
}

TEST_CASE("classify normalizes its input") {
    CliOutcome r = run({"classify", "8"});
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "normalized 2"));
    CHECK(contains(r.out, "admissible: e"));
}

TEST_CASE("classify json schema") {
    CliOutcome r = run({"classify", "11", "--json"});
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["normalized"] == 11);
    CHECK(doc["species"] == "1b");
    CHECK(doc["f4"] == "5^2*11^4");
    CHECK(doc["counters"]["T"] == 2);
    CHECK(doc["counters"]["s4"] == 1);
    CHECK(doc["counters"]["m"] == 1);
    CHECK(doc["admissible_types"] ==
          nlohmann::json::array({"a1", "a2", "b1", "b2", "d1", "d2", "e"}));
    CHECK(doc["polya"]["b1"] == true);
    CHECK(doc["polya"]["a1"] == false);
    // schema is exactly these six keys
    std::set<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.insert(it.key());
    CHECK(keys == std::set<std::string>{"normalized", "species", "f4", "counters",
                                        "admissible_types", "polya"});
}

TEST_CASE("verify exits cleanly on the embedded dataset") {
    CliOutcome r = run({"verify"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "125 rows, 1250 checks, 0 failures"));
}

TEST_CASE("verify flags a corrupted dataset file with exit code 1") {
    std::vector<FieldRecord> records = embedded_dataset();
    records[0].m = 2;  // row 1 has m = 1
    const std::string path = "cli_test_dataset.tsv";
    {
        std::ofstream out(path, std::ios::binary);
        out << to_tsv(records);
    }
    CliOutcome r = run({"verify", "--dataset", path});
    std::remove(path.c_str());
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "FAIL row 1"));
    CHECK(contains(r.out, "multiplicity"));
    CHECK(contains(r.out, "1 failure"));
}

TEST_CASE("verify rejects an unreadable dataset path as a usage error") {
    CliOutcome r = run({"verify", "--dataset", "no_such_file.tsv"});
    CHECK(r.exit_code == 2);
}

TEST_CASE("density prints exact rationals") {
    CHECK(run({"density", "--t", "2"}).out == "1/25\n");
    CHECK(run({"density", "--t", "1"}).out == "1/5\n");
    CHECK(run({"density", "--t", "6"}).out == "1/15625\n");
}

TEST_CASE("stats reproduces the frequency column") {
    CliOutcome r = run({"stats", "--max", "100"});
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "a2\t10"));
    CHECK(contains(r.out, "g\t25"));
    CHECK(contains(r.out, "e\t26"));
    CHECK(contains(r.out, "total\t81"));
}

TEST_CASE("table emits one row per normalized radicand") {
    CliOutcome r = run({"table", "--max", "50", "--tsv"});
    REQUIRE(r.exit_code == 0);
    CHECK(count_lines(r.out) == 39);  // header + 38 rows

    CliOutcome full = run({"table", "--max", "1000", "--tsv"});
    REQUIRE(full.exit_code == 0);
    CHECK(count_lines(full.out) == 901);  // header + 900 rows
}

TEST_CASE("algebra selftest passes") {
    CliOutcome r = run({"algebra", "--selftest"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "algebra selftest passed"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"classify"}).exit_code == 2);       // missing D
    CHECK(run({"classify", "zzz"}).exit_code == 2);
    CHECK(run({"classify", "1"}).exit_code == 2);  // out of domain
    CHECK(run({"density"}).exit_code == 2);
    CHECK(run({"algebra"}).exit_code == 2);
}

TEST_CASE("unicode flag renders greek names") {
    CliOutcome r = run({"--unicode", "classify", "11"});
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "α₁"));
    CHECK(contains(r.out, "ε"));
}

TEST_CASE("help exits zero") {
    CHECK(run({"--help"}).exit_code == 0);
}
