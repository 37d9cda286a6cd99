#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quintic/dataset.hpp"
#include "quintic/invariants.hpp"

using namespace quintic;

TEST_CASE("species classification") {
    CHECK(species_of(make_radicand(2)).tag == SpeciesTag::S1b);
    CHECK(species_of(make_radicand(2)).e0 == 2);
    CHECK(species_of(make_radicand(5)).tag == SpeciesTag::S1a);
    CHECK(species_of(make_radicand(5)).e0 == 6);
    CHECK(species_of(make_radicand(18)).tag == SpeciesTag::S2);  // 18 = -7 (mod 25)
    CHECK(species_of(make_radicand(18)).e0 == 0);
    CHECK(species_of(make_radicand(7)).tag == SpeciesTag::S2);
    CHECK(species_of(make_radicand(149)).tag == SpeciesTag::S2);  // 149 = -1 (mod 25)
}

TEST_CASE("conductor fourth powers") {
    CHECK(conductor4(make_radicand(2)) == Factorization::parse("5^2*2^4"));
    CHECK(conductor4(make_radicand(10)) == Factorization::parse("5^6*2^4"));
    CHECK(conductor4(make_radicand(7)) == Factorization::parse("7^4"));
    CHECK(conductor4(make_radicand(5)) == Factorization::parse("5^6"));
    CHECK(conductor4(make_radicand(48)) == Factorization::parse("5^2*2^4*3^4"));
}

TEST_CASE("discriminants") {
    Discriminants d7 = discriminants(make_radicand(7));
    CHECK(d7.dL == Factorization::parse("5^3*7^4"));
    CHECK(d7.dM == Factorization::parse("5^7*7^8"));
    CHECK(d7.dN == Factorization::parse("5^15*7^16"));

    Discriminants d2 = discriminants(make_radicand(2));
    CHECK(d2.dL == Factorization::parse("5^5*2^4"));
    CHECK(d2.dM == Factorization::parse("5^11*2^8"));
    CHECK(d2.dN == Factorization::parse("5^23*2^16"));

    Discriminants d5 = discriminants(make_radicand(5));
    CHECK(d5.dL == Factorization::parse("5^9"));
    CHECK(d5.dM == Factorization::parse("5^19"));
    CHECK(d5.dN == Factorization::parse("5^39"));
}

TEST_CASE("discriminant valuations at 5 and the 16th power law") {
    for (const Radicand& d : enumerate_normalized(1000)) {
        Discriminants disc = discriminants(d);
        int v5L = disc.dL.exponent_of(5);
        int v5M = disc.dM.exponent_of(5);
        int v5N = disc.dN.exponent_of(5);
        REQUIRE((v5L == 3 || v5L == 5 || v5L == 9));
        REQUIRE((v5M == 7 || v5M == 11 || v5M == 19));
        REQUIRE((v5N == 15 || v5N == 23 || v5N == 39));
        // Away from 5, d_N is the 16th power of the kernel.
        for (const auto& [q, e] : disc.dN.factors())
            if (q != 5) REQUIRE(e == 16);
    }
}

TEST_CASE("counters") {
    FieldInvariants i42 = field_invariants(make_radicand(42));
    CHECK(i42.t == 3);
    CHECK(i42.u == 1);  // 7 is free
    CHECK(i42.v == 2);
    CHECK(i42.s2 == 0);
    CHECK(i42.s4 == 0);
    CHECK(i42.n == 3);
    CHECK(i42.T == 4);  // 5, 2, 3, 7

    FieldInvariants i11 = field_invariants(make_radicand(11));
    CHECK(i11.t == 1);
    CHECK(i11.u == 0);
    CHECK(i11.v == 1);
    CHECK(i11.s4 == 1);
    CHECK(i11.s2 == 0);
    CHECK(i11.T == 2);

    FieldInvariants i149 = field_invariants(make_radicand(149));
    CHECK(i149.t == 1);
    CHECK(i149.u == 1);
    CHECK(i149.v == 0);
    CHECK(i149.s2 == 1);
    CHECK(i149.s4 == 0);
    CHECK(i149.T == 1);
}

TEST_CASE("species and conductor match every dataset row") {
    for (const FieldRecord& rec : embedded_dataset()) {
        FieldInvariants inv = field_invariants(make_radicand(rec.D));
        REQUIRE(inv.species.tag == rec.species);
        REQUIRE(inv.f4 == rec.f4);
    }
}

TEST_CASE("refined species") {
    CHECK(refined_species(make_radicand(6)) == RefinedSpecies{2, 2, 0, 2, 3, 2, 0, 0});
    CHECK(refined_species(make_radicand(5)) == RefinedSpecies{6, 0, 0, 0, 1, 0, 0, 0});
    CHECK(refined_species(make_radicand(66)) == RefinedSpecies{2, 3, 0, 3, 13, 2, 0, 1});
}

TEST_CASE("different valuations") {
    CHECK(different_valuation(5, make_radicand(5), DifferentLevel::NOverK) == 24);
    CHECK(different_valuation(5, make_radicand(2), DifferentLevel::NOverK) == 8);
    CHECK(different_valuation(2, make_radicand(2), DifferentLevel::NOverK) == 4);
    CHECK(different_valuation(3, make_radicand(2), DifferentLevel::NOverK) == 0);
    CHECK(different_valuation(5, make_radicand(7), DifferentLevel::NOverK) == 0);

    CHECK(different_valuation(5, make_radicand(5), DifferentLevel::LOverQ) == 9);
    CHECK(different_valuation(5, make_radicand(2), DifferentLevel::LOverQ) == 5);
    CHECK(different_valuation(5, make_radicand(7), DifferentLevel::LOverQ, 1) == 0);
    CHECK(different_valuation(5, make_radicand(7), DifferentLevel::LOverQ, 4) == 3);
    CHECK(different_valuation(7, make_radicand(7), DifferentLevel::LOverQ) == 4);
    CHECK(different_valuation(3, make_radicand(7), DifferentLevel::LOverQ) == 0);

    // The ambiguous case must be named explicitly.
    CHECK_THROWS_AS(different_valuation(5, make_radicand(7), DifferentLevel::LOverQ),
                    std::invalid_argument);
    CHECK_THROWS_AS(different_valuation(5, make_radicand(7), DifferentLevel::LOverQ, 2),
                    std::invalid_argument);
}

TEST_CASE("bound feed-through stays consistent") {
    for (const Radicand& d : enumerate_normalized(1000)) {
        FieldInvariants inv = field_invariants(d);
        REQUIRE(inv.T >= 1);
        REQUIRE(inv.u + inv.v == inv.t);
        REQUIRE(inv.n == inv.t - inv.s2 - inv.s4);
        REQUIRE(inv.T >= inv.t);
        REQUIRE(inv.T <= inv.t + 1);
    }
}
