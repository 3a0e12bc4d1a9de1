#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "snarkdesign/spectrum.hpp"

using namespace snarkdesign;

TEST_CASE("published spectra for small cubic graphs") {
    auto s24 = admissible_residues({24, 36, 3});
    CHECK(s24.modulus == 72);
    CHECK(s24.residues == std::set<int>{1, 64});

    auto s10 = admissible_residues({10, 15, 3});
    CHECK(s10.modulus == 15);
    CHECK(s10.residues == std::set<int>{1, 10});

    auto s18 = admissible_residues({18, 27, 3});
    CHECK(s18.modulus == 27);
    CHECK(s18.residues == std::set<int>{1});

    auto s20 = admissible_residues({20, 30, 3});
    CHECK(s20.modulus == 60);
    CHECK(s20.residues == std::set<int>{1, 16, 25, 40});

    auto s22 = admissible_residues({22, 33, 3});
    CHECK(s22.modulus == 33);
    CHECK(s22.residues == std::set<int>{1, 22});
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(admissible_residues({24, 35, 3}), InconsistentParams);
    CHECK_THROWS_AS(admissible_residues({0, 0, 3}), InconsistentParams);
}

TEST_CASE("membership matches the divisibility conditions over a full period") {
    for (auto p : {DesignParams{24, 36, 3}, DesignParams{10, 15, 3},
                   DesignParams{20, 30, 3}}) {
        auto s = admissible_residues(p);
        long long L = std::lcm(2 * p.e, p.d);
        for (long long n = 1; n <= L; ++n) {
            bool cond = (n - 1) % p.d == 0 && (n * (n - 1)) % (2 * p.e) == 0;
            CHECK(s.admits(n) == cond);
        }
    }
}

TEST_CASE("minimized modulus re-expands to the raw residue set") {
    DesignParams p{24, 36, 3};
    auto s = admissible_residues(p);
    long long L = std::lcm(2 * p.e, p.d);
    std::set<int> expanded;
    for (int r : s.residues)
        for (long long n = r; n < L; n += s.modulus) expanded.insert(static_cast<int>(n));
    std::set<int> raw;
    for (long long n = 0; n < L; ++n)
        if ((n - 1) % p.d == 0 || (p.d == 1)) {
            if (((n - 1) % p.d + p.d) % p.d == 0 && (n * (n - 1)) % (2 * p.e) == 0)
                raw.insert(static_cast<int>(n));
        }
    CHECK(expanded == raw);
}

TEST_CASE("ingredient orders are admissible") {
    auto s = admissible_residues({24, 36, 3});
    CHECK(s.admits(64));
    CHECK(s.admits(73));
    CHECK(s.admits(136));
    CHECK(s.admits(145));
}

TEST_CASE("ingredient ledger") {
    VerificationDb db;
    for (int k = 1; k <= 38; ++k)
        for (const auto& host : ingredient_hosts()) db[{k, host}] = true;

    auto row = ingredient_status(1, db);
    CHECK(row.all_verified());

    auto withheld = db;
    withheld.erase({1, "k136"});
    auto row2 = ingredient_status(1, withheld);
    CHECK_FALSE(row2.all_verified());
    CHECK(row2.slots.at("k136") == IngredientStatus::Missing);
    int verified = 0;
    for (const auto& [_, st] : row2.slots)
        if (st == IngredientStatus::Verified) ++verified;
    CHECK(verified == 8);

    auto corrupted = db;
    corrupted[{1, "k73"}] = false;
    CHECK(ingredient_status(1, corrupted).slots.at("k73") == IngredientStatus::Failed);
}

TEST_CASE("theorem check") {
    VerificationDb db;
    for (int k = 1; k <= 38; ++k)
        for (const auto& host : ingredient_hosts()) db[{k, host}] = true;
    CHECK(theorem_check(db).pass);

    auto missing = db;
    missing.erase({17, "k24x4"});
    auto rep = theorem_check(missing);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0] == "G17/k24x4: Missing");

    VerificationDb partial;  // only 37 snarks covered
    for (int k = 1; k <= 37; ++k)
        for (const auto& host : ingredient_hosts()) partial[{k, host}] = true;
    CHECK_FALSE(theorem_check(partial).pass);
}
