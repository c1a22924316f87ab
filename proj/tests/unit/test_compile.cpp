#include "peca/compile.hpp"

#include "peca/evolve.hpp"

#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

using namespace peca;

TEST_CASE("neighborhood intensities evaluate the squared three-tap sum") {
    SUBCASE("xor weights") {
        const auto intensities = neighborhood_intensities({1.0, 0.0, -1.0});
        // n = 7..0 reads (0, 1, 0, 1, 1, 0, 1, 0).
        const std::array<double, 8> expected{0, 1, 0, 1, 1, 0, 1, 0}; // indexed by n
        for (unsigned n = 0; n < 8; ++n)
            CHECK(intensities[n] == doctest::Approx(expected[n]));
    }
    SUBCASE("zero weights") {
        for (const double v : neighborhood_intensities({0.0, 0.0, 0.0}))
            CHECK(v == 0.0);
    }
    SUBCASE("unit weights count live neighbors") {
        const auto intensities = neighborhood_intensities({1.0, 1.0, 1.0});
        CHECK(intensities[7] == doctest::Approx(9.0));
        CHECK(intensities[6] == doctest::Approx(4.0));
        CHECK(intensities[5] == doctest::Approx(4.0));
        CHECK(intensities[3] == doctest::Approx(4.0));
        CHECK(intensities[4] == doctest::Approx(1.0));
        CHECK(intensities[2] == doctest::Approx(1.0));
        CHECK(intensities[1] == doctest::Approx(1.0));
        CHECK(intensities[0] == 0.0);
    }
}

TEST_CASE("config verification enumerates all eight neighborhoods") {
    const PhotonicConfig xor_config{{1.0, 0.0, -1.0}, 0.5, {}};
    CHECK(verify_config(xor_config, RuleTable::from_number(90)));
    CHECK_FALSE(verify_config(xor_config, RuleTable::from_number(30)));

    const PhotonicConfig dark{{1.0, 0.0, -1.0}, 10.0, {}};
    CHECK(verify_config(dark, RuleTable::from_number(0)));
}

TEST_CASE("compiling the experimentally demonstrated rules") {
    SUBCASE("rule 90 reaches the xor margin") {
        const auto result = compile_rule(90);
        REQUIRE(result.feasible);
        CHECK(result.margin == doctest::Approx(1.0));
        CHECK(verify_config(*result.config, RuleTable::from_number(90)));
        CHECK(result.config->weights.center == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(std::abs(result.config->weights.left) == doctest::Approx(1.0));
        CHECK(std::abs(result.config->weights.right) == doctest::Approx(1.0));
    }
    SUBCASE("rule 30 separates with margin at least 0.2") {
        const auto result = compile_rule(30);
        REQUIRE(result.feasible);
        CHECK(result.margin >= 0.2);
        CHECK(verify_config(*result.config, RuleTable::from_number(30)));
    }
    SUBCASE("rule 54 separates with a usable margin") {
        const auto result = compile_rule(54);
        REQUIRE(result.feasible);
        CHECK(result.margin >= 0.15);
        CHECK(verify_config(*result.config, RuleTable::from_number(54)));
    }
}

TEST_CASE("degenerate rules compile by convention") {
    const auto rule0 = compile_rule(0);
    REQUIRE(rule0.feasible);
    CHECK(rule0.config->threshold > 0.0);
    CHECK(verify_config(*rule0.config, RuleTable::from_number(0)));

    // The identity rule: pass the center through.
    const auto rule204 = compile_rule(204);
    REQUIRE(rule204.feasible);
    CHECK(verify_config(*rule204.config, RuleTable::from_number(204)));
}

TEST_CASE("rules that must light the empty neighborhood are infeasible") {
    // Neighborhood 000 always detects intensity 0, never strictly above a
    // non-negative threshold, so every odd rule is infeasible.
    const auto rule255 = compile_rule(255);
    CHECK_FALSE(rule255.feasible);
    CHECK(rule255.margin == 0.0);
    CHECK_FALSE(rule255.config.has_value());
}

TEST_CASE("compile rejects bad arguments") {
    CHECK_THROWS_AS(compile_rule(-1), std::domain_error);
    CHECK_THROWS_AS(compile_rule(256), std::domain_error);
    CHECK_THROWS_AS(compile_rule(90, 2), std::domain_error);
}

TEST_CASE("census invariants") {
    static const auto census = feasibility_census(); // shared: the census is pure

    SUBCASE("every feasible entry passes verification with a positive margin") {
        for (const auto& entry : census) {
            CHECK(entry.feasible == entry.config.has_value());
            CHECK(entry.feasible == (entry.margin > 0.0));
            if (entry.feasible)
                CHECK(verify_config(*entry.config, RuleTable::from_number(entry.rule_number)));
        }
    }

    SUBCASE("odd rules are all infeasible") {
        for (int n = 1; n < 256; n += 2)
            CHECK_FALSE(census[n].feasible);
    }

    SUBCASE("the demonstrated rules and the identity are feasible") {
        CHECK(census[90].feasible);
        CHECK(census[30].feasible);
        CHECK(census[54].feasible);
        CHECK(census[204].feasible);
        CHECK(census[0].feasible);
        CHECK_FALSE(census[255].feasible);
    }

    SUBCASE("mirrored rules compile with matching feasibility and margin") {
        for (int n = 0; n < 256; ++n) {
            const int m = RuleTable::from_number(n).mirrored().number();
            CHECK(census[n].feasible == census[m].feasible);
            CHECK(census[n].margin == doctest::Approx(census[m].margin).epsilon(1e-9));
        }
    }

    SUBCASE("census is deterministic") {
        const auto again = feasibility_census();
        CHECK(census_csv_string(census) == census_csv_string(again));
    }

    SUBCASE("census matches its frozen golden table") {
        std::ifstream golden(std::string(PECA_TEST_FIXTURES) + "/census_grid41.csv");
        REQUIRE_MESSAGE(golden.good(), "golden census fixture missing");
        std::stringstream buffer;
        buffer << golden.rdbuf();
        CHECK(census_csv_string(census) == buffer.str());
    }
}

TEST_CASE("negating all weights changes nothing") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const WeightTriple w{dist(rng), dist(rng), dist(rng)};
        const WeightTriple neg{-w.left, -w.center, -w.right};
        const auto a = neighborhood_intensities(w);
        const auto b = neighborhood_intensities(neg);
        for (unsigned n = 0; n < 8; ++n)
            CHECK(a[n] == b[n]);
    }
}

TEST_CASE("feasibility is preserved under grid refinement") {
    // A refinement containing all points of the coarse grid can only keep or
    // improve each rule: 2g-1 steps contain the g-step grid exactly.
    const auto coarse = feasibility_census(11);
    const auto fine = feasibility_census(21);
    for (int n = 0; n < 256; ++n)
        if (coarse[n].feasible)
            CHECK(fine[n].feasible);
}
