#include "peca/damage.hpp"

#include "peca/evolve.hpp"

#include "doctest.h"

#include <stdexcept>

#include <cmath>

using namespace peca;

TEST_CASE("the identity rule keeps the damage to a single cell") {
    const auto init = Generation::random(101, 5);
    const auto report = damage_spreading(RuleTable::from_number(204), init, 50, 40);
    CHECK(report.lambda_left == doctest::Approx(0.0));
    CHECK(report.lambda_right == doctest::Approx(0.0));
    for (const auto& sample : report.frontiers) {
        CHECK(sample.left == 50);
        CHECK(sample.right == 50);
    }
    CHECK(report.difference.row(0).live_count() == 1);
}

TEST_CASE("rule 90 damage is the single-seed diagram relocated to the flip") {
    // The xor rule is linear: the twin difference evolves like a lone seed.
    const std::size_t width = 257, steps = 64, flip = 128;
    const auto init = Generation::random(width, 77);
    const auto report = damage_spreading(RuleTable::from_number(90), init, flip, steps);
    const auto reference = evolve(Generation::single_seed(width), RuleTable::from_number(90), steps);
    for (std::size_t t = 0; t <= steps; ++t)
        CHECK(report.difference.row(t) == reference.row(t));
}

TEST_CASE("rule 30 damage spreads rightward at exactly one cell per step") {
    const auto init = Generation::random(501, 11);
    const auto report = damage_spreading(RuleTable::from_number(30), init, 250, 100);
    REQUIRE(report.frontiers.size() == 101); // chaotic damage never dies out
    for (const auto& sample : report.frontiers)
        CHECK(sample.right == 250 + sample.step);
    CHECK(report.lambda_right == doctest::Approx(1.0));
    CHECK(report.lambda_left > 0.05);
    CHECK(report.lambda_left < 0.5);
}

TEST_CASE("frontier hitting the boundary demands a wider lattice") {
    const auto init = Generation::random(41, 2);
    CHECK_THROWS_AS(damage_spreading(RuleTable::from_number(30), init, 20, 40),
                    std::runtime_error);
}

TEST_CASE("flip index is validated") {
    const auto init = Generation::random(32, 1);
    CHECK_THROWS_AS(damage_spreading(RuleTable::from_number(30), init, 32, 4), std::domain_error);
}
