#include "peca/generation.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace peca;

TEST_CASE("single seed lights exactly the center cell") {
    CHECK(Generation::single_seed(5).to_string() == "00100");
    CHECK(Generation::single_seed(1).to_string() == "1");

    const auto wide = Generation::single_seed(2001);
    CHECK(wide.live_count() == 1);
    CHECK(wide.get(1000));
}

TEST_CASE("padding bits beyond the width stay zero") {
    for (const std::size_t width : {1u, 63u, 64u, 65u, 127u, 130u}) {
        auto g = Generation::random(width, 12345);
        CHECK(g.words().size() == (width + 63) / 64);
        const std::size_t tail = width % 64;
        if (tail != 0)
            CHECK((g.words().back() >> tail) == 0);
        std::size_t count = 0;
        for (std::size_t i = 0; i < width; ++i)
            count += g.get(i) ? 1 : 0;
        CHECK(count == g.live_count());
    }
}

TEST_CASE("string round-trip and cell accessors agree") {
    auto g = Generation::from_string("0110010", Boundary::Periodic);
    CHECK(g.width() == 7);
    CHECK(g.boundary() == Boundary::Periodic);
    CHECK(g.to_string() == "0110010");
    CHECK(g.first_live() == 1);
    CHECK(g.last_live() == 5);
    g.flip(0);
    CHECK(g.to_string() == "1110010");
    CHECK_THROWS_AS(g.get(7), std::out_of_range);
    CHECK_THROWS_AS(Generation::from_string("012"), std::invalid_argument);
    CHECK_THROWS_AS(Generation::from_string(""), std::invalid_argument);
}

TEST_CASE("xor combines cells and requires matching shapes") {
    const auto a = Generation::from_string("1100");
    const auto b = Generation::from_string("1010");
    CHECK((a ^ b).to_string() == "0110");
    CHECK_THROWS_AS(a ^ Generation::from_string("10"), std::invalid_argument);
}

TEST_CASE("random generations are reproducible by seed") {
    CHECK(Generation::random(999, 7) == Generation::random(999, 7));
    CHECK(Generation::random(999, 7) != Generation::random(999, 8));
}
