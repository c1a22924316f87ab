#include "peca/rule.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace peca;

TEST_CASE("rule decoding follows the Wolfram bit convention") {
    // Neighborhoods 111,110,...,000 map to outputs read off the rule number's
    // bits, most significant neighborhood first.
    const auto expect = [](int number, std::array<std::uint8_t, 8> outputs_76543210) {
        const auto rule = RuleTable::from_number(number);
        for (unsigned n = 0; n < 8; ++n)
            CHECK(rule.output(n) == (outputs_76543210[7 - n] != 0));
    };
    expect(90, {0, 1, 0, 1, 1, 0, 1, 0});
    expect(30, {0, 0, 0, 1, 1, 1, 1, 0});
    expect(54, {0, 0, 1, 1, 0, 1, 1, 0});
    expect(0, {0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("rule number round-trips through the table for all 256 rules") {
    for (int n = 0; n < 256; ++n) {
        const auto rule = RuleTable::from_number(n);
        int encoded = 0;
        const auto outputs = rule.outputs();
        for (unsigned k = 0; k < 8; ++k)
            encoded |= outputs[k] << k;
        CHECK(encoded == n);
        CHECK(rule.number() == n);
    }
}

TEST_CASE("out-of-range rule numbers are rejected") {
    CHECK_THROWS_AS(RuleTable::from_number(-1), std::domain_error);
    CHECK_THROWS_AS(RuleTable::from_number(256), std::domain_error);
}

TEST_CASE("mirroring swaps the roles of left and right neighbors") {
    // Mirroring twice is the identity; rule 90 is its own mirror.
    for (int n = 0; n < 256; ++n) {
        const auto rule = RuleTable::from_number(n);
        CHECK(rule.mirrored().mirrored() == rule);
    }
    CHECK(RuleTable::from_number(90).mirrored().number() == 90);
    CHECK(RuleTable::from_number(30).mirrored().number() == 86);
}
