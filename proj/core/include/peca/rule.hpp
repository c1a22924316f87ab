#pragma once

#include <array>
#include <compare>
#include <cstdint>

namespace peca {

/// One of the 256 elementary cellular automaton rules, stored as its 8-entry
/// truth table. Entry n is the next state of a cell whose neighborhood
/// (left, center, right) encodes to n = 4*l + 2*c + r; entry n is bit n of
/// the Wolfram rule number.
class RuleTable {
public:
    static RuleTable from_number(int number);

    int number() const noexcept { return bits_; }

    bool output(unsigned neighborhood) const noexcept {
        return (bits_ >> (neighborhood & 7u)) & 1u;
    }

    std::array<std::uint8_t, 8> outputs() const noexcept;

    /// Table of the left-right mirrored automaton (swaps l and r in every
    /// neighborhood).
    RuleTable mirrored() const noexcept;

    friend bool operator==(RuleTable, RuleTable) noexcept = default;

private:
    explicit RuleTable(std::uint8_t bits) noexcept : bits_(bits) {}

    std::uint8_t bits_ = 0;
};

} // namespace peca
