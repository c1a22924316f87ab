#include "peca/rule.hpp"

#include <stdexcept>
#include <string>

namespace peca {

RuleTable RuleTable::from_number(int number) {
    if (number < 0 || number > 255)
        throw std::domain_error("rule number must be in 0..255, got " + std::to_string(number));
    return RuleTable(static_cast<std::uint8_t>(number));
}

std::array<std::uint8_t, 8> RuleTable::outputs() const noexcept {
    std::array<std::uint8_t, 8> out{};
    for (unsigned n = 0; n < 8; ++n)
        out[n] = static_cast<std::uint8_t>(output(n));
    return out;
}

RuleTable RuleTable::mirrored() const noexcept {
    std::uint8_t bits = 0;
    for (unsigned n = 0; n < 8; ++n) {
        const unsigned l = (n >> 2) & 1u, c = (n >> 1) & 1u, r = n & 1u;
        const unsigned swapped = (r << 2) | (c << 1) | l;
        if (output(n))
            bits |= static_cast<std::uint8_t>(1u << swapped);
    }
    return RuleTable(bits);
}

} // namespace peca
