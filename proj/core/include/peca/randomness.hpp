#pragma once

#include "peca/generation.hpp"
#include "peca/rule.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace peca {

/// Bitstream read off the center column: bit t is the state of cell
/// floor(width / 2) at step t + 1 (the seed row is not part of the stream).
/// Requires width > 2 * n_bits + 1 so no boundary or wraparound effect can
/// reach the column within n_bits steps; throws std::invalid_argument
/// otherwise. Streams two rows, so arbitrarily long runs use O(width) memory.
std::vector<std::uint8_t> middle_column_bits(const RuleTable& rule, const Generation& initial,
                                             std::size_t n_bits);

struct RandomnessReport {
    std::size_t n_bits = 0;
    double monobit_z = 0.0;             ///< (2*ones - n) / sqrt(n)
    double lag1_autocorrelation = 0.0;  ///< of the +-1-mapped bits
    double runs_z = 0.0;                ///< Wald-Wolfowitz runs statistic
    double block_chi2_pvalue = 0.0;     ///< chi-square over 8-bit block histogram
    std::optional<std::size_t> period_found; ///< absent: no cycle in the window
};

/// Statistics over a bit sequence of at least 1024 bits. The period scan
/// reports the smallest p for which the tail half of the sequence is exactly
/// p-periodic (cycles up to n/4 are detectable); degenerate sequences with
/// zero variance report lag1 = 0 and runs_z = 0 and are rejected by the
/// monobit statistic instead.
RandomnessReport randomness_battery(std::span<const std::uint8_t> bits);

} // namespace peca
